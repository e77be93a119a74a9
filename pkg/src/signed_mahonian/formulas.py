"""Closed-form product formulas, expanded exactly in Z[zeta_r][q].

Every quotient of brackets is produced as a product through
``[i r]_x = [i]_x [r]_{x^i}``; nothing here divides polynomials except
:func:`signed_quotient_r1`, which exists as an exact-division cross-check.
"""
from __future__ import annotations

from typing import Callable

from .cycring import (
    QPolynomial,
    SignedMonomial,
    exact_divide,
    q_bracket,
    q_bracket_quotient_product,
    q_factorial_pm,
)
from .perm import CharacterSpec, ColoredWord, character, fmaj, inv, maj


class PreconditionError(ValueError):
    """Parameters fall outside the range where an identity is stated."""


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise PreconditionError(msg)


def zq(r: int, h: int = 0, sign: int = 1) -> SignedMonomial:
    """The bracket base ``sign * zeta^h * q``."""
    return SignedMonomial(r, sign, h, 1)


def qr(r: int, sign: int = 1) -> SignedMonomial:
    """The bracket base ``sign * q^r``."""
    return SignedMonomial(r, sign, 0, r)


def _prod(r: int, lo: int, hi: int, size: Callable[[int], int],
          base: Callable[[int], SignedMonomial]) -> QPolynomial:
    out = QPolynomial.one(r)
    for i in range(lo, hi + 1):
        out = out * q_bracket(size(i), base(i))
    return out


def _alt(r: int, h: int, lo: int, hi: int, eps: int = -1) -> QPolynomial:
    """prod_{i=lo}^{hi} [i r]_{eps^(i-1) zeta^h q}."""
    return _prod(r, lo, hi, lambda i: i * r, lambda i: zq(r, h, eps ** (i - 1)))


def _prefactor(W: ColoredWord, spec: CharacterSpec) -> QPolynomial:
    c = character(W, spec)
    return QPolynomial(W.r, {fmaj(W): c})


# -- introduction -------------------------------------------------------------------

def gessel_simion(n: int, r: int = 1) -> QPolynomial:
    """``[1]_q [2]_{-q} ... [n]_{(-1)^(n-1) q}``; r only selects the coefficient ring."""
    _require(n >= 1, "n >= 1")
    return q_factorial_pm(n, zq(r))


def adin_gessel_roichman(n: int) -> QPolynomial:
    """``[2]_{-q} [4]_q ... [2n]_{(-1)^n q}`` over Z[zeta_2]."""
    _require(n >= 1, "n >= 1")
    return _prod(2, 1, n, lambda i: 2 * i, lambda i: zq(2, 0, (-1) ** i))


def biagioli_caselli(r: int, n: int, spec: CharacterSpec) -> QPolynomial:
    """``[r]_{zeta^h q} [2r]_{eps zeta^h q} ... [nr]_{eps^(n-1) zeta^h q}``."""
    _require(n >= 1, "n >= 1")
    spec.check(r)
    return _alt(r, spec.h, 1, n, spec.epsilon)


def caselli_sn(n: int, k: int) -> QPolynomial:
    """Signed major index over S_n(n-k+1:n)."""
    _require(1 <= k <= n - 1, "1 <= k <= n-1")
    out = q_bracket(k + 1, zq(1, 0, (-1) ** (n * k + n + k)))
    return out * _prod(1, k + 2, n, lambda i: i, lambda i: zq(1, 0, (-1) ** (i - 1)))


def fmaj_coset(r: int, n: int, k: int) -> QPolynomial:
    """``[(k+1)r]_q ... [nr]_q``."""
    _require(1 <= k <= n - 1, "1 <= k <= n-1")
    return _prod(r, k + 1, n, lambda i: i * r, lambda i: zq(r))


# -- parabolic quotients by G_{r,k} ---------------------------------------------------

def thm_main_coset(r: int, n: int, k: int, b: int, spec: CharacterSpec) -> QPolynomial:
    _require(1 <= k <= n - 1, "1 <= k <= n-1")
    _require(k <= b <= n, "k <= b <= n")
    _require((n - b) % 2 == 0, "b = n (mod 2)")
    spec.check(r)
    eps, h = spec.epsilon, spec.h
    if (n - k) % 2 == 0:
        return _alt(r, h, k + 1, n, eps)
    head = q_bracket(k + 1, qr(r, eps)) * q_bracket(r, zq(r, h))
    return head * _alt(r, h, k + 2, n, eps)


def f_closed(r: int, h: int = 0) -> QPolynomial:
    """``-(zeta^h q) [r-1]_{(-1)^r zeta^h q} [r]_{(-1)^(r-1) zeta^h q}``."""
    _require(r >= 1, "r >= 1")
    x = zq(r, h)
    return -(x.as_poly() * q_bracket(r - 1, x.with_sign((-1) ** r))
             * q_bracket(r, x.with_sign((-1) ** (r - 1))))


def f_defining_sum(r: int, h: int = 0) -> QPolynomial:
    """``sum_{t=1}^{r-1} x^t (-1 - x - ... - x^(t-1) + x^t + ... + x^(r-1))``, x = zeta^h q."""
    _require(r >= 1, "r >= 1")
    x = zq(r, h)
    out = QPolynomial.zero(r)
    for t in range(1, r):
        xt = (x ** t).as_poly()
        out = out + xt * (xt * q_bracket(r - t, x) - q_bracket(t, x))
    return out


def thm_UV(r: int, n: int, k: int, b: int, h: int) -> QPolynomial:
    """Combined chi_{-1,h} sums over the U- and V-restricted sets.

    For k odd this is the sum over G(U) plus the sum over G(V); for k even
    it is the sum over the two set differences.
    """
    _require(1 <= k <= n - 1, "1 <= k <= n-1")
    _require(k + 1 <= b <= n, "k+1 <= b <= n")
    _require((n - b) % 2 == 0, "b = n (mod 2)")
    _require(0 <= h < r, "0 <= h < r")
    tail3 = _alt(r, h, k + 3, n)
    if k % 2 == 1:
        if n % 2 == 0:
            return 2 * q_bracket(k + 1, qr(r, -1)) * _alt(r, h, k + 2, n)
        return (2 * q_bracket(k + 1, qr(r, -1)) * q_bracket(k + 2, qr(r))
                * q_bracket(r, zq(r, h)) * tail3)
    if n % 2 == 1:
        return 2 * q_bracket(k + 1, qr(r, -1)) * (q_bracket(r, zq(r, h)) - 1) * _alt(r, h, k + 2, n)
    return 2 * f_closed(r, h) * q_bracket(k + 1, qr(r)) * q_bracket(k + 2, qr(r, -1)) * tail3


# -- parabolic quotients by S_k ---------------------------------------------------------

def _signed_bases(r: int, h: int, n: int, eps: int = -1) -> list[SignedMonomial]:
    return [zq(r, h, eps ** (i - 1)) for i in range(1, n + 1)]


def thm_main_II(r: int, n: int, k: int, b: int, h: int) -> QPolynomial:
    _require(1 <= k <= n - 1, "1 <= k <= n-1")
    _require(k <= b <= n, "k <= b <= n")
    _require(0 <= h < r, "0 <= h < r")
    bases = _signed_bases(r, h, n)
    if k % 2 == 1:
        return q_bracket_quotient_product(r, n, k, bases)
    core = q_bracket_quotient_product(r, n, k + 1, bases)
    extra = q_bracket(k + 1, zq(r, h, (-1) ** n))
    if (n - b) % 2 == 0:
        return core * extra
    return core * (2 - extra)


def signed_quotient_r1(n: int, k: int, b: int) -> QPolynomial:
    """The r = 1 signed sum over S_n(b-k+1:b), via exact division of
    signed q-factorials."""
    _require(1 <= k <= n - 1, "1 <= k <= n-1")
    _require(k <= b <= n, "k <= b <= n")
    num = q_factorial_pm(n, zq(1))
    if k % 2 == 1:
        return exact_divide(num, q_factorial_pm(k, zq(1)))
    core = exact_divide(num, q_factorial_pm(k + 1, zq(1)))
    extra = q_bracket(k + 1, zq(1, 0, (-1) ** n))
    return core * extra if (n - b) % 2 == 0 else core * (2 - extra)


# -- insertion results -----------------------------------------------------------------

def thm_epsilon1_rhs(W: ColoredWord, r: int, n: int, h: int, variant: str) -> QPolynomial:
    """chi_{1,h}-sum over G_{r,n}(W).

    variant "i": W misses exactly one value of [n];
    variant "ii": W lives on {n-k+1, ..., n}.
    """
    _require(W.r == r, "word has a different r")
    support = set(W.values)
    spec = CharacterSpec(1, h)
    if variant == "i":
        _require(len(support) == n - 1 and support <= set(range(1, n + 1)),
                 "support must be [n] minus one value")
        return _prefactor(W, spec) * q_bracket(n * r, zq(r, h))
    if variant == "ii":
        k = len(W)
        _require(1 <= k <= n - 1 and support == set(range(n - k + 1, n + 1)),
                 "support must be {n-k+1..n} with 1 <= k <= n-1")
        return _prefactor(W, spec) * _alt(r, h, k + 1, n, 1)
    raise PreconditionError(f"unknown variant {variant!r}")


def thm_main_III_rhs(W: ColoredWord, r: int, n: int, h: int, variant: str) -> QPolynomial:
    """chi_{-1,h}-sum over G_{r,n}(W).

    variant "i": W misses two consecutive values m, m+1;
    variant "ii": W lives on {2k+1, ..., n}, 1 <= k <= (n-1)//2.
    """
    _require(W.r == r, "word has a different r")
    support = set(W.values)
    spec = CharacterSpec(-1, h)
    if variant == "i":
        missing = sorted(set(range(1, n + 1)) - support)
        _require(support <= set(range(1, n + 1)) and len(missing) == 2
                 and missing[1] == missing[0] + 1, "support must be [n] minus {m, m+1}")
        return (_prefactor(W, spec) * q_bracket((n - 1) * r, zq(r, h, (-1) ** n))
                * q_bracket(n * r, zq(r, h, (-1) ** (n - 1))))
    if variant == "ii":
        _require((n - len(W)) % 2 == 0, "support size must have the parity of n")
        k = (n - len(W)) // 2
        _require(1 <= k <= (n - 1) // 2 and support == set(range(2 * k + 1, n + 1)),
                 "support must be {2k+1..n} with 1 <= k <= (n-1)//2")
        return _prefactor(W, spec) * _alt(r, h, n - 2 * k + 1, n)
    raise PreconditionError(f"unknown variant {variant!r}")


def lemma_insertion_rhs(k: int, r: int, h: int) -> QPolynomial:
    """``[k+1]_{-q^r} [r]_{zeta^h q}``."""
    _require(k >= 1, "k >= 1")
    return q_bracket(k + 1, qr(r, -1)) * q_bracket(r, zq(r, h))


# -- fibers, D-major index, words ---------------------------------------------------------

def _fiber_factor(r: int, h: int, n: int) -> QPolynomial:
    x = zq(r, h)
    return _prod(r, 1, n, lambda i: r, lambda i: x ** i)


def thm_main_I(w, r: int, spec: CharacterSpec) -> QPolynomial:
    """``eps^inv(w) (zeta^h q)^maj(w) [r]_{zeta^h q} [r]_{(zeta^h q)^2} ... [r]_{(zeta^h q)^n}``."""
    w = tuple(w)
    _require(sorted(w) == list(range(1, len(w) + 1)), "w must be a permutation of [n]")
    spec.check(r)
    m = maj(w)
    lead = QPolynomial.monomial(r, m, spec.h * m, spec.epsilon ** inv(w))
    return lead * _fiber_factor(r, spec.h, len(w))


def thm_dmaj_fiber(w, r: int, epsilon: int) -> QPolynomial:
    """``eps^inv(w) q^maj(w) [r]_q [r]_{q^2} ... [r]_{q^(n-1)}``."""
    w = tuple(w)
    _require(sorted(w) == list(range(1, len(w) + 1)), "w must be a permutation of [n]")
    lead = QPolynomial.monomial(r, maj(w), 0, epsilon ** inv(w))
    return lead * _fiber_factor(r, 0, len(w) - 1)


def thm_dmaj_group(r: int, n: int, epsilon: int) -> QPolynomial:
    """``[r]_q [2r]_{eps q} ... [(n-1)r]_{eps^(n-2) q} [n]_{eps^(n-1) q}``.

    The last bracket has size n, not nr.
    """
    _require(n >= 1, "n >= 1")
    head = _prod(r, 1, n - 1, lambda i: i * r, lambda i: zq(r, 0, epsilon ** (i - 1)))
    return head * q_bracket(n, zq(r, 0, epsilon ** (n - 1)))


def remark7_H_alpha(r: int, n: int, alpha, h: int) -> QPolynomial:
    """chi_{1,h}-sum over H_{r,n}(alpha):
    ``(zeta^h q)^maj(alpha) prod_{i<=n}[ir]_{zeta^h q} / prod_{i<=k}[i]_{zeta^h q}``."""
    alpha = tuple(alpha)
    k = len(alpha)
    _require(1 <= k <= n, "1 <= len(alpha) <= n")
    _require(len(set(alpha)) == k and all(1 <= a <= n for a in alpha),
             "alpha must have distinct values in [n]")
    _require(0 <= h < r, "0 <= h < r")
    m = maj(alpha)
    lead = QPolynomial.monomial(r, m, h * m)
    bases = [zq(r, h)] * n
    return lead * q_bracket_quotient_product(r, n, k, bases)

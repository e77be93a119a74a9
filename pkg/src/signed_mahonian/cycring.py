"""Exact arithmetic in Z[zeta_r] and Z[zeta_r][q].

Elements of the cyclotomic ring are stored reduced modulo the r-th
cyclotomic polynomial, so that e.g. ``1 + zeta == 0`` when r = 2.
Polynomials in q are sparse maps from exponent to coefficient.
"""
from __future__ import annotations

import cmath
import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping, Sequence


def _poly_divmod_monic(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    # integer polynomials, low-to-high, den monic
    num = list(num)
    d = len(den) - 1
    if len(num) - 1 < d:
        return [0], num
    quot = [0] * (len(num) - d)
    for i in range(len(num) - 1, d - 1, -1):
        a = num[i]
        if a:
            quot[i - d] = a
            for j in range(d + 1):
                num[i - d + j] -= a * den[j]
    return quot, num[:d] or [0]


@lru_cache(maxsize=None)
def _cyclotomic(r: int) -> tuple[int, ...]:
    num = [-1] + [0] * (r - 1) + [1]
    for d in range(1, r):
        if r % d == 0:
            num, rem = _poly_divmod_monic(num, list(_cyclotomic(d)))
            assert not any(rem)
    return tuple(num)


def cyclotomic_polynomial(r: int) -> list[int]:
    """Coefficients (constant term first) of the r-th cyclotomic polynomial.

    >>> cyclotomic_polynomial(6)
    [1, -1, 1]
    """
    if not isinstance(r, int) or r < 1:
        raise ValueError(f"cyclotomic order must be a positive integer, got {r!r}")
    return list(_cyclotomic(r))


def euler_phi(r: int) -> int:
    return len(_cyclotomic(r)) - 1


def _reduce(r: int, c: Sequence[int]) -> tuple[int, ...]:
    phi = _cyclotomic(r)
    d = len(phi) - 1
    c = list(c)
    for i in range(len(c) - 1, d - 1, -1):
        a = c[i]
        if a:
            for j in range(d):
                c[i - d + j] -= a * phi[j]
    c = c[:d]
    if len(c) < d:
        c.extend([0] * (d - len(c)))
    return tuple(c)


@lru_cache(maxsize=None)
def _zeta_table(r: int) -> tuple[tuple[int, ...], ...]:
    rows = []
    for j in range(r):
        v = [0] * (j + 1)
        v[j] = 1
        rows.append(_reduce(r, v))
    return tuple(rows)


def _check_same_r(a, b) -> None:
    if a.r != b.r:
        raise ValueError(f"mismatched cyclotomic orders {a.r} and {b.r}")


class CycCoeff:
    """An element of Z[zeta_r], zeta a primitive r-th root of unity.

    ``coeffs[i]`` is the coefficient of ``zeta**i`` after reduction, so the
    tuple has exactly ``euler_phi(r)`` entries and equality is plain tuple
    equality.
    """

    __slots__ = ("r", "coeffs")

    def __init__(self, r: int, coeffs: Iterable[int] = ()):
        if r < 1:
            raise ValueError("r must be positive")
        self.r = r
        self.coeffs = _reduce(r, [int(c) for c in coeffs])

    @classmethod
    def _raw(cls, r: int, coeffs: tuple[int, ...]) -> "CycCoeff":
        obj = object.__new__(cls)
        obj.r = r
        obj.coeffs = coeffs
        return obj

    @classmethod
    def integer(cls, r: int, value: int) -> "CycCoeff":
        d = euler_phi(r)
        return cls._raw(r, (int(value),) + (0,) * (d - 1))

    @classmethod
    def zeta_power(cls, r: int, j: int, sign: int = 1) -> "CycCoeff":
        row = _zeta_table(r)[j % r]
        if sign == 1:
            return cls._raw(r, row)
        return cls._raw(r, tuple(sign * c for c in row))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_integer(self) -> bool:
        return not any(self.coeffs[1:])

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = CycCoeff.integer(self.r, other)
        if not isinstance(other, CycCoeff):
            return NotImplemented
        return self.r == other.r and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.r, self.coeffs))

    def _coerce(self, other) -> "CycCoeff":
        if isinstance(other, int):
            return CycCoeff.integer(self.r, other)
        if not isinstance(other, CycCoeff):
            raise TypeError(f"cannot combine CycCoeff with {type(other).__name__}")
        _check_same_r(self, other)
        return other

    def __add__(self, other) -> "CycCoeff":
        other = self._coerce(other)
        return CycCoeff._raw(self.r, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> "CycCoeff":
        return CycCoeff._raw(self.r, tuple(-a for a in self.coeffs))

    def __sub__(self, other) -> "CycCoeff":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "CycCoeff":
        return self._coerce(other) - self

    def __mul__(self, other) -> "CycCoeff":
        other = self._coerce(other)
        return CycCoeff._raw(self.r, _reduce(self.r, _convolve(self.coeffs, other.coeffs)))

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "CycCoeff":
        if e < 0:
            raise ValueError("negative powers are not supported")
        result = CycCoeff.integer(self.r, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def unit_power(self) -> tuple[int, int] | None:
        """Return (sign, j) when self == sign * zeta**j, else None."""
        for j, row in enumerate(_zeta_table(self.r)):
            if row == self.coeffs:
                return 1, j
            if all(a == -b for a, b in zip(row, self.coeffs)):
                return -1, j
        return None

    def evaluate(self, zeta: complex | None = None) -> complex:
        if zeta is None:
            zeta = cmath.exp(2j * cmath.pi / self.r)
        return sum(c * zeta**i for i, c in enumerate(self.coeffs))

    def to_text(self, var: str = "z") -> str:
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
            if mono and abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        if not parts:
            return "0"
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            out += f"{sign}{body}"
        return out

    def __repr__(self) -> str:
        return f"CycCoeff(r={self.r}, {self.to_text()})"


def _convolve(a: Sequence[int], b: Sequence[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


def cyc_add(a: CycCoeff, b: CycCoeff) -> CycCoeff:
    return a + b


def cyc_mul(a: CycCoeff, b: CycCoeff) -> CycCoeff:
    return a * b


def cyc_neg(a: CycCoeff) -> CycCoeff:
    return -a


class QPolynomial:
    """Sparse polynomial in q over Z[zeta_r]. Zero coefficients are never stored."""

    __slots__ = ("r", "_terms")

    def __init__(self, r: int, terms: Mapping[int, CycCoeff | int | Sequence[int]] | None = None):
        self.r = r
        self._terms: dict[int, tuple[int, ...]] = {}
        for e, c in (terms or {}).items():
            if e < 0:
                raise ValueError("q exponents must be non-negative")
            if isinstance(c, CycCoeff):
                _check_same_r(self, c)
                vec = c.coeffs
            elif isinstance(c, int):
                vec = CycCoeff.integer(r, c).coeffs
            else:
                vec = CycCoeff(r, c).coeffs
            if any(vec):
                self._terms[int(e)] = vec

    @classmethod
    def _raw(cls, r: int, terms: dict[int, tuple[int, ...]]) -> "QPolynomial":
        obj = object.__new__(cls)
        obj.r = r
        obj._terms = terms
        return obj

    @classmethod
    def zero(cls, r: int) -> "QPolynomial":
        return cls._raw(r, {})

    @classmethod
    def one(cls, r: int) -> "QPolynomial":
        return cls.monomial(r, 0)

    @classmethod
    def monomial(cls, r: int, q_exp: int, zeta_exp: int = 0, sign: int = 1) -> "QPolynomial":
        if q_exp < 0:
            raise ValueError("q exponents must be non-negative")
        return cls._raw(r, {q_exp: CycCoeff.zeta_power(r, zeta_exp, sign).coeffs})

    @classmethod
    def from_histogram(cls, r: int, counts: Mapping[tuple[int, int], int]) -> "QPolynomial":
        """Build sum of ``count * zeta**j * q**e`` over ``{(e, j): count}``."""
        table = _zeta_table(r)
        d = euler_phi(r)
        acc: dict[int, list[int]] = {}
        for (e, j), c in counts.items():
            if not c:
                continue
            row = table[j % r]
            vec = acc.setdefault(e, [0] * d)
            for i, x in enumerate(row):
                if x:
                    vec[i] += c * x
        return cls._raw(r, {e: tuple(v) for e, v in acc.items() if any(v)})

    # -- access -----------------------------------------------------------
    def terms(self) -> dict[int, CycCoeff]:
        return {e: CycCoeff._raw(self.r, v) for e, v in sorted(self._terms.items())}

    def coefficient(self, e: int) -> CycCoeff:
        vec = self._terms.get(e)
        if vec is None:
            return CycCoeff.integer(self.r, 0)
        return CycCoeff._raw(self.r, vec)

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self) -> int:
        return max(self._terms) if self._terms else -1

    def low_degree(self) -> int:
        return min(self._terms) if self._terms else -1

    def __len__(self) -> int:
        return len(self._terms)

    # -- ring operations ----------------------------------------------------
    def _coerce(self, other) -> "QPolynomial":
        if isinstance(other, QPolynomial):
            _check_same_r(self, other)
            return other
        if isinstance(other, int):
            return QPolynomial(self.r, {0: other})
        if isinstance(other, CycCoeff):
            _check_same_r(self, other)
            return QPolynomial(self.r, {0: other})
        raise TypeError(f"cannot combine QPolynomial with {type(other).__name__}")

    def __add__(self, other) -> "QPolynomial":
        other = self._coerce(other)
        out = dict(self._terms)
        for e, v in other._terms.items():
            if e in out:
                s = tuple(a + b for a, b in zip(out[e], v))
                if any(s):
                    out[e] = s
                else:
                    del out[e]
            else:
                out[e] = v
        return QPolynomial._raw(self.r, out)

    __radd__ = __add__

    def __neg__(self) -> "QPolynomial":
        return QPolynomial._raw(self.r, {e: tuple(-a for a in v) for e, v in self._terms.items()})

    def __sub__(self, other) -> "QPolynomial":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "QPolynomial":
        return self._coerce(other) - self

    def __mul__(self, other) -> "QPolynomial":
        other = self._coerce(other)
        r = self.r
        acc: dict[int, list[int]] = {}
        for e1, v1 in self._terms.items():
            for e2, v2 in other._terms.items():
                conv = _convolve(v1, v2)
                slot = acc.get(e1 + e2)
                if slot is None:
                    acc[e1 + e2] = conv
                else:
                    for i, x in enumerate(conv):
                        slot[i] += x
        out = {}
        for e, vec in acc.items():
            red = _reduce(r, vec)
            if any(red):
                out[e] = red
        return QPolynomial._raw(r, out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "QPolynomial":
        if e < 0:
            raise ValueError("negative powers are not supported")
        result = QPolynomial.one(self.r)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def shift(self, k: int) -> "QPolynomial":
        """Multiply by q**k."""
        if k < 0 and self._terms and min(self._terms) + k < 0:
            raise ValueError("shift would produce a negative exponent")
        return QPolynomial._raw(self.r, {e + k: v for e, v in self._terms.items()})

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, CycCoeff)):
            other = self._coerce(other)
        if not isinstance(other, QPolynomial):
            return NotImplemented
        return self.r == other.r and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.r, tuple(sorted(self._terms.items()))))

    def evaluate(self, q: complex, zeta: complex | None = None) -> complex:
        return sum(CycCoeff._raw(self.r, v).evaluate(zeta) * q**e for e, v in self._terms.items())

    # -- serialization ------------------------------------------------------
    def to_data(self) -> list:
        return [[e, list(v)] for e, v in sorted(self._terms.items())]

    def to_json(self) -> str:
        return json.dumps(self.to_data(), separators=(",", ":"))

    @classmethod
    def from_data(cls, r: int, data: Iterable) -> "QPolynomial":
        d = euler_phi(r)
        terms = {}
        for e, vec in data:
            if len(vec) != d:
                raise ValueError(f"coefficient vector of length {len(vec)}, expected {d}")
            if e in terms:
                raise ValueError(f"duplicate exponent {e}")
            terms[e] = list(vec)
        return cls(r, terms)

    @classmethod
    def from_json(cls, r: int, text: str) -> "QPolynomial":
        return cls.from_data(r, json.loads(text))

    def to_text(self, var: str = "q") -> str:
        if not self._terms:
            return "0"
        out = []
        for e, v in sorted(self._terms.items()):
            c = CycCoeff._raw(self.r, v)
            mono = "" if e == 0 else (var if e == 1 else f"{var}^{e}")
            if c.is_integer():
                n = v[0]
                if mono and abs(n) == 1:
                    piece, neg = mono, n < 0
                else:
                    piece, neg = f"{abs(n)}{mono}", n < 0
            else:
                piece, neg = f"({c.to_text()}){mono}", False
            if not out:
                out.append(("-" if neg else "") + piece)
            else:
                out.append(("-" if neg else "+") + piece)
        return "".join(out)

    def __repr__(self) -> str:
        return f"QPolynomial(r={self.r}, {self.to_text()})"


def poly_add(p: QPolynomial, q: QPolynomial) -> QPolynomial:
    return p + q


def poly_mul(p: QPolynomial, q: QPolynomial) -> QPolynomial:
    return p * q


def poly_neg(p: QPolynomial) -> QPolynomial:
    return -p


def poly_equals(p: QPolynomial, q: QPolynomial) -> bool:
    _check_same_r(p, q)
    return p == q


def exact_divide(num: QPolynomial, den: QPolynomial) -> QPolynomial:
    """Divide ``num`` by ``den`` in Z[zeta][q], requiring a zero remainder.

    The divisor's leading coefficient must be a unit of the form
    +-zeta**j, which covers every q-bracket.
    """
    _check_same_r(num, den)
    if den.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    r = num.r
    top = den.degree()
    unit = den.coefficient(top).unit_power()
    if unit is None:
        raise ValueError("leading coefficient of the divisor is not a unit +-zeta^j")
    sign, j = unit
    inv_lead = CycCoeff.zeta_power(r, -j, sign)
    rem = num
    quot = QPolynomial.zero(r)
    while not rem.is_zero() and rem.degree() >= top:
        e = rem.degree() - top
        c = rem.coefficient(rem.degree()) * inv_lead
        step = QPolynomial._raw(r, {e: c.coeffs})
        quot = quot + step
        rem = rem - step * den
    if not rem.is_zero():
        raise ArithmeticError(f"division is not exact; remainder {rem.to_text()}")
    return quot


@dataclass(frozen=True)
class SignedMonomial:
    """The monomial ``sign * zeta**zeta_exp * q**q_exp`` used as a bracket base."""

    r: int
    sign: int = 1
    zeta_exp: int = 0
    q_exp: int = 1

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        if self.q_exp < 0:
            raise ValueError("q exponent must be non-negative")
        object.__setattr__(self, "zeta_exp", self.zeta_exp % self.r)

    def __pow__(self, i: int) -> "SignedMonomial":
        return SignedMonomial(self.r, self.sign**i, self.zeta_exp * i, self.q_exp * i)

    def __mul__(self, other: "SignedMonomial") -> "SignedMonomial":
        _check_same_r(self, other)
        return SignedMonomial(self.r, self.sign * other.sign,
                              self.zeta_exp + other.zeta_exp, self.q_exp + other.q_exp)

    def __neg__(self) -> "SignedMonomial":
        return SignedMonomial(self.r, -self.sign, self.zeta_exp, self.q_exp)

    def with_sign(self, sign: int) -> "SignedMonomial":
        return SignedMonomial(self.r, self.sign * sign, self.zeta_exp, self.q_exp)

    def as_poly(self) -> QPolynomial:
        return QPolynomial.monomial(self.r, self.q_exp, self.zeta_exp, self.sign)


def q_bracket(k: int, x: SignedMonomial) -> QPolynomial:
    """``[k]_x = 1 + x + ... + x**(k-1)``; ``[0]_x`` is zero."""
    if k < 0:
        raise ValueError("bracket size must be non-negative")
    r = x.r
    acc: dict[tuple[int, int], int] = {}
    for i in range(k):
        key = (x.q_exp * i, (x.zeta_exp * i) % r)
        acc[key] = acc.get(key, 0) + (x.sign ** i)
    return QPolynomial.from_histogram(r, acc)


def q_factorial_pm(n: int, x: SignedMonomial) -> QPolynomial:
    """``[1]_x [2]_{-x} ... [n]_{(-1)^(n-1) x}``."""
    if n < 1:
        raise ValueError("n must be at least 1")
    out = QPolynomial.one(x.r)
    for i in range(1, n + 1):
        out = out * q_bracket(i, x.with_sign((-1) ** (i - 1)))
    return out


def bracket_product(factors: Iterable[tuple[int, SignedMonomial]], r: int) -> QPolynomial:
    out = QPolynomial.one(r)
    for k, x in factors:
        out = out * q_bracket(k, x)
    return out


def q_bracket_quotient_product(r: int, n: int, k: int,
                               bases: Sequence[SignedMonomial]) -> QPolynomial:
    """Evaluate ``prod_{i<=n} [i r]_{b_i} / prod_{i<=k} [i]_{b_i}`` without division.

    Uses ``[i r]_x = [i]_x [r]_{x^i}``. ``bases[i-1]`` is the base b_i.
    """
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
    if len(bases) < n:
        raise ValueError("need one base per index 1..n")
    out = QPolynomial.one(r)
    for i in range(1, n + 1):
        b = bases[i - 1]
        if i <= k:
            out = out * q_bracket(r, b ** i)
        else:
            out = out * q_bracket(i * r, b)
    return out

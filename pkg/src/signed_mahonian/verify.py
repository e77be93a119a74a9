"""Exhaustive verification of every identity over parameter grids.

Each identity is compared as an exact polynomial equality, or, for the
per-element statements, checked element by element. Failures keep the
difference polynomial so a wrong bracket factor can be located.
"""
from __future__ import annotations

import itertools
import json
import random
import time
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator

from . import formulas as F
from .cycring import CycCoeff, QPolynomial, q_bracket, SignedMonomial
from .maps import (
    _contains_uncolored,
    algorithm_A,
    eq48_bijection,
    in_hierarchy,
    in_star_hierarchy,
    phi,
    prop41_backward,
    prop41_case,
    prop41_forward,
    star,
    uv_words,
)
from .perm import (
    CharacterSpec,
    ColoredWord,
    character,
    col,
    colored_inverse,
    des_F,
    dmaj,
    fmaj,
    inv,
    maj,
    maj_F,
)
from .sets import (
    colored_words,
    enumerate as enumerate_set,
    insert_pair_at,
    insertion_pair,
    insertion_single,
    insertion_majF_predicted,
    rl_space_labeling,
)
from .table import group_table


@dataclass
class VerificationReport:
    theorem: str
    params: dict
    status: str  # "pass", "fail" or "skip"
    difference: QPolynomial | None = None
    first_mismatch: dict | None = None
    detail: str | None = None
    instances: int = 1
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_dict(self, timing: bool = False) -> dict:
        out = {"theorem": self.theorem, "params": self.params, "status": self.status,
               "instances": self.instances}
        if self.difference is not None:
            out["difference"] = self.difference.to_data()
        if self.first_mismatch is not None:
            out["first_mismatch"] = self.first_mismatch
        if self.detail is not None:
            out["detail"] = self.detail
        if timing:
            out["elapsed"] = round(self.elapsed, 6)
        return out

    def to_json(self, timing: bool = False) -> str:
        return json.dumps(self.to_dict(timing), sort_keys=True, separators=(",", ":"))


def _compare(lhs: QPolynomial, rhs: QPolynomial) -> tuple[QPolynomial | None, dict | None]:
    diff = lhs - rhs
    if diff.is_zero():
        return None, None
    e = diff.low_degree()
    return diff, {"q_exp": e, "lhs": list(lhs.coefficient(e).coeffs),
                  "rhs": list(rhs.coefficient(e).coeffs)}


class Skip(Exception):
    pass


# -- identity catalog ------------------------------------------------------------------

@dataclass
class Identity:
    id: str
    description: str
    points: Callable[[list[int], list[int]], Iterator[dict]]
    check: Callable[[dict], object]
    r: tuple[int, ...] = (1, 2, 3)
    n: tuple[int, ...] = (1, 2, 3, 4, 5)
    pointwise: bool = False


CATALOG: dict[str, Identity] = {}


def _register(id, description, r=(1, 2, 3), n=(1, 2, 3, 4, 5), pointwise=False):
    def deco(fn):
        points, check = fn()
        CATALOG[id] = Identity(id, description, points, check, tuple(r), tuple(n), pointwise)
        return fn
    return deco


def _specs(r: int, eps=(1, -1)):
    for e in eps:
        for h in range(r):
            yield e, h


def _sum(r, n, mask, e, h, stat="fmaj"):
    return group_table(r, n).signed_sum(mask, CharacterSpec(e, h), stat)


@_register("gs", "signed major index over S_n", r=(1,), n=(1, 2, 3, 4, 5, 6, 7))
def _gs():
    def points(rs, ns):
        for n in ns:
            yield {"n": n}

    def check(p):
        T = group_table(1, p["n"])
        return T.signed_sum(T.mask("full"), CharacterSpec(-1, 0)), F.gessel_simion(p["n"])
    return points, check


@_register("agr", "sign character and fmaj over B_n", r=(2,))
def _agr():
    def points(rs, ns):
        for n in ns:
            yield {"n": n}

    def check(p):
        T = group_table(2, p["n"])
        return T.signed_sum(T.mask("full"), CharacterSpec(-1, 1)), F.adin_gessel_roichman(p["n"])
    return points, check


@_register("bc", "every one-dimensional character over G_{r,n}", r=(1, 2, 3, 4))
def _bc():
    def points(rs, ns):
        for r in rs:
            for n in ns:
                for e, h in _specs(r):
                    yield {"r": r, "n": n, "epsilon": e, "h": h}

    def check(p):
        r, n = p["r"], p["n"]
        spec = CharacterSpec(p["epsilon"], p["h"])
        T = group_table(r, n)
        return T.signed_sum(T.mask("full"), spec), F.biagioli_caselli(r, n, spec)
    return points, check


@_register("eq14", "signed maj over S_n(n-k+1:n)", r=(1,), n=(2, 3, 4, 5, 6, 7))
def _eq14():
    def points(rs, ns):
        for n in ns:
            for k in range(1, n):
                yield {"n": n, "k": k}

    def check(p):
        n, k = p["n"], p["k"]
        T = group_table(1, n)
        return T.signed_sum(T.mask(f"sub {n - k + 1}:{n}"), CharacterSpec(-1, 0)), F.caselli_sn(n, k)
    return points, check


@_register("coset-fmaj", "fmaj of inverses of the coset representatives C_k")
def _coset():
    def points(rs, ns):
        for r in rs:
            for n in ns:
                for k in range(1, n):
                    yield {"r": r, "n": n, "k": k}

    def check(p):
        r, n, k = p["r"], p["n"], p["k"]
        hist: dict = {}
        inverses = set()
        for pi in enumerate_set(r, n, f"coset {k}"):
            ip = colored_inverse(pi)
            inverses.add(ip)
            hist[(fmaj(ip), 0)] = hist.get((fmaj(ip), 0), 0) + 1
        lhs = QPolynomial.from_histogram(r, hist)
        restricted = set(enumerate_set(r, n, f"sub {n - k + 1}:{n}"))
        if restricted != inverses:
            raise AssertionError("inverses of C_k differ from G(n-k+1:n)")
        return lhs, F.fmaj_coset(r, n, k)
    return points, check


@_register("t22", "chi-sum over G_{r,n}(b-k+1:b)")
def _t22():
    def points(rs, ns):
        for r in rs:
            for n in ns:
                for k in range(1, n):
                    for b in range(k, n + 1):
                        for e, h in _specs(r):
                            yield {"r": r, "n": n, "k": k, "b": b, "epsilon": e, "h": h}

    def check(p):
        r, n, k, b = p["r"], p["n"], p["k"], p["b"]
        spec = CharacterSpec(p["epsilon"], p["h"])
        rhs = F.thm_main_coset(r, n, k, b, spec)
        T = group_table(r, n)
        return T.signed_sum(T.mask(f"sub {b - k + 1}:{b}"), spec), rhs
    return points, check


@_register("t22-b", "chi-sum over G_{r,n}(b-k+1:b) does not depend on b")
def _t22b():
    def points(rs, ns):
        for r in rs:
            for n in ns:
                for k in range(1, n):
                    for e, h in _specs(r):
                        yield {"r": r, "n": n, "k": k, "epsilon": e, "h": h}

    def check(p):
        r, n, k = p["r"], p["n"], p["k"]
        T = group_table(r, n)
        spec = CharacterSpec(p["epsilon"], p["h"])
        sums = [T.signed_sum(T.mask(f"sub {b - k + 1}:{b}"), spec)
                for b in range(k, n + 1) if (n - b) % 2 == 0]
        if len(sums) < 2:
            raise Skip("fewer than two admissible b")
        bad = [i for i, s in enumerate(sums) if s != sums[0]]
        return sums[bad[0]] if bad else sums[0], sums[0]
    return points, check


@_register("t24", "chi_{-1,h}-sums over the U/V restricted sets", n=(3, 4, 5))
def _t24():
    def points(rs, ns):
        for r in rs:
            for n in ns:
                for k in range(1, n):
                    for b in range(k + 1, n + 1):
                        for h in range(r):
                            yield {"r": r, "n": n, "k": k, "b": b, "h": h}

    def check(p):
        r, n, k, b, h = p["r"], p["n"], p["k"], p["b"], p["h"]
        rhs = F.thm_UV(r, n, k, b, h)
        T = group_table(r, n)
        mu = T.mask(f"sub {b - k}:{b - 1}")
        mv = T.mask(f"sub {b - k + 1}:{b}")
        spec = CharacterSpec(-1, h)
        if k % 2:
            lhs = T.signed_sum(mu, spec) + T.signed_sum(mv, spec)
        else:
            lhs = T.signed_sum(mu & ~mv, spec) + T.signed_sum(mv & ~mu, spec)
        return lhs, rhs
    return points, check


@_register("t26", "chi_{-1,h}-sum over H_{r,n}(b-k+1:b)")
def _t26():
    def points(rs, ns):
        for r in rs:
            for n in ns:
                for k in range(1, n):
                    for b in range(k, n + 1):
                        for h in range(r):
                            yield {"r": r, "n": n, "k": k, "b": b, "h": h}

    def check(p):
        r, n, k, b, h = p["r"], p["n"], p["k"], p["b"], p["h"]
        T = group_table(r, n)
        return (T.signed_sum(T.mask(f"abs-sub {b - k + 1}:{b}"), CharacterSpec(-1, h)),
                F.thm_main_II(r, n, k, b, h))
    return points, check


@_register("t43", "signed maj over S_n(b-k+1:b) via exact division", r=(1,), n=(2, 3, 4, 5, 6, 7))
def _t43():
    def points(rs, ns):
        for n in ns:
            for k in range(1, n):
                for b in range(k, n + 1):
                    yield {"n": n, "k": k, "b": b}

    def check(p):
        n, k, b = p["n"], p["k"], p["b"]
        T = group_table(1, n)
        lhs = T.signed_sum(T.mask(f"abs-sub {b - k + 1}:{b}"), CharacterSpec(-1, 0))
        rhs = F.signed_quotient_r1(n, k, b)
        if rhs != F.thm_main_II(1, n, k, b, 0):
            raise AssertionError("division-free and exact-division forms disagree")
        return lhs, rhs
    return points, check


def _sample_words(r, supports, limit, seed):
    words = [(key, W) for key, sup in supports for W in colored_words(r, sup)]
    if limit is None or len(words) <= limit:
        return words
    return random.Random(seed).sample(words, limit)


def _insertion_theorem(variant_supports, rhs_fn, eps):
    def points(rs, ns):
        for r in rs:
            for n in ns:
                for variant in ("i", "ii"):
                    if variant_supports(n, variant):
                        yield {"r": r, "n": n, "variant": variant}

    def check(p):
        r, n, variant = p["r"], p["n"], p["variant"]
        limit = None if n <= 4 else 100
        words = _sample_words(r, variant_supports(n, variant), limit, seed=1000 * r + n)
        T = group_table(r, n)
        failures = []
        for key, W in words:
            m = T.mask_word(W)
            for h in range(r):
                lhs = T.signed_sum(m, CharacterSpec(eps, h))
                if lhs != rhs_fn(W, r, n, h, variant):
                    failures.append(f"W={W} ({key}) h={h}")
        return failures, len(words)
    return points, check


def _supports_t32(n, variant):
    full = set(range(1, n + 1))
    if variant == "i":
        return [(f"m={m}", full - {m}) for m in range(1, n + 1)]
    return [(f"k={k}", set(range(n - k + 1, n + 1))) for k in range(1, n)]


def _supports_t35(n, variant):
    full = set(range(1, n + 1))
    if variant == "i":
        return [(f"m={m}", full - {m, m + 1}) for m in range(1, n)]
    return [(f"k={k}", set(range(2 * k + 1, n + 1))) for k in range(1, (n - 1) // 2 + 1)]


@_register("t32", "chi_{1,h}-sum over G_{r,n}(W), exhaustive in W", pointwise=True)
def _t32():
    return _insertion_theorem(_supports_t32, F.thm_epsilon1_rhs, 1)


@_register("t35", "chi_{-1,h}-sum over G_{r,n}(W), exhaustive in W", pointwise=True)
def _t35():
    return _insertion_theorem(_supports_t35, F.thm_main_III_rhs, -1)


def _word_sum(words: Iterable[ColoredWord], spec: CharacterSpec, r: int) -> QPolynomial:
    hist: dict = {}
    for W in words:
        key = (fmaj(W), (spec.h * col(W)) % r)
        hist[key] = hist.get(key, 0) + spec.epsilon ** inv(W.values)
    return QPolynomial.from_histogram(r, hist)


@_register("lem-insert", "inserting (n-k)^t into the word (n-k+1, ..., n)")
def _lem_insert():
    def points(rs, ns):
        for r in rs:
            for n in ns:
                for k in range(1, n):
                    for h in range(r):
                        yield {"r": r, "n": n, "k": k, "h": h}

    def check(p):
        r, n, k, h = p["r"], p["n"], p["k"], p["h"]
        W = ColoredWord.uncolored(r, range(n - k + 1, n + 1))
        words = [Wp for t in range(r) for Wp in insertion_single(W, n - k, t)]
        return _word_sum(words, CharacterSpec(-1, h), r), F.lemma_insertion_rhs(k, r, h)
    return points, check


@_register("t51", "chi-sum over the fiber G_{r,n}(w)", n=(1, 2, 3, 4))
def _t51():
    def points(rs, ns):
        for r in rs:
            for n in ns:
                for w in itertools.permutations(range(1, n + 1)):
                    for e, h in _specs(r):
                        yield {"r": r, "n": n, "w": list(w), "epsilon": e, "h": h}

    def check(p):
        r, n, w = p["r"], p["n"], tuple(p["w"])
        spec = CharacterSpec(p["epsilon"], p["h"])
        T = group_table(r, n)
        return T.signed_sum(T.mask_fiber(w), spec), F.thm_main_I(w, r, spec)
    return points, check


@_register("t61-fiber", "signed Dmaj over the fiber G*_{r,n}(w)", r=(2, 3, 4))
def _t61f():
    def points(rs, ns):
        for r in rs:
            for n in ns:
                for e in (1, -1):
                    yield {"r": r, "n": n, "epsilon": e}

    def check(p):
        r, n, e = p["r"], p["n"], p["epsilon"]
        T = group_table(r, n)
        failures, count = [], 0
        for w in itertools.permutations(range(1, n + 1)):
            count += 1
            lhs = T.signed_sum(T.star & T.mask_fiber(w), CharacterSpec(e, 0), "dmaj")
            if lhs != F.thm_dmaj_fiber(w, r, e):
                failures.append(f"w={w}")
        return failures, count
    return points, check


@_register("t61-group", "signed Dmaj over G*_{r,n}", r=(2, 3, 4))
def _t61g():
    def points(rs, ns):
        for r in rs:
            for n in ns:
                for e in (1, -1):
                    yield {"r": r, "n": n, "epsilon": e}

    def check(p):
        r, n, e = p["r"], p["n"], p["epsilon"]
        T = group_table(r, n)
        return T.signed_sum(T.star, CharacterSpec(e, 0), "dmaj"), F.thm_dmaj_group(r, n, e)
    return points, check


def _alphas(n: int, max_len: int = 3):
    for k in range(1, min(max_len, n) + 1):
        yield from itertools.permutations(range(1, n + 1), k)


@_register("r7-halpha", "chi_{1,h}-sum over H_{r,n}(alpha)", n=(1, 2, 3, 4))
def _r7():
    def points(rs, ns):
        for r in rs:
            for n in ns:
                for alpha in _alphas(n):
                    for h in range(r):
                        yield {"r": r, "n": n, "alpha": list(alpha), "h": h}

    def check(p):
        r, n, alpha, h = p["r"], p["n"], tuple(p["alpha"]), p["h"]
        T = group_table(r, n)
        return T.signed_sum(T.mask_abs_word(alpha), CharacterSpec(1, h)), F.remark7_H_alpha(r, n, alpha, h)
    return points, check


@_register("r7-sim", "H_{r,n}(alpha) and H_{r,n}(alpha+1) share the chi_{1,h}-sum", n=(2, 3, 4))
def _r7sim():
    def points(rs, ns):
        for r in rs:
            for n in ns:
                for alpha in _alphas(n - 1):
                    for h in range(r):
                        yield {"r": r, "n": n, "alpha": list(alpha), "h": h}

    def check(p):
        r, n, alpha, h = p["r"], p["n"], tuple(p["alpha"]), p["h"]
        T = group_table(r, n)
        spec = CharacterSpec(1, h)
        shifted = tuple(a + 1 for a in alpha)
        return T.signed_sum(T.mask_abs_word(shifted), spec), T.signed_sum(T.mask_abs_word(alpha), spec)
    return points, check


def _f_identity():
    def points(rs, ns):
        for r in rs:
            for h in range(r):
                yield {"r": r, "h": h}

    def check(p):
        return F.f_defining_sum(p["r"], p["h"]), F.f_closed(p["r"], p["h"])
    return points, check


_EIGHT = tuple(range(1, 9))
_register("f-closed", "closed form of the f(r; q) factor", r=_EIGHT)(_f_identity)
_register("f-sum", "defining sum of the f(r; q) factor", r=_EIGHT)(_f_identity)


# -- per-element lemmas ------------------------------------------------------------------

def lemma_failures(id: str, inst: dict) -> list[str]:
    """Check one instance of a per-element statement; return failure messages."""
    fn = _POINTWISE.get(id)
    if fn is None:
        raise KeyError(f"unknown pointwise lemma {id!r}")
    return fn(inst)


def _pw_lem34(inst):
    W, m, t, j, desc = inst["W"], inst["m"], inst["t"], inst["j"], inst["descending"]
    lab = rl_space_labeling(W, m, t)
    pred = insertion_majF_predicted(W, lab, desc, j)
    actual = maj_F(insert_pair_at(W, m, t, j, desc))
    return [] if pred == actual else [f"W={W} m={m} t={t} j={j} desc={desc}: {pred} != {actual}"]


def _pw_lem52(inst):
    w, r = tuple(inst["w"]), inst["r"]
    tw = algorithm_A(w, r)
    out = []
    if fmaj(tw) != maj(w):
        out.append(f"fmaj(tilde w)={fmaj(tw)} != maj(w)={maj(w)}")
    for e, h in _specs(r):
        expect = CycCoeff.zeta_power(r, h * maj(w), e ** inv(w))
        if character(tw, CharacterSpec(e, h)) != expect:
            out.append(f"character mismatch at eps={e} h={h}")
    fiber = list(enumerate_set(r, len(w), "fiber " + ",".join(map(str, w))))
    best = min(fmaj(p) for p in fiber)
    minimizers = [p for p in fiber if fmaj(p) == best]
    if minimizers != [tw]:
        out.append(f"fmaj minimizers {list(map(str, minimizers))} != [tilde w]")
    return out


def _pw_lem54(inst):
    pi, w, k, t = inst["pi"], tuple(inst["w"]), inst["k"], inst["t"]
    if not in_hierarchy(pi, w, k - 1):
        raise Skip("pi outside G^(k-1)(w)")
    img = phi(pi, k, t)
    out = []
    if fmaj(img) != fmaj(pi) + k * t:
        out.append(f"{pi} k={k} t={t}: fmaj {fmaj(img)} != {fmaj(pi)} + {k * t}")
    if not in_hierarchy(img, w, k):
        out.append(f"{pi} k={k} t={t}: image leaves G^(k)(w)")
    for e, h in _specs(pi.r):
        spec = CharacterSpec(e, h)
        if character(img, spec) != character(pi, spec) * CycCoeff.zeta_power(pi.r, h * k * t):
            out.append(f"{pi} k={k} t={t}: character relation fails at eps={e} h={h}")
    return out


def _pw_lem63(inst):
    pi, w, k, t = inst["pi"], tuple(inst["w"]), inst["k"], inst["t"]
    if not in_star_hierarchy(pi, w, k - 1):
        raise Skip("pi outside G*^(k-1)(w)")
    img = star(phi(pi, k, t))
    out = []
    if dmaj(img) != dmaj(pi) + k * t:
        out.append(f"{pi} k={k} t={t}: Dmaj {dmaj(img)} != {dmaj(pi)} + {k * t}")
    if not in_star_hierarchy(img, w, k):
        out.append(f"{pi} k={k} t={t}: image leaves G*^(k)(w)")
    return out


def _pw_lem62(inst):
    w, r = tuple(inst["w"]), inst["r"]
    tws = star(algorithm_A(w, r))
    out = []
    if dmaj(tws) != maj(w):
        out.append(f"Dmaj(tilde w*)={dmaj(tws)} != maj(w)={maj(w)}")
    fiber = list(enumerate_set(r, len(w), "star-fiber " + ",".join(map(str, w))))
    best = min(dmaj(p) for p in fiber)
    minimizers = [p for p in fiber if dmaj(p) == best]
    if minimizers != [tws]:
        out.append(f"Dmaj minimizers {list(map(str, minimizers))} != [tilde w*]")
    return out


def _pw_prop41(inst):
    pi, k, b = inst["pi"], inst["k"], inst["b"]
    case, j = prop41_case(pi, k, b)
    img = prop41_forward(pi, k, b)
    out = []
    U, V = uv_words(k, b)
    if not _contains_uncolored(img, V) or _contains_uncolored(img, U):
        out.append(f"{pi}: image {img} not in G(V) minus G(U)")
    if des_F(img) != des_F(pi):
        out.append(f"{pi}: Des changed")
    if col(img) != col(pi):
        out.append(f"{pi}: col changed")
    parity = (inv(img.values) - inv(pi.values)) % 2
    want = k % 2 if case == "colored" else (k - 1) % 2
    if parity != want:
        out.append(f"{pi}: inv parity shift {parity}, expected {want} ({case})")
    if case == "colored":
        pos = img.values.index(b - k)
        if img.colors[pos] != j:
            out.append(f"{pi}: image lacks ({b - k})^{j}")
    if prop41_backward(img, k, b) != pi:
        out.append(f"{pi}: backward map does not invert")
    return out


def _pw_eq48(inst):
    W, low, s, t = inst["W"], inst["low"], inst["s"], inst["t"]
    img = eq48_bijection(W, low, s, t)
    out = []
    if fmaj(img) - fmaj(W) != s - t:
        out.append(f"{W}: fmaj shift {fmaj(img) - fmaj(W)} != {s - t}")
    sign = 1 if s >= t else -1
    for h in range(W.r):
        spec = CharacterSpec(-1, h)
        if character(img, spec) != character(W, spec) * CycCoeff.zeta_power(W.r, h * (s - t), sign):
            out.append(f"{W}: character scaling fails at h={h}")
    return out


def _pw_cor_shift(inst):
    W, r, n = inst["W"], inst["r"], inst["n"]
    T = group_table(r, n)
    m1, m2 = T.mask_word(W), T.mask_word(W.shifted(-2))
    out = []
    for e, h in _specs(r):
        spec = CharacterSpec(e, h)
        if T.signed_sum(m1, spec) != T.signed_sum(m2, spec):
            out.append(f"W={W} eps={e} h={h}")
    return out


_POINTWISE = {
    "lem34": _pw_lem34, "lem52": _pw_lem52, "lem54": _pw_lem54, "lem62": _pw_lem62,
    "lem63": _pw_lem63, "prop41": _pw_prop41, "eq48": _pw_eq48, "cor-shift": _pw_cor_shift,
}


def verify_pointwise_lemma(id: str, instance: dict) -> VerificationReport:
    start = time.perf_counter()
    params = {k: (str(v) if isinstance(v, ColoredWord) else v) for k, v in instance.items()}
    try:
        failures = lemma_failures(id, instance)
    except (Skip, ValueError) as exc:
        return VerificationReport(id, params, "skip", detail=str(exc), instances=0,
                                  elapsed=time.perf_counter() - start)
    status = "fail" if failures else "pass"
    return VerificationReport(id, params, status, detail=failures[0] if failures else None,
                              elapsed=time.perf_counter() - start)


def _grouped(id, instances: Callable[[dict], Iterable[dict]]):
    def check(p):
        failures, count = [], 0
        for inst in instances(p):
            try:
                failures.extend(lemma_failures(id, inst))
            except Skip:
                continue
            count += 1
        return failures, count
    return check


def _lem34_instances(p):
    r, n, m = p["r"], p["n"], p["m"]
    for W in colored_words(r, set(range(1, n + 1)) - {m, m + 1}):
        for t in range(r):
            for j in range(len(W) + 1):
                for desc in (False, True):
                    yield {"W": W, "m": m, "t": t, "j": j, "descending": desc}


def _rn_m_points(offset):
    def points(rs, ns):
        for r in rs:
            for n in ns:
                for m in range(1, n + 1 - offset):
                    yield {"r": r, "n": n, "m": m}
    return points


CATALOG["lem34"] = Identity("lem34", "maj_F after inserting an adjacent pair, from RL/LR labels",
                            _rn_m_points(1), _grouped("lem34", _lem34_instances), pointwise=True)


def _eq31_check(p):
    r, n, m = p["r"], p["n"], p["m"]
    failures, count = [], 0
    for W in colored_words(r, set(range(1, n + 1)) - {m}):
        for t in range(r):
            count += 1
            hist: dict = {}
            for Wp in insertion_single(W, m, t):
                hist[(maj_F(Wp), 0)] = hist.get((maj_F(Wp), 0), 0) + 1
            lhs = QPolynomial.from_histogram(r, hist)
            rhs = q_bracket(len(W) + 1, SignedMonomial(r)).shift(maj_F(W))
            if lhs != rhs:
                failures.append(f"W={W} m={m} t={t}")
    return failures, count


def _eq33_check(p):
    r, n, m = p["r"], p["n"], p["m"]
    failures, count = [], 0
    rhs_core = (q_bracket(n - 1, SignedMonomial(r, (-1) ** n))
                * q_bracket(n, SignedMonomial(r, (-1) ** (n - 1))))
    for W in colored_words(r, set(range(1, n + 1)) - {m, m + 1}):
        for t in range(r):
            count += 1
            hist: dict = {}
            for Wp in insertion_pair(W, m, t, t):
                key = (maj_F(Wp), 0)
                hist[key] = hist.get(key, 0) + (-1) ** inv(Wp.values)
            lhs = QPolynomial.from_histogram(r, hist)
            rhs = (-1) ** inv(W.values) * rhs_core.shift(maj_F(W))
            if lhs != rhs:
                failures.append(f"W={W} m={m} t={t}")
    return failures, count


CATALOG["eq31"] = Identity("eq31", "maj_F over all single insertions", _rn_m_points(0), _eq31_check,
                           pointwise=True)
CATALOG["eq33"] = Identity("eq33", "signed maj_F over adjacent same-color pair insertions",
                           _rn_m_points(1), _eq33_check, n=(2, 3, 4, 5), pointwise=True)


def _w_points(rs, ns):
    for r in rs:
        for n in ns:
            for w in itertools.permutations(range(1, n + 1)):
                yield {"r": r, "n": n, "w": list(w)}


CATALOG["lem52"] = Identity("lem52", "Algorithm A lift: fmaj, character and unique minimality",
                            _w_points, _grouped("lem52", lambda p: [p]), n=(1, 2, 3, 4, 5), pointwise=True)
CATALOG["lem62"] = Identity("lem62", "starred Algorithm A lift: Dmaj and unique minimality",
                            _w_points, _grouped("lem62", lambda p: [p]), r=(2, 3, 4), pointwise=True)


def _hier_instances(star_mode):
    def gen(p):
        r, n, w = p["r"], p["n"], tuple(p["w"])
        kmax = n - 1 if star_mode else n
        spec = ("star-fiber " if star_mode else "fiber ") + ",".join(map(str, w))
        fiber = list(enumerate_set(r, n, spec))
        member = in_star_hierarchy if star_mode else in_hierarchy
        for k in range(1, kmax + 1):
            for pi in fiber:
                if member(pi, w, k - 1):
                    for t in range(r):
                        yield {"pi": pi, "w": w, "k": k, "t": t}
    return gen


CATALOG["lem54"] = Identity("lem54", "prefix color shift raises fmaj by k*t along the hierarchy",
                            _w_points, _grouped("lem54", _hier_instances(False)), n=(1, 2, 3, 4),
                            pointwise=True)
CATALOG["lem63"] = Identity("lem63", "starred prefix color shift raises Dmaj by k*t",
                            _w_points, _grouped("lem63", _hier_instances(True)), r=(2, 3, 4),
                            pointwise=True)


def _prop41_points(rs, ns):
    for r in rs:
        for n in ns:
            for k in range(1, n):
                for b in range(k + 1, n + 1):
                    yield {"r": r, "n": n, "k": k, "b": b}


def _prop41_check(p):
    r, n, k, b = p["r"], p["n"], p["k"], p["b"]
    T = group_table(r, n)
    mu = T.mask(f"sub {b - k}:{b - 1}")
    mv = T.mask(f"sub {b - k + 1}:{b}")
    domain = list(T.members(mu & ~mv))
    codomain = set(T.members(mv & ~mu))
    failures = []
    images = set()
    for pi in domain:
        failures.extend(lemma_failures("prop41", {"pi": pi, "k": k, "b": b}))
        images.add(prop41_forward(pi, k, b))
    if len(images) != len(domain):
        failures.append("forward map is not injective")
    if images != codomain:
        failures.append(f"image has {len(images)} elements, target set {len(codomain)}")
    return failures, len(domain)


CATALOG["prop41"] = Identity("prop41", "relabeling bijection between U- and V-restricted sets",
                             _prop41_points, _prop41_check, n=(2, 3, 4, 5), pointwise=True)


def _eq48_points(rs, ns):
    for r in rs:
        for n in ns:
            for k in range(1, n - 1):
                for t in range(1, r):
                    for s in range(r):
                        yield {"r": r, "n": n, "k": k, "s": s, "t": t}


def _eq48_check(p):
    r, n, k, s, t = p["r"], p["n"], p["k"], p["s"], p["t"]
    V = ColoredWord.uncolored(r, range(n - k + 1, n + 1))
    low = n - k - 1
    domain = list(insertion_pair(V, low, t, t))
    target = set(insertion_pair(V, low, s, t))
    failures = []
    images = set()
    for W in domain:
        failures.extend(lemma_failures("eq48", {"W": W, "low": low, "s": s, "t": t}))
        images.add(eq48_bijection(W, low, s, t))
    if len(images) != len(domain) or images != target:
        failures.append("recoloring is not a bijection onto the target set")
    return failures, len(domain)


CATALOG["eq48"] = Identity("eq48", "recoloring bijection of the adjacent pair", _eq48_points, _eq48_check,
                           n=(3, 4, 5), pointwise=True)


def _cor_points(rs, ns):
    for r in rs:
        for n in ns:
            for k in range(1, n - 1):
                for b in range(k + 2, n + 1):
                    yield {"r": r, "n": n, "k": k, "b": b}


def _cor_instances(p):
    r, n, k, b = p["r"], p["n"], p["k"], p["b"]
    for W in colored_words(r, range(b - k + 1, b + 1)):
        yield {"W": W, "r": r, "n": n}


CATALOG["cor-shift"] = Identity("cor-shift", "sums over G_{r,n}(W-2) and G_{r,n}(W) agree",
                                _cor_points, _grouped("cor-shift", _cor_instances), n=(3, 4, 5),
                                pointwise=True)


# -- drivers ----------------------------------------------------------------------------------

def default_grid(id: str) -> dict:
    ident = CATALOG[id]
    return {"r": list(ident.r), "n": list(ident.n)}


def _run_point(ident: Identity, params: dict) -> VerificationReport:
    start = time.perf_counter()
    try:
        result = ident.check(params)
    except Skip as exc:
        return VerificationReport(ident.id, params, "skip", detail=str(exc),
                                  instances=0, elapsed=time.perf_counter() - start)
    except F.PreconditionError as exc:
        return VerificationReport(ident.id, params, "skip", detail=f"precondition: {exc}",
                                  instances=0, elapsed=time.perf_counter() - start)
    except AssertionError as exc:
        return VerificationReport(ident.id, params, "fail", detail=str(exc),
                                  elapsed=time.perf_counter() - start)
    elapsed = time.perf_counter() - start
    a, b = result
    if isinstance(a, list):
        return VerificationReport(ident.id, params, "fail" if a else "pass",
                                  detail=f"{len(a)} failures; first: {a[0]}" if a else None,
                                  instances=b, elapsed=elapsed)
    diff, first = _compare(a, b)
    return VerificationReport(ident.id, params, "fail" if diff is not None else "pass",
                              difference=diff, first_mismatch=first, elapsed=elapsed)


def verify_identity(id: str, grid: dict | None = None, scale: int = 0) -> Iterator[VerificationReport]:
    """One report per grid point, in grid order; never stops at a failure.

    ``grid`` may override the default ``r`` and ``n`` ranges; ``scale``
    extends the default n range by that many values.
    """
    if id not in CATALOG:
        raise KeyError(f"unknown identity {id!r}; known: {', '.join(sorted(CATALOG))}")
    ident = CATALOG[id]
    g = default_grid(id)
    if scale:
        top = max(g["n"])
        g["n"] = g["n"] + list(range(top + 1, top + 1 + scale))
    if grid:
        g.update({k: list(v) for k, v in grid.items() if v is not None})
    for params in ident.points(g["r"], g["n"]):
        yield _run_point(ident, params)


def verify_all(scale: int = 0, ids: Iterable[str] | None = None) -> Iterator[VerificationReport]:
    for id in (ids or CATALOG):
        yield from verify_identity(id, scale=scale)

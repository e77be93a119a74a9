"""Restricted subsets of G_{r,n}, insertion machinery and the brute-force sum."""
from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator

from .cycring import QPolynomial
from .perm import (
    CharacterSpec,
    ColoredPermutation,
    ColoredWord,
    col,
    dmaj,
    f_key,
    fmaj,
    in_star_group,
    inv,
    maj_F,
    parse_entries,
)

KINDS = ("full", "sub", "word", "abs-sub", "fiber", "star", "star-fiber", "coset")


@dataclass(frozen=True)
class RestrictionSpec:
    """Which subset of G_{r,n} to enumerate.

    ``param`` depends on ``kind``:

    * ``full``, ``star`` -- None
    * ``sub`` -- (a, b): words containing the uncolored run a, a+1, ..., b
    * ``word`` -- a :class:`ColoredWord` that must occur as a subsequence
    * ``abs-sub`` -- a tuple alpha that |pi| must contain as a subsequence
    * ``fiber``, ``star-fiber`` -- a permutation w; members have |pi| = w
    * ``coset`` -- k: last k entries uncolored and increasing
    """

    kind: str
    param: object = None

    @classmethod
    def parse(cls, text: str, r: int = 1) -> "RestrictionSpec":
        parts = text.strip().split(None, 1)
        if not parts:
            raise ValueError("empty restriction")
        kind = parts[0]
        arg = parts[1].strip() if len(parts) > 1 else ""
        if kind not in KINDS:
            raise ValueError(f"unknown restriction kind {kind!r}; expected one of {', '.join(KINDS)}")
        if kind in ("full", "star"):
            if arg:
                raise ValueError(f"{kind} takes no argument")
            return cls(kind)
        if not arg:
            raise ValueError(f"{kind} needs an argument")
        if kind == "coset":
            return cls(kind, int(arg))
        if kind in ("sub", "abs-sub") and ":" in arg:
            a, b = (int(x) for x in arg.split(":"))
            if kind == "sub":
                return cls(kind, (a, b))
            return cls(kind, tuple(range(a, b + 1)))
        if kind == "word":
            entries = parse_entries(arg)
            return cls(kind, ColoredWord(r, tuple(v for v, _ in entries), tuple(c for _, c in entries)))
        entries = parse_entries(arg)
        if any(c for _, c in entries):
            raise ValueError(f"{kind} takes an uncolored word")
        return cls(kind, tuple(v for v, _ in entries))

    def to_text(self) -> str:
        if self.kind in ("full", "star"):
            return self.kind
        if self.kind == "sub":
            return f"sub {self.param[0]}:{self.param[1]}"
        if self.kind == "coset":
            return f"coset {self.param}"
        if self.kind == "word":
            return f"word {self.param}"
        return f"{self.kind} " + ",".join(map(str, self.param))

    def restricting_word(self, r: int) -> ColoredWord | None:
        if self.kind == "sub":
            a, b = self.param
            return ColoredWord.uncolored(r, range(a, b + 1))
        if self.kind == "word":
            return self.param
        return None

    def validate(self, r: int, n: int) -> None:
        if r < 1 or n < 1:
            raise ValueError("need r >= 1 and n >= 1")
        k = self.kind
        if k == "sub":
            a, b = self.param
            if not 1 <= a <= b <= n:
                raise ValueError(f"sub {a}:{b} outside [1, {n}]")
            if b - a + 1 == n and n > 1:
                raise ValueError("run length must be at most n - 1")
        elif k == "word":
            w = self.param
            if w.r != r:
                raise ValueError("word has a different r")
            if any(v > n for v in w.values):
                raise ValueError(f"word support not inside [1, {n}]")
        elif k == "abs-sub":
            alpha = self.param
            if len(set(alpha)) != len(alpha) or any(not 1 <= v <= n for v in alpha):
                raise ValueError(f"{alpha} is not a word of distinct values in [1, {n}]")
        elif k in ("fiber", "star-fiber"):
            if sorted(self.param) != list(range(1, n + 1)):
                raise ValueError(f"{self.param} is not a permutation of [{n}]")
        elif k == "coset":
            if not 0 <= self.param <= n - 1:
                raise ValueError(f"coset k={self.param} must lie in [0, n-1]")


def contains_subsequence(word, alpha) -> bool:
    it = iter(word)
    return all(any(x == a for x in it) for a in alpha)


def contains_colored_subsequence(pi: ColoredWord, W: ColoredWord) -> bool:
    """True iff the colored entries of W occur in pi in the same order."""
    return contains_subsequence(zip(pi.values, pi.colors), zip(W.values, W.colors))


def _member(pi: ColoredPermutation, spec: RestrictionSpec) -> bool:
    k = spec.kind
    if k == "full":
        return True
    if k in ("sub", "word"):
        return contains_colored_subsequence(pi, spec.restricting_word(pi.r))
    if k == "abs-sub":
        return contains_subsequence(pi.values, spec.param)
    if k == "star":
        return in_star_group(pi)
    if k == "coset":
        kk = spec.param
        if kk == 0:
            return True
        tail_v = pi.values[-kk:]
        return not any(pi.colors[-kk:]) and all(a < b for a, b in zip(tail_v, tail_v[1:]))
    raise AssertionError(k)


def enumerate(r: int, n: int, spec: RestrictionSpec | str = "full") -> Iterator[ColoredPermutation]:
    """Yield each member once, lexicographically by sigma and then colors."""
    if isinstance(spec, str):
        spec = RestrictionSpec.parse(spec, r)
    spec.validate(r, n)
    if spec.kind in ("fiber", "star-fiber"):
        w = tuple(spec.param)
        for cols in itertools.product(range(r), repeat=n):
            if spec.kind == "star-fiber" and sum(cols) % r:
                continue
            yield ColoredPermutation(r, w, cols)
        return
    for sigma in itertools.permutations(range(1, n + 1)):
        if spec.kind == "abs-sub" and not contains_subsequence(sigma, spec.param):
            continue
        for cols in itertools.product(range(r), repeat=n):
            pi = ColoredPermutation(r, sigma, cols)
            if _member(pi, spec):
                yield pi


def signed_mahonian_sum(members: Iterable[ColoredWord], spec: CharacterSpec) -> QPolynomial:
    """Sum of ``chi_{eps,h}(pi) q^{fmaj(pi)}`` computed element by element."""
    hist: Counter = Counter()
    r = None
    for pi in members:
        if r is None:
            r = pi.r
            spec.check(r)
        elif pi.r != r:
            raise ValueError("members come from different groups")
        sign = spec.epsilon ** inv(pi.values)
        hist[(fmaj(pi), (spec.h * col(pi)) % r)] += sign
    if r is None:
        raise ValueError("cannot infer r from an empty stream")
    return QPolynomial.from_histogram(r, hist)


def dmaj_signed_sum(members: Iterable[ColoredPermutation], epsilon: int) -> QPolynomial:
    """Sum of ``eps^{inv|pi|} q^{Dmaj(pi)}`` over members of G*_{r,n}."""
    hist: Counter = Counter()
    r = None
    for pi in members:
        r = pi.r if r is None else r
        hist[(dmaj(pi), 0)] += epsilon ** inv(pi.values)
    if r is None:
        raise ValueError("cannot infer r from an empty stream")
    return QPolynomial.from_histogram(r, hist)


# -- insertion ----------------------------------------------------------------

def _insert(W: ColoredWord, j: int, block: list[tuple[int, int]]) -> ColoredWord:
    vals = W.values[:j] + tuple(v for v, _ in block) + W.values[j:]
    cols = W.colors[:j] + tuple(c for _, c in block) + W.colors[j:]
    return ColoredWord(W.r, vals, cols)


def insertion_single(W: ColoredWord, m: int, t: int) -> Iterator[ColoredWord]:
    """T(W; m^t): the len(W)+1 words obtained by inserting m^t somewhere."""
    if m in W.support:
        raise ValueError(f"{m} already occurs in the word")
    if not 0 <= t < W.r:
        raise ValueError("color out of range")
    for j in range(len(W) + 1):
        yield _insert(W, j, [(m, t)])


def insertion_pair(W: ColoredWord, m: int, s: int, t: int) -> Iterator[ColoredWord]:
    """T(W; m^s, (m+1)^t): both orders of the adjacent pair at every space."""
    if m in W.support or m + 1 in W.support:
        raise ValueError(f"{m} or {m + 1} already occurs in the word")
    if not (0 <= s < W.r and 0 <= t < W.r):
        raise ValueError("color out of range")
    for j in range(len(W) + 1):
        yield _insert(W, j, [(m, s), (m + 1, t)])
        yield _insert(W, j, [(m + 1, t), (m, s)])


@dataclass(frozen=True)
class SpaceLabeling:
    rl: tuple[bool, ...]
    labels: tuple[int, ...]
    rl_right: tuple[int, ...]

    @property
    def d(self) -> int:
        return sum(self.rl)


def rl_space_labeling(W: ColoredWord, m: int, t: int) -> SpaceLabeling:
    """Classify the spaces 0..len(W) of W as RL or LR relative to m^t.

    Space j sits between W_j and W_{j+1}. RL-spaces get labels 0..d-1 from
    right to left, LR-spaces get d..len(W) from left to right.
    """
    if m in W.support:
        raise ValueError(f"{m} already occurs in the word")
    k = W.keys()
    x = f_key(m, t)
    L = len(k)
    rl = []
    for j in range(L + 1):
        if L == 0:
            rl.append(True)
        elif j == 0:
            rl.append(x < k[0])
        elif j == L:
            rl.append(k[L - 1] < x)
        else:
            a, b = k[j - 1], k[j]
            rl.append(a > b > x or x > a > b or a < x < b)
    d = sum(rl)
    labels = [0] * (L + 1)
    nxt = 0
    for j in range(L, -1, -1):
        if rl[j]:
            labels[j] = nxt
            nxt += 1
    nxt = d
    for j in range(L + 1):
        if not rl[j]:
            labels[j] = nxt
            nxt += 1
    right = [sum(rl[j + 1:]) for j in range(L + 1)]
    return SpaceLabeling(tuple(rl), tuple(labels), tuple(right))


def insertion_majF_predicted(W: ColoredWord, labeling: SpaceLabeling, descending: bool,
                             j: int) -> int:
    """maj_F after inserting the pair at space j, from the space labels alone.

    ``descending`` selects the order ((m+1)^t, m^t); otherwise (m^t, (m+1)^t).
    """
    if not 0 <= j < len(labeling.labels):
        raise ValueError(f"space index {j} out of range")
    base = maj_F(W) + labeling.labels[j] + labeling.rl_right[j]
    return base + j + 1 if descending else base


def insert_pair_at(W: ColoredWord, m: int, t: int, j: int, descending: bool) -> ColoredWord:
    block = [(m + 1, t), (m, t)] if descending else [(m, t), (m + 1, t)]
    return _insert(W, j, block)


def colored_words(r: int, support: Iterable[int]) -> Iterator[ColoredWord]:
    """All colored words (arrangements with any colors) on a support set."""
    support = sorted(support)
    for vals in itertools.permutations(support):
        for cols in itertools.product(range(r), repeat=len(vals)):
            yield ColoredWord(r, vals, cols)

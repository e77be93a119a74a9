"""Colored words, colored permutations and their statistics.

Everything is 1-based, as in window notation: ``(4^2, 2^1, 5^1, 1, 3^1)``
is the colored permutation with values (4, 2, 5, 1, 3) and colors
(2, 1, 1, 0, 1).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .cycring import CycCoeff


@dataclass(frozen=True)
class ColoredInt:
    value: int
    color: int = 0

    def __post_init__(self):
        if self.value < 1:
            raise ValueError(f"values are positive integers, got {self.value}")
        if self.color < 0:
            raise ValueError(f"colors are non-negative, got {self.color}")

    def __str__(self) -> str:
        return str(self.value) if self.color == 0 else f"{self.value}^{self.color}"


def f_key(value: int, color: int) -> tuple[int, int]:
    """Sort key realising the F-order: higher color is smaller, then by value."""
    return (-color, value)


def f_less(a: ColoredInt, b: ColoredInt, r: int | None = None) -> bool:
    """True iff ``a < b`` in the F-order."""
    if r is not None and (a.color >= r or b.color >= r):
        raise ValueError(f"color out of range for r={r}")
    return f_key(a.value, a.color) < f_key(b.value, b.color)


def _check_distinct(word: Sequence[int]) -> None:
    if len(set(word)) != len(word):
        raise ValueError(f"entries must be pairwise distinct: {tuple(word)}")


def inv(word: Sequence[int]) -> int:
    _check_distinct(word)
    n = len(word)
    return sum(1 for i in range(n) for j in range(i + 1, n) if word[i] > word[j])


def Des(word: Sequence) -> set[int]:
    _check_distinct(word)
    return {i + 1 for i in range(len(word) - 1) if word[i] > word[i + 1]}


def des(word: Sequence) -> int:
    return len(Des(word))


def maj(word: Sequence) -> int:
    return sum(Des(word))


@dataclass(frozen=True)
class ColoredWord:
    """A word of colored integers with pairwise distinct values."""

    r: int
    values: tuple[int, ...]
    colors: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(int(v) for v in self.values))
        object.__setattr__(self, "colors", tuple(int(c) for c in self.colors))
        if self.r < 1:
            raise ValueError("r must be positive")
        if len(self.values) != len(self.colors):
            raise ValueError("values and colors differ in length")
        _check_distinct(self.values)
        if any(v < 1 for v in self.values):
            raise ValueError("values must be positive")
        if any(not 0 <= c < self.r for c in self.colors):
            raise ValueError(f"colors must lie in [0, {self.r - 1}]")

    @classmethod
    def from_entries(cls, r: int, entries: Iterable[ColoredInt | tuple[int, int] | int]):
        vals, cols = [], []
        for e in entries:
            if isinstance(e, ColoredInt):
                vals.append(e.value)
                cols.append(e.color)
            elif isinstance(e, tuple):
                vals.append(e[0])
                cols.append(e[1])
            else:
                vals.append(e)
                cols.append(0)
        return cls(r, tuple(vals), tuple(cols))

    @classmethod
    def uncolored(cls, r: int, values: Iterable[int]):
        values = tuple(values)
        return cls(r, values, (0,) * len(values))

    def __len__(self) -> int:
        return len(self.values)

    @property
    def entries(self) -> tuple[ColoredInt, ...]:
        return tuple(ColoredInt(v, c) for v, c in zip(self.values, self.colors))

    @property
    def support(self) -> frozenset[int]:
        return frozenset(self.values)

    def abs(self) -> tuple[int, ...]:
        return self.values

    def shifted(self, d: int) -> "ColoredWord":
        """The word W + d: every value moved by d, colors kept."""
        return type(self)(self.r, tuple(v + d for v in self.values), self.colors)

    def keys(self) -> list[tuple[int, int]]:
        return [f_key(v, c) for v, c in zip(self.values, self.colors)]

    def __str__(self) -> str:
        return format_word(self)


@dataclass(frozen=True)
class ColoredPermutation(ColoredWord):
    """A member (sigma, z) of G_{r,n}; ``values`` is sigma."""

    def __post_init__(self):
        super().__post_init__()
        if sorted(self.values) != list(range(1, len(self.values) + 1)):
            raise ValueError(f"{self.values} is not a permutation of [{len(self.values)}]")

    @property
    def n(self) -> int:
        return len(self.values)

    @property
    def sigma(self) -> tuple[int, ...]:
        return self.values

    @classmethod
    def identity(cls, r: int, n: int) -> "ColoredPermutation":
        return cls(r, tuple(range(1, n + 1)), (0,) * n)

    def __mul__(self, other: "ColoredPermutation") -> "ColoredPermutation":
        return compose(self, other)


@dataclass(frozen=True)
class CharacterSpec:
    epsilon: int
    h: int

    def __post_init__(self):
        if self.epsilon not in (1, -1):
            raise ValueError("epsilon must be +1 or -1")
        if self.h < 0:
            raise ValueError("h must be non-negative")

    def check(self, r: int) -> None:
        if self.h >= r:
            raise ValueError(f"h={self.h} out of range for r={r}")


def col(w: ColoredWord) -> int:
    return sum(w.colors)


def des_F(w: ColoredWord) -> set[int]:
    k = w.keys()
    return {i + 1 for i in range(len(k) - 1) if k[i] > k[i + 1]}


def maj_F(w: ColoredWord) -> int:
    return sum(des_F(w))


def fmaj(w: ColoredWord) -> int:
    return w.r * maj_F(w) + col(w)


def character(w: ColoredWord, spec: CharacterSpec) -> CycCoeff:
    """``epsilon**inv(|w|) * zeta**(h * col(w))`` as an exact cyclotomic integer."""
    spec.check(w.r)
    sign = spec.epsilon ** inv(w.values)
    return CycCoeff.zeta_power(w.r, spec.h * col(w), sign)


def in_star_group(pi: ColoredWord) -> bool:
    return col(pi) % pi.r == 0


def dmaj(pi: ColoredPermutation) -> int:
    """fmaj of pi with its last entry uncolored; defined on G*_{r,n}."""
    if not in_star_group(pi):
        raise ValueError(f"{format_word(pi)} has color sum {col(pi)} not divisible by r={pi.r}")
    if not pi.values:
        return 0
    stripped = ColoredWord(pi.r, pi.values, pi.colors[:-1] + (0,))
    return fmaj(stripped)


def compose(a: ColoredPermutation, b: ColoredPermutation) -> ColoredPermutation:
    """The product a*b (apply b first) under pi(x, i) = (sigma_x, z_x + i)."""
    if a.r != b.r or a.n != b.n:
        raise ValueError("factors live in different groups")
    vals, cols = [], []
    for v, c in zip(b.values, b.colors):
        vals.append(a.values[v - 1])
        cols.append((a.colors[v - 1] + c) % a.r)
    return ColoredPermutation(a.r, tuple(vals), tuple(cols))


def colored_inverse(pi: ColoredPermutation) -> ColoredPermutation:
    vals = [0] * pi.n
    cols = [0] * pi.n
    for i, (v, c) in enumerate(zip(pi.values, pi.colors), start=1):
        vals[v - 1] = i
        cols[v - 1] = (-c) % pi.r
    return ColoredPermutation(pi.r, tuple(vals), tuple(cols))


def stats(pi: ColoredWord) -> dict:
    out = {
        "inv": inv(pi.values),
        "Des_F": sorted(des_F(pi)),
        "maj_F": maj_F(pi),
        "col": col(pi),
        "fmaj": fmaj(pi),
    }
    if isinstance(pi, ColoredPermutation) and in_star_group(pi):
        out["Dmaj"] = dmaj(pi)
    return out


# -- text notation ----------------------------------------------------------

def parse_entries(text: str) -> list[tuple[int, int]]:
    text = text.strip().strip("()")
    if not text:
        return []
    out = []
    for tok in text.split(","):
        tok = tok.strip()
        if not tok:
            raise ValueError(f"empty entry in {text!r}")
        if "^" in tok:
            v, c = tok.split("^", 1)
            out.append((int(v), int(c)))
        else:
            out.append((int(tok), 0))
    return out


def parse_word(text: str, r: int) -> ColoredWord:
    """Parse ``"4^2,2^1,5^1,1,3^1"``; a full permutation of [n] comes back as
    a :class:`ColoredPermutation`."""
    entries = parse_entries(text)
    vals = tuple(v for v, _ in entries)
    cols = tuple(c for _, c in entries)
    if sorted(vals) == list(range(1, len(vals) + 1)) and vals:
        return ColoredPermutation(r, vals, cols)
    return ColoredWord(r, vals, cols)


def parse_permutation(text: str, r: int) -> ColoredPermutation:
    entries = parse_entries(text)
    return ColoredPermutation(r, tuple(v for v, _ in entries), tuple(c for _, c in entries))


def format_word(w: ColoredWord) -> str:
    return ",".join(str(v) if c == 0 else f"{v}^{c}" for v, c in zip(w.values, w.colors))

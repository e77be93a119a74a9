"""Constructive maps on colored permutations.

Algorithm A (the fmaj-minimal lift of a permutation), the prefix color
shift phi, the star map, the relabeling bijection between the U- and
V-restricted sets, and the adjacent-pair recoloring bijection.
"""
from __future__ import annotations

from .perm import ColoredPermutation, ColoredWord, Des, f_key


def algorithm_A(w, r: int) -> ColoredPermutation:
    """Color the increasing runs of w, indexed 0, 1, ... from the right, by
    their index mod r.

    >>> str(algorithm_A((8, 9, 7, 1, 6, 2, 4, 3, 5), 3))
    '8^1,9^1,7,1^2,6^2,2^1,4^1,3,5'
    """
    w = tuple(w)
    if sorted(w) != list(range(1, len(w) + 1)):
        raise ValueError(f"{w} is not a permutation")
    descents = Des(w)
    run = len(descents)
    colors = []
    for i in range(1, len(w) + 1):
        colors.append(run % r)
        if i in descents:
            run -= 1
    return ColoredPermutation(r, w, tuple(colors))


def in_hierarchy(pi: ColoredPermutation, w, k: int) -> bool:
    """Membership in G^{(k)}(w): |pi| = w and positions k+1..n agree with tilde-w."""
    w = tuple(w)
    if pi.values != w:
        return False
    base = algorithm_A(w, pi.r)
    return pi.colors[k:] == base.colors[k:]


def in_star_hierarchy(pi: ColoredPermutation, w, k: int) -> bool:
    """Membership in G*^{(k)}(w), for 0 <= k <= n-1."""
    w = tuple(w)
    if pi.values != w or sum(pi.colors) % pi.r:
        return False
    base = algorithm_A(w, pi.r)
    return pi.colors[k:-1] == base.colors[k:-1]


def phi(pi: ColoredPermutation, k: int, t: int) -> ColoredPermutation:
    """Add t (mod r) to the colors of the first k entries."""
    if not 1 <= k <= pi.n:
        raise ValueError(f"prefix length {k} out of range")
    if not 0 <= t < pi.r:
        raise ValueError(f"color shift {t} out of range")
    cols = tuple((c + t) % pi.r for c in pi.colors[:k]) + pi.colors[k:]
    return ColoredPermutation(pi.r, pi.values, cols)


def star(pi: ColoredPermutation) -> ColoredPermutation:
    """Recolor the last entry so that the total color is 0 mod r."""
    if not pi.values:
        return pi
    last = (-sum(pi.colors[:-1])) % pi.r
    return ColoredPermutation(pi.r, pi.values, pi.colors[:-1] + (last,))


# -- U/V relabeling ---------------------------------------------------------------

def _relabel(pi: ColoredPermutation, mapping: dict[int, int]) -> ColoredPermutation:
    return ColoredPermutation(pi.r, tuple(mapping.get(v, v) for v in pi.values), pi.colors)


def _contains_uncolored(pi: ColoredPermutation, run) -> bool:
    pos = {v: i for i, v in enumerate(pi.values)}
    if any(pi.colors[pos[v]] for v in run):
        return False
    return all(pos[a] < pos[b] for a, b in zip(run, run[1:]))


def uv_words(k: int, b: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    return tuple(range(b - k, b)), tuple(range(b - k + 1, b + 1))


def prop41_case(pi: ColoredPermutation, k: int, b: int) -> tuple[str, int]:
    """Which branch of the relabeling applies: ('colored', t), ('left', 0)
    when b sits left of b-k, or ('between', j) when b sits between b-j-1
    and b-j."""
    U, V = uv_words(k, b)
    if not _contains_uncolored(pi, U) or _contains_uncolored(pi, V):
        raise ValueError(f"{pi} is not in G(U) minus G(V) for k={k}, b={b}")
    pos = {v: i for i, v in enumerate(pi.values)}
    t = pi.colors[pos[b]]
    if t:
        return "colored", t
    if pos[b] < pos[b - k]:
        return "left", 0
    for j in range(1, k):
        if pos[b - j - 1] < pos[b] < pos[b - j]:
            return "between", j
    raise AssertionError("uncolored b to the right of b-1 would contain V")


def _forward_mapping(case: str, j: int, k: int, b: int) -> dict[int, int]:
    if case == "colored":
        m = {v: v + 1 for v in range(b - k, b)}
        m[b] = b - k
    elif case == "left":
        m = {v: v + 1 for v in range(b - k + 1, b)}
        m[b] = b - k + 1
    else:
        m = {v: v + 1 for v in range(b - k, b - j)}
        m[b] = b - j + 1
        m[b - j] = b - k
        m.update({v: v + 1 for v in range(b - j + 1, b)})
    return m


def prop41_forward(pi: ColoredPermutation, k: int, b: int) -> ColoredPermutation:
    """Map G(U) minus G(V) onto G(V) minus G(U), U = (b-k..b-1), V = (b-k+1..b).

    Values are relabeled in place; positions and colors are untouched, so
    Des and col are preserved.
    """
    case, j = prop41_case(pi, k, b)
    return _relabel(pi, _forward_mapping(case, j, k, b))


def prop41_backward(pi: ColoredPermutation, k: int, b: int) -> ColoredPermutation:
    U, V = uv_words(k, b)
    if not _contains_uncolored(pi, V) or _contains_uncolored(pi, U):
        raise ValueError(f"{pi} is not in G(V) minus G(U) for k={k}, b={b}")
    pos = {v: i for i, v in enumerate(pi.values)}
    if pi.colors[pos[b - k]]:
        case, j = "colored", 0
    else:
        # uncolored b-k sits after exactly g entries of V, 1 <= g <= k
        g = sum(1 for v in V if pos[v] < pos[b - k])
        case, j = ("left", 0) if g == 1 else ("between", k - g + 1)
    inverse = {dst: src for src, dst in _forward_mapping(case, j, k, b).items()}
    return _relabel(pi, inverse)


# -- adjacent pair recoloring -----------------------------------------------------

def eq48_bijection(W: ColoredWord, low: int, s: int, t: int) -> ColoredWord:
    """Recolor the adjacent pair low^t, (low+1)^t of W to use low^s.

    For an ascent the pair becomes (low^s, (low+1)^t) when s >= t and
    ((low+1)^t, low^s) when s < t; for a descent it becomes
    ((low+1)^t, low^s) when s >= t and (low^s, (low+1)^t) when s < t.
    """
    r = W.r
    if not (0 <= s < r and 0 <= t < r):
        raise ValueError("color out of range")
    vals = list(W.values)
    try:
        i, i2 = vals.index(low), vals.index(low + 1)
    except ValueError:
        raise ValueError(f"word lacks {low} or {low + 1}") from None
    if abs(i - i2) != 1 or W.colors[i] != t or W.colors[i2] != t:
        raise ValueError(f"{W} does not hold the pair {low}^{t},{low + 1}^{t} adjacently")
    j = min(i, i2)
    ascent = f_key(vals[j], t) < f_key(vals[j + 1], t)
    if ascent == (s >= t):
        block = [(low, s), (low + 1, t)]
    else:
        block = [(low + 1, t), (low, s)]
    new_vals = vals[:j] + [v for v, _ in block] + vals[j + 2:]
    new_cols = list(W.colors[:j]) + [c for _, c in block] + list(W.colors[j + 2:])
    return type(W)(r, tuple(new_vals), tuple(new_cols))

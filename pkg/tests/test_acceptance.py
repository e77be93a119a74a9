"""Acceptance criteria 1-15.

Each test prints one ``criterion N: PASS|FAIL`` line and then asserts.
Run ``python3 tests/test_acceptance.py`` to get just the summary lines.
"""
import itertools
import sys

import pytest

from signed_mahonian import formulas as F
from signed_mahonian.cycring import SignedMonomial, q_bracket
from signed_mahonian.maps import algorithm_A, in_hierarchy, phi
from signed_mahonian.perm import col, fmaj, maj_F, parse_permutation
from signed_mahonian.sets import dmaj_signed_sum, enumerate as enumerate_set
from signed_mahonian.verify import verify_identity

CRITERIA: dict[int, tuple[list[str], list]] = {}


def _extra(n):
    def deco(fn):
        CRITERIA.setdefault(n, ([], []))[1].append(fn)
        return fn
    return deco


def _ids(n, *ids):
    CRITERIA.setdefault(n, ([], []))[0].extend(ids)


_ids(2, "gs")
_ids(3, "bc")
_ids(4, "coset-fmaj")
_ids(5, "t22", "t22-b")
_ids(6, "t24")
_ids(7, "t26", "t43")
_ids(8, "t32", "t35")
_ids(9, "lem34", "eq31", "eq33")
_ids(10, "lem-insert", "cor-shift")
_ids(11, "prop41", "eq48")
_ids(12, "f-closed", "f-sum")
_ids(13, "t51", "lem52", "lem54")
_ids(14, "t61-fiber", "t61-group", "lem62", "lem63")
_ids(15, "r7-halpha", "r7-sim")


@_extra(1)
def worked_examples() -> list[str]:
    bad = []
    pi = parse_permutation("4^2,2^1,5^1,1,3^1", 3)
    if (col(pi), maj_F(pi), fmaj(pi)) != (5, 4, 17):
        bad.append("worked example statistics")
    w = (8, 9, 7, 1, 6, 2, 4, 3, 5)
    for r, text in ((3, "8^1,9^1,7,1^2,6^2,2^1,4^1,3,5"), (2, "8,9,7^1,1,6,2^1,4^1,3,5")):
        tw = algorithm_A(w, r)
        if str(tw) != text or fmaj(tw) != 17:
            bad.append(f"lift at r={r}: {tw}")
    if phi(parse_permutation("4^2,2,5^1,1,3", 3), 3, 2) != parse_permutation("4^1,2^2,5,1,3", 3):
        bad.append("phi example")
    return bad


@_extra(13)
def lift_minimizer_and_increments() -> list[str]:
    bad = []
    for r in (1, 2, 3):
        for n in range(1, 5):
            for w in itertools.permutations(range(1, n + 1)):
                fiber = list(enumerate_set(r, n, "fiber " + ",".join(map(str, w))))
                vals = [fmaj(p) for p in fiber]
                tw = algorithm_A(w, r)
                if vals.count(min(vals)) != 1 or fiber[vals.index(min(vals))] != tw:
                    bad.append(f"lift not unique minimizer: r={r} w={w}")
                for k in range(1, n + 1):
                    for p in fiber:
                        if in_hierarchy(p, w, k - 1):
                            for t in range(r):
                                img = phi(p, k, t)
                                if fmaj(img) != fmaj(p) + k * t or not in_hierarchy(img, w, k):
                                    bad.append(f"phi law: r={r} w={w} k={k} t={t}")
    return bad


@_extra(14)
def final_factor_regression() -> list[str]:
    bad = []
    for r in (2, 3, 4):
        for n in (2, 3, 4):
            for e in (1, -1):
                oracle = dmaj_signed_sum(enumerate_set(r, n, "star"), e)
                wrong = q_bracket(r, SignedMonomial(r))
                for i in range(2, n + 1):
                    wrong = wrong * q_bracket(i * r, SignedMonomial(r, e ** (i - 1)))
                if oracle != F.thm_dmaj_group(r, n, e):
                    bad.append(f"group product r={r} n={n} e={e}")
                if oracle == wrong:
                    bad.append(f"[nr] variant not rejected r={r} n={n} e={e}")
    return bad


def run_criterion(n: int) -> tuple[bool, list[str]]:
    ids, extras = CRITERIA[n]
    problems, points = [], 0
    for id in ids:
        for rep in verify_identity(id):
            points += rep.status == "pass"
            if rep.status == "fail":
                problems.append(f"{id} {rep.params}: {rep.detail or rep.first_mismatch}")
    for fn in extras:
        problems.extend(fn())
    if ids and points == 0:
        problems.append("no grid point was exercised")
    return not problems, problems


@pytest.mark.parametrize("n", range(1, 16))
def test_criterion(n):
    ok, problems = run_criterion(n)
    line = f"criterion {n}: {'PASS' if ok else 'FAIL'}"
    sys.__stdout__.write("\n" + line + "\n")
    assert ok, "\n".join(problems[:10])


if __name__ == "__main__":
    failed = 0
    for n in range(1, 16):
        ok, problems = run_criterion(n)
        failed += not ok
        print(f"criterion {n}: {'PASS' if ok else 'FAIL'}")
        for p in problems[:5]:
            print("   ", p)
    sys.exit(1 if failed else 0)

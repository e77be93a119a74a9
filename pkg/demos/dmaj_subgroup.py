"""
Dmaj on the index-r subgroup
============================

Sums over the subgroup where the total color vanishes mod r, with Dmaj in
place of fmaj.  The product needs a final [n] bracket; swapping in [nr]
breaks agreement from n = 2 on, which is what the last column shows.
"""
from signed_mahonian import SignedMonomial, enumerate, q_bracket
from signed_mahonian import formulas as F
from signed_mahonian.sets import dmaj_signed_sum


def with_nr_tail(r, n, e):
    out = q_bracket(r, SignedMonomial(r))
    for i in range(2, n + 1):
        out = out * q_bracket(i * r, SignedMonomial(r, e ** (i - 1)))
    return out


print(f"{'r':>2} {'n':>2} {'eps':>4}  product  [nr]-variant")
for r in (2, 3):
    for n in (2, 3, 4):
        for e in (1, -1):
            oracle = dmaj_signed_sum(enumerate(r, n, "star"), e)
            print(f"{r:>2} {n:>2} {e:>4}  {str(oracle == F.thm_dmaj_group(r, n, e)):>7}  "
                  f"{oracle == with_nr_tail(r, n, e)}")

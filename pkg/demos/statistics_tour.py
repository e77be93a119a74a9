"""
Flag statistics on a colored permutation
========================================

Computes the basic statistics of one element of Z_3 wr S_5, then lifts an
ordinary permutation to its fmaj-minimal colored version and walks the
phi hierarchy built on top of it.
"""
from signed_mahonian import parse_permutation, stats
from signed_mahonian.maps import algorithm_A, phi, star

pi = parse_permutation("4^2,2^1,5^1,1,3^1", 3)
print(pi, stats(pi))

# The lift keeps maj(w) as its flag major index at every r.
w = (8, 9, 7, 1, 6, 2, 4, 3, 5)
for r in (1, 2, 3):
    tw = algorithm_A(w, r)
    print(f"r={r}: lift {tw}  fmaj={stats(tw)['fmaj']}")

# phi(., k, t) raises fmaj by exactly k*t.
base = algorithm_A((2, 1, 3), 3)
for k in (1, 2, 3):
    for t in range(3):
        img = phi(base, k, t)
        print(f"phi k={k} t={t}: {img}  fmaj={stats(img)['fmaj']}")

# Recoloring the last entry lands in the subgroup with col = 0 (mod r).
print("star:", star(algorithm_A(w, 3)), stats(star(algorithm_A(w, 3)))["Dmaj"])

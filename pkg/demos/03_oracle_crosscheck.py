"""Borel homology of explicit chain complexes against the closed form."""

from pin2floer import HFDecomposition, compute_swfhg, forward_s1, pretty, rank_at
from pin2floer.chain import G, S1, abc_profile, borel_dims, build_standard, smash
from pin2floer.pipeline import compute_invariants, seifert_consistency

dec = HFDecomposition(0, ((1, 1),))  # the local class of Sigma(2,3,11)
Z = build_standard(dec.s, dec.pairs)
print("cells:", Z.dim, " relations broken:", Z.check_relations())

s1 = borel_dims(Z, S1, 12)
g = borel_dims(Z, G, 12)
print("deg  S1 oracle/formula   G oracle/formula")
for d in sorted(g):
    print(f"{str(d):>3}   {s1.get(d, '-')!s:>3} / {rank_at(forward_s1(dec), d)}"
          f"          {g[d]} / {rank_at(compute_swfhg(dec).base, d)}")

abc = abc_profile(Z)
print("(a, b, c) =", (abc.a, abc.b, abc.c), " -> (alpha, beta, gamma) =", (abc.alpha, abc.beta, abc.gamma))

# the connected sum with itself: its invariants fit no Seifert space of either orientation
Y = smash(Z, Z)
abc = abc_profile(Y)
delta = 2 * compute_invariants(dec).delta
print("\nSigma(2,3,11) # Sigma(2,3,11):", Y.dim, "cells")
print("(alpha, beta, gamma, delta) =", (abc.alpha, abc.beta, abc.gamma, delta))
print("Seifert consistency:", seifert_consistency((abc.alpha, abc.beta, abc.gamma, delta)).value)

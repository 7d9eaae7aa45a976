"""From a Brieskorn sphere to its Pin(2) invariants, one step at a time."""

from pin2floer import analyze_brieskorn, compute_invariants, compute_swfhg, connected_homology, pretty
from pin2floer.seifert import brieskorn_normalize, tau_function

a = (2, 3, 7)
inv = brieskorn_normalize(a)  # b = -1, fibers (1,2), (1,3), (1,7)
print("Seifert invariants:", inv.b, inv.fibers, "degree", inv.degree)

tau = tau_function(inv)
print("tau on [0, 12]:", tau.values()[:13])  # one dip: a single extra leaf in the graded root

res = analyze_brieskorn(a)
print("HF+ :", pretty(res.hf))
dec = res.decomposition
print("s =", dec.s, " pairs =", dec.pairs, " J =", pretty(dec.J))

Q = compute_swfhg(dec)
print("SWFH^G :", pretty(Q.base))
for arrow in Q.q_arrows:
    print("   q:", arrow.kind.value, arrow.source, "->", arrow.target)

m = compute_invariants(dec)
print("alpha, beta, gamma, delta, mu_bar =", m.alpha, m.beta, m.gamma, m.delta, m.mu_bar)
print("HF_conn :", pretty(connected_homology(dec)), " projective type:", res.projective)

# a family member that is not of projective type
res = analyze_brieskorn((5, 8, 13))
print("\nSigma(5,8,13): HF_conn =", pretty(connected_homology(res.decomposition)), " projective:", res.projective)

"""The closed form on a decomposition with three strands and repeated summands."""

from pin2floer import HFDecomposition, compute_swfhg, forward_s1, pretty, restrict_to_v
from pin2floer.pipeline import build_jpairs, compute_invariants

dec = HFDecomposition(0, ((-5, 6), (-3, 4), (-1, 2)))
hf = forward_s1(dec)
print("HF+            :", pretty(hf))
print("restricted to v:", pretty(restrict_to_v(hf)))

jp = build_jpairs(dec)
print("J0   :", sorted(jp.J0))  # one pair per strand, by d mod 4
print("Jmax :", jp.Jmax)  # maximal under (a, a + 4b)
print("J_rep:", pretty(jp.J_rep))  # the repeated summands
print("J1'' :", pretty(jp.j1pp()))

Q = compute_swfhg(dec)
print("SWFH^G:", pretty(Q.base))
for i, (tower, role) in enumerate(Q.towers):
    print(f"   [{i}] {role.value:13s} bottom {tower.bottom} length {tower.length}")
print("q^3 = 0:", Q.q_cubed_vanishes())
print("invariants:", compute_invariants(dec).to_json())

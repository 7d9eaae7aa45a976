from fractions import Fraction
from math import gcd, prod

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pin2floer.errors import DivergentTau, NotCoprime, PositiveFibration, UnsupportedInput
from pin2floer.modules import GradedModule
from pin2floer.pipeline import compute_invariants, connected_homology, forward_s1, is_projective_module, validate
from pin2floer.seifert import (
    SeifertInvariants,
    TauFunction,
    analyze,
    analyze_brieskorn,
    brieskorn_normalize,
    d_invariant,
    graded_root,
    hf_from_tau,
    is_projective_type,
    tau_function,
)


def T(b, n=None, k=1):
    return GradedModule.tower(2, b, n, k)


def semigroup_delta(a):
    """Delta sequence of a Brieskorn sphere from the semigroup <a2a3, a1a3, a1a2>."""
    a1, a2, a3 = a
    gens = (a2 * a3, a1 * a3, a1 * a2)
    N0 = a1 * a2 * a3 - sum(gens)
    G = set()
    for x in range(0, N0 + 1, gens[0]):
        for y in range(x, N0 + 1, gens[1]):
            for z in range(y, N0 + 1, gens[2]):
                G.add(z)
    return [1 if n in G else (-1 if N0 - n in G else 0) for n in range(N0 + 1)]


coprime_triples = st.tuples(st.integers(2, 9), st.integers(2, 13), st.integers(2, 31)).filter(
    lambda a: gcd(a[0], a[1]) == gcd(a[0], a[2]) == gcd(a[1], a[2]) == 1
)


def test_brieskorn_normalize_poincare_sphere():
    inv = brieskorn_normalize((2, 3, 5))
    assert inv.b == -2
    assert inv.fibers == ((1, 2), (2, 3), (4, 5))


def test_brieskorn_normalize_rejects():
    with pytest.raises(NotCoprime):
        brieskorn_normalize((2, 4, 5))
    with pytest.raises(UnsupportedInput):
        brieskorn_normalize((0, 3, 5))


@given(coprime_triples)
def test_normalized_degree_is_minus_one_over_product(a):
    assert brieskorn_normalize(a).degree == Fraction(-1, prod(a))


@settings(max_examples=40, derandomize=True)
@given(coprime_triples)
def test_tau_increments_match_semigroup_count(a):
    tau = tau_function(brieskorn_normalize(a))
    want = semigroup_delta(a)
    assert [tau.delta(n) for n in range(len(want))] == want


@pytest.mark.parametrize(
    "a, d",
    [((2, 3, 5), 2), ((2, 3, 7), 0), ((2, 3, 11), 2), ((2, 3, 13), 0), ((2, 3, 19), 0)],
)
def test_d_invariant_anchors(a, d):
    tau = tau_function(brieskorn_normalize(a))
    assert d_invariant(tau) == d
    assert compute_invariants(analyze_brieskorn(a).decomposition).delta == Fraction(d, 2)


def test_hf_of_small_brieskorn_spheres():
    assert analyze_brieskorn((2, 3, 5)).hf == T(2)
    assert analyze_brieskorn((2, 3, 7)).hf == T(0) + T(-1, 1)
    assert analyze_brieskorn((2, 3, 13)).hf == T(0) + T(-1, 1, 2)


def test_sigma_2_3_7_and_2_3_19():
    for a in ((2, 3, 7), (2, 3, 19)):
        inv = compute_invariants(analyze_brieskorn(a).decomposition)
        assert (inv.delta, inv.mu_bar) == (0, 1)


def test_decompositions_of_anchor_spaces():
    # frozen from the tau front end, cross-checked against the semigroup delta
    dec = analyze_brieskorn((7, 10, 17)).decomposition
    assert (dec.s, dec.pairs) == (0, ((-1, 2),))
    dec = analyze_brieskorn((5, 8, 13)).decomposition
    assert (dec.s, dec.pairs) == (2, ((-1, 2),))
    assert connected_homology(dec) == T(1, 2) + T(1, 1)


def test_seifert_input_equals_brieskorn():
    inv = SeifertInvariants(-1, ((1, 2), (1, 3), (1, 7)))
    assert analyze(inv).hf == analyze_brieskorn((2, 3, 7)).hf


def test_positive_fibration_rejected():
    with pytest.raises(PositiveFibration):
        tau_function(SeifertInvariants(0, ((1, 2), (1, 3), (1, 5))))


def test_divergent_tau():
    with pytest.raises(DivergentTau):
        hf_from_tau(TauFunction.from_values([0, 1, 0, -1]))


# graded roots: synthetic roots with the shapes of the three pictured roots

ROOT_A = [0, 1, 0, 1, 2]  # two leaves joined one level up
ROOT_B = [0, 1, 0, -1, 0, 1, 0, 1, 2]  # central leaf is the global minimum
ROOT_C = [0, 1, 0, -1, 0, 1, 0, 1, 0, -1, 0, 1, 0, 1, 2]  # global minima off the axis


def test_projective_roots():
    assert is_projective_type(graded_root(ROOT_A)) == (True, 1)
    assert is_projective_type(graded_root(ROOT_B)) == (True, 0)
    flag, _ = is_projective_type(graded_root(ROOT_C))
    assert not flag


def test_single_vertex_root():
    root = graded_root([0, 1, 2])
    assert len(root) == 1 and is_projective_type(root) == (True, 0)


def test_root_must_be_symmetric():
    with pytest.raises(UnsupportedInput):
        graded_root([0, 1, 0, -1, 0, 1, 2])


def test_root_involution():
    root = graded_root(ROOT_C)
    assert all(root.iota[root.iota[v]] == v for v in range(len(root)))
    assert all(root.chi[root.iota[v]] == root.chi[v] for v in range(len(root)))


def test_non_projective_sigma_5_8_13():
    res = analyze_brieskorn((5, 8, 13))
    assert not res.projective
    assert not is_projective_module(res.decomposition)


@pytest.mark.parametrize("a", [(2, 3, 13), (2, 3, 25), (3, 4, 25), (2, 5, 21)])
def test_pqn_plus_one_is_projective(a):
    assert analyze_brieskorn(a).projective


@settings(max_examples=40, derandomize=True)
@given(coprime_triples)
def test_front_end_properties(a):
    res = analyze_brieskorn(a)
    dec = validate(res.decomposition)
    assert forward_s1(dec) == res.hf
    assert res.projective == is_projective_module(dec)
    if res.projective:
        inv = compute_invariants(dec)
        assert res.delta_minus_beta == inv.delta - inv.beta

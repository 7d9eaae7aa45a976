from fractions import Fraction

import pytest
from hypothesis import given, settings

from pin2floer import gf2
from pin2floer.chain import algebra as alg
from pin2floer.chain.borel import (
    G,
    S1,
    TruncationTooLow,
    abc_profile,
    borel_dims,
    fixed_level,
    resolution_homology,
    resolution_of_F,
)
from pin2floer.chain.check import check_decomposition, standard_complex
from pin2floer.chain.complex import (
    H,
    R_TILDE,
    _Builder,
    build_standard,
    free_generator,
    is_j_split,
    reducible,
    smash,
    strand,
    suspend,
)
from pin2floer.modules import rank_at
from pin2floer.pipeline import HFDecomposition, compute_swfhg, forward_s1
from strategies import decompositions

WORKED = HFDecomposition(0, ((-5, 6), (-3, 4), (-1, 2)))


def periodic(dims, pattern, start=0):
    return all(dims[Fraction(start + i)] == pattern[i % len(pattern)] for i in range(len(dims) - start))


# algebra


def test_algebra_relations():
    j, s = alg.J, alg.S
    j3 = alg.mul(j, alg.mul(j, j))
    assert alg.mul(s, j) == alg.mul(j3, s)
    assert alg.mul(s, s) == 0
    assert alg.mul(alg.mul(j3, j), alg.ONE) == alg.ONE
    assert alg.boundary(s) == alg.ONE | alg.J2


def test_algebra_is_associative_and_leibniz():
    for x in range(alg.NBASIS):
        for y in range(alg.NBASIS):
            X, Y = 1 << x, 1 << y
            lhs = alg.boundary(alg.mul(X, Y))
            assert lhs == alg.mul(alg.boundary(X), Y) ^ alg.mul(X, alg.boundary(Y))
            for z in range(alg.NBASIS):
                Zb = 1 << z
                assert alg.mul(alg.mul(X, Y), Zb) == alg.mul(X, alg.mul(Y, Zb))


def test_antipode_is_an_involution_on_cells():
    assert all(alg.ANTIPODE[alg.ANTIPODE[g]] == g for g in range(alg.NBASIS))


def test_gf2_kernel_and_rank():
    cols = [0b011, 0b110, 0b101, 0b000]
    assert gf2.rank(cols) == 2
    ker = gf2.kernel(cols)
    assert len(ker) == 2 and all(gf2.apply(cols, v) == 0 for v in ker)


# complexes


def test_standard_complex_shape():
    Z = build_standard(0, [(1, 1)])
    assert Z.dim == 9 and Z.check_relations() == [] and is_j_split(Z)
    W = build_standard(0, WORKED.pairs)
    assert W.dim == 97 and W.check_relations() == []


@settings(max_examples=30, derandomize=True)
@given(decompositions())
def test_relations_on_generated_complexes(dec):
    Z = standard_complex(dec)
    assert Z.check_relations() == []
    assert is_j_split(Z)


@pytest.mark.parametrize("rep", [R_TILDE, H])
def test_suspensions_satisfy_relations(rep):
    for Z in (reducible(), build_standard(0, [(1, 1)]), strand(-1, 2)):
        assert suspend(Z, rep).check_relations() == []


def test_smash_relations_on_large_complex():
    W = build_standard(0, WORKED.pairs)
    Y = smash(W, W)
    assert Y.dim == 97 * 97
    assert Y.check_relations() == []


def test_literal_twisted_action_breaks_sj_relation():
    # s(a (x) b) = sa (x) b + j^2 a (x) sb with j acting diagonally, on G (x) G
    def left(g, x):
        return alg.PRODUCT[g][x]

    def J(elem):
        return frozenset((left(alg.J.bit_length() - 1, a), left(alg.J.bit_length() - 1, b)) for a, b in elem)

    def S(elem):
        out = set()
        s, j2 = alg.index(0, 1), alg.index(2, 0)
        for a, b in elem:
            for term in ((left(s, a), b), (left(j2, a), left(s, b))):
                if None not in term:
                    out ^= {term}
        return frozenset(out)

    one = frozenset({(0, 0)})
    assert S(J(one)) != J(J(J(S(one))))


def test_smash_with_reducible_is_identity_up_to_relabel():
    Z = build_standard(0, [(-1, 2)])
    Y = smash(reducible(), Z)
    assert Y.dim == Z.dim
    for grp in (G, S1):
        assert borel_dims(Y, grp, 12) == borel_dims(Z, grp, 12)


# resolutions and Borel homology


@pytest.mark.parametrize("group", [G, S1])
def test_resolution_exact_through_48(group):
    res = resolution_of_F(group, 49)
    assert resolution_homology(res)[:49] == [1] + [0] * 48


def test_resolution_ranks():
    assert resolution_of_F(G, 12).ranks()[:12] == [1, 1, 2, 2, 3, 3, 4, 4, 5, 5, 6, 6]
    assert resolution_of_F(S1, 12).ranks()[:12] == [1, 0] * 6


def test_borel_homology_of_a_point():
    f = reducible()
    assert periodic(borel_dims(f, G, 24), [1, 1, 1, 0])
    assert periodic(borel_dims(f, S1, 24), [1, 0])


def test_borel_homology_of_free_generator():
    assert borel_dims(free_generator(), G, 6) == {Fraction(d): int(d == 0) for d in range(7)}
    assert borel_dims(free_generator(), S1, 6) == {Fraction(d): 2 * int(d == 0) for d in range(7)}


def test_standard_complex_borel_matches_pipeline():
    dec = HFDecomposition(0, ((1, 1),))
    Z = standard_complex(dec)
    s1 = borel_dims(Z, S1, 20)
    assert all(n == rank_at(forward_s1(dec), d) for d, n in s1.items())
    abc = abc_profile(Z)
    assert (abc.a, abc.b, abc.c) == (4, 0, 0)
    assert (abc.alpha, abc.beta, abc.gamma) == (2, 0, 0)


def test_worked_example_borel():
    W = standard_complex(WORKED)
    g = borel_dims(W, G, 24)
    M = compute_swfhg(WORKED).base
    assert all(n == rank_at(M, d) for d, n in g.items())
    assert abc_profile(W).alpha == 4


def test_suspension_by_quaternions_shifts_by_four():
    f = reducible()
    plain = borel_dims(f, G, 20)
    shifted = borel_dims(suspend(f, H), G, 24)
    assert all(shifted[d + 4] == n for d, n in plain.items())
    assert fixed_level(suspend(f, H)) == 0


def test_smash_of_sigma_2_3_11_complexes():
    Z = build_standard(0, [(1, 1)])
    abc = abc_profile(smash(Z, Z))
    assert (abc.a, abc.b, abc.c) == (4, 4, 0)
    assert (abc.alpha, abc.beta, abc.gamma) == (2, 2, 0)


def _join_model():
    """Reduced suspension of G*G as a double mapping cylinder of the two projections."""
    B = _Builder()
    f = B.add_fixed("f", 0)
    A = B.add_free("A", 1, 1 << f)
    Bg = B.add_free("B", 1, 1 << f)
    cyl = {}
    for h in range(4):
        cyl[h] = B.add_free(f"C{h}", 2, (1 << A[0]) ^ (1 << Bg[alg.index(h, 0)]))
    for h in range(4):
        bd = (1 << Bg[alg.index(h, 1)]) ^ (1 << cyl[h][0]) ^ (1 << cyl[(h + 2) % 4][0])
        B.add_free(f"Cs{h}", 3, bd)
    return B.build()


def test_smash_agrees_with_join_model():
    Z = build_standard(0, [(1, 1)])
    Y, M = smash(Z, Z), _join_model()
    assert M.check_relations() == []
    for grp in (G, S1):
        assert borel_dims(Y, grp, 16) == borel_dims(M, grp, 16)
    assert abc_profile(M).alpha == abc_profile(Y).alpha == 2


def test_truncation_margin_too_small():
    W = standard_complex(WORKED)
    with pytest.raises(TruncationTooLow):
        borel_dims(W, G, 0, margin=2)


def test_truncation_margin_env(monkeypatch):
    from pin2floer.chain import borel

    monkeypatch.setenv("PIN2_TRUNC_MARGIN", "12")
    assert borel.truncation_margin() == 12


@settings(max_examples=8, derandomize=True)
@given(decompositions())
def test_oracle_matches_pipeline_small(dec):
    res = check_decomposition(dec, max_degree=16)
    assert res.ok, res.mismatches

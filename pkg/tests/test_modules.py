from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from pin2floer.errors import InvalidStep, InvalidTower
from pin2floer.modules import GradedModule, Tower, fmt_grading, grading, pretty, rank_at, restrict_to_v, shift
from strategies import modules


def T(b, n=None, k=1):
    return GradedModule.tower(2, b, n, k)


def V(b, n=None, k=1):
    return GradedModule.tower(4, b, n, k)


def test_grading_is_exact():
    assert grading("-3/4") == Fraction(-3, 4)
    assert fmt_grading(Fraction(2)) == "2/1"
    with pytest.raises(TypeError):
        grading(0.5)


def test_tower_support():
    t = Tower(-1, 3)
    assert [t.contains(d, 2) for d in (-3, -1, 0, 1, 3, 5)] == [False, True, False, True, True, False]
    assert Tower(2).contains(102, 4) and not Tower(2).contains(0, 4)
    with pytest.raises(InvalidTower):
        Tower(0, 0)


def test_canonical_form_drops_zero_towers_and_sorts():
    M = GradedModule(2, ((3, 1), (-1, 0), (-5, 2)), (0,))
    assert M.finite == ((Fraction(-5), 2), (Fraction(3), 1))
    assert M == T(0) + T(3, 1) + T(-5, 2)


def test_bottoms_must_share_a_coset():
    with pytest.raises(InvalidTower):
        GradedModule(2, ((0, 1), (Fraction(1, 2), 1)))


def test_invalid_step():
    with pytest.raises(InvalidStep):
        GradedModule(3)
    with pytest.raises(InvalidStep):
        restrict_to_v(V(0))


def test_shift_lowers_bottoms():
    assert shift(T(0) + T(-1, 2), 2) == T(-2) + T(-3, 2)
    assert shift(T(0), -2) == T(2)


def test_restriction_examples():
    # T_d(n) -> V_d(ceil(n/2)) + V_{d+2}(floor(n/2))
    assert restrict_to_v(T(-1, 3)) == V(-1, 2) + V(1, 1)
    assert restrict_to_v(T(5, 1)) == V(5, 1)
    assert restrict_to_v(T(0)) == V(0) + V(2)


def test_rank_at_and_dims():
    M = T(0) + T(-3, 2) + T(-3, 1)
    assert rank_at(M, -3) == 2 and rank_at(M, -1) == 1 and rank_at(M, -2) == 0
    assert rank_at(M, 100) == 1
    assert M.dims(-3, 0) == {-3: 2, -2: 0, -1: 1, 0: 1}


def test_pretty():
    assert pretty(T(0) + T(-1, 1, 2)) == "T+_0 + T+_-1(1)^2"
    assert pretty(V(Fraction(1, 2), 1)) == "V+_1/2(1)"
    assert pretty(GradedModule(4)) == "0"


@given(modules())
def test_json_round_trip(M):
    assert GradedModule.from_json(M.to_json()) == M


@given(modules(), st.sampled_from([Fraction(1), Fraction(-2), Fraction(1, 2)]))
def test_shift_moves_every_degree(M, k):
    S = shift(M, k)
    lo = (M.min_degree() or 0) - 4
    for d in range(0, 50):
        x = lo + d
        assert rank_at(S, x - k) == rank_at(M, x)


@given(modules())
def test_restriction_preserves_degreewise_dimension(M):
    R = restrict_to_v(M)
    lo = M.min_degree()
    if lo is None:
        assert not R
        return
    for d in range(0, 60):
        assert rank_at(R, lo + d) == rank_at(M, lo + d)


@given(modules(), modules())
def test_sum_is_commutative_and_additive(A, B):
    if (A and B) and (A.min_degree() - B.min_degree()).denominator != 1:
        return
    assert A + B == B + A
    lo = min(x for x in (A.min_degree(), B.min_degree(), Fraction(0)) if x is not None)
    for d in range(0, 30):
        assert rank_at(A + B, lo + d) == rank_at(A, lo + d) + rank_at(B, lo + d)

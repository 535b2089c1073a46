import pytest
from hypothesis import given, strategies as st

from klspecht.jdt import evacuate, inverse_promote, partial_evacuate, promote
from klspecht.tableaux import enumerate_syt, partitions


def all_tableaux(max_n):
    for n in range(1, max_n + 1):
        for shape in partitions(n):
            yield from enumerate_syt(shape)


def test_promote_known_values():
    assert promote(((1, 2), (3, 4))) == ((1, 3), (2, 4))
    assert promote(((1, 3, 4), (2, 5))) == ((1, 2, 5), (3, 4))
    assert promote(((1,),)) == ((1,),)


def test_inverse_promote_known_value():
    assert inverse_promote(((1, 2, 5), (3, 4))) == ((1, 3, 4), (2, 5))


def test_promotion_round_trip():
    for t in all_tableaux(7):
        assert inverse_promote(promote(t)) == t
        assert promote(inverse_promote(t)) == t


def test_promotion_is_a_bijection():
    for n in range(1, 8):
        for shape in partitions(n):
            tabs = enumerate_syt(shape)
            images = {promote(t) for t in tabs}
            assert images == set(tabs)


def test_evacuation_is_an_involution():
    for t in all_tableaux(8):
        e = evacuate(t)
        assert evacuate(e) == t


def test_partial_evacuation_is_an_involution_for_each_prefix():
    for n in range(1, 8):
        for shape in partitions(n):
            for t in enumerate_syt(shape):
                for k in range(1, n + 1):
                    assert partial_evacuate(partial_evacuate(t, k), k) == t


def test_full_partial_evacuation_is_evacuation():
    for t in all_tableaux(7):
        n = sum(len(row) for row in t)
        assert partial_evacuate(t, n) == evacuate(t)


def test_promotion_factors_through_evacuations():
    # pr = ev_n after ev_{n-1}, checked over every tableau with n <= 8
    for t in all_tableaux(8):
        n = sum(len(row) for row in t)
        if n == 1:
            assert promote(t) == t
            continue
        assert promote(t) == evacuate(partial_evacuate(t, n - 1))


def test_prefix_bounds_rejected():
    t = ((1, 2), (3,))
    with pytest.raises(ValueError):
        partial_evacuate(t, 0)
    with pytest.raises(ValueError):
        partial_evacuate(t, 4)


@given(st.data())
def test_random_tableau_operators_commute_with_round_trips(data):
    n = data.draw(st.integers(min_value=1, max_value=7))
    shape = data.draw(st.sampled_from(partitions(n)))
    t = data.draw(st.sampled_from(enumerate_syt(shape)))
    k = data.draw(st.integers(min_value=1, max_value=n))
    assert partial_evacuate(partial_evacuate(t, k), k) == t
    assert inverse_promote(promote(t)) == t

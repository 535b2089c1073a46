from fractions import Fraction
from random import Random

import pytest
from hypothesis import given, settings, strategies as st

from klspecht.jdt import evacuate, promote
from klspecht.qrkit import (
    IrrationalNormError,
    SignedPermutation,
    SingularMatrixError,
    all_connected_chains,
    as_signed_permutation,
    exact_qr,
    is_index_monotone,
    phi_connected,
    preorder_connected,
    random_index_monotone_order,
    search_ordering,
    thm1_shape_reports,
    verify_counterexample,
    verify_thm1,
    verify_thm4_chain,
)
from klspecht.specht import identity_matrix, mat_eq, mat_mul, mat_transpose
from klspecht.tableaux import (
    count_syt,
    enumerate_syt,
    partitions,
    tableau_index,
)


def test_exact_qr_of_a_permutation_matrix():
    fact = exact_qr([[0, 1], [1, 0]])
    assert fact.q == [[0, 1], [1, 0]]
    assert fact.r == [[1, 0], [0, 1]]


def test_exact_qr_defining_identities():
    m = [
        [Fraction(3, 5), Fraction(1, 2)],
        [Fraction(4, 5), Fraction(7, 3)],
    ]
    fact = exact_qr(m)
    assert mat_eq(mat_mul(fact.q, fact.r), m)
    assert mat_eq(mat_mul(mat_transpose(fact.q), fact.q), identity_matrix(2))
    for i in range(2):
        assert fact.r[i][i] > 0
        for j in range(i):
            assert fact.r[i][j] == 0


def test_singular_input_rejected():
    with pytest.raises(SingularMatrixError):
        exact_qr([[1, 2], [2, 4]])
    with pytest.raises(SingularMatrixError):
        exact_qr([[0, 0], [0, 0]])


def test_irrational_norm_reported_with_position():
    with pytest.raises(IrrationalNormError) as info:
        exact_qr([[1, 0], [1, 1]])
    assert info.value.column == 0
    assert info.value.norm2 == 2


def test_as_signed_permutation():
    assert as_signed_permutation([[1, 1], [0, 1]]) is None
    assert as_signed_permutation([[1, 0], [0, 1]]) == \
        SignedPermutation((0, 1), (1, 1))
    sp = as_signed_permutation([[0, -1], [1, 0]])
    assert sp is not None
    assert sp.target == (1, 0)
    assert sp.signs == (1, -1)
    assert as_signed_permutation([[2, 0], [0, 1]]) is None
    assert as_signed_permutation([[1, 0], [1, 0]]) is None


def test_index_monotone_orders():
    shape = (3, 1, 1)
    base = list(enumerate_syt(shape))
    assert is_index_monotone(base)
    assert not is_index_monotone(list(reversed(base)))
    rng = Random(5)
    for _ in range(10):
        order = random_index_monotone_order(shape, rng)
        assert sorted(order) == sorted(base)
        assert is_index_monotone(order)
        indices = [tableau_index(t) for t in order]
        assert indices == sorted(indices)


def test_thm1_on_the_worked_shape():
    report = verify_thm1((3, 1, 1))
    assert report.passed, report.failures
    assert report.theorem == 'thm1'
    assert report.signs == {'1': 1, '2': 1}
    # the witness records where each basis column lands under promotion
    mapping = report.witness['promotion']
    tabs = enumerate_syt((3, 1, 1))
    for col, t in enumerate(tabs):
        assert tabs[mapping[col]] == promote(t)


def test_thm1_small_sweep():
    for n in range(2, 6):
        for shape in partitions(n):
            report = verify_thm1(shape)
            assert report.passed, (shape, report.failures)


def test_thm1_rejects_non_monotone_orders():
    shape = (3, 1, 1)
    base = list(enumerate_syt(shape))
    with pytest.raises(ValueError):
        verify_thm1(shape, list(reversed(base)))


def test_thm1_shape_reports_are_seeded_and_counted():
    reports_a = thm1_shape_reports((2, 2, 1), seed=3, shuffles=4)
    reports_b = thm1_shape_reports((2, 2, 1), seed=3, shuffles=4)
    assert len(reports_a) == 5
    assert [r.ordering for r in reports_a] == [r.ordering for r in reports_b]
    for r in reports_a:
        assert r.passed
    reports_c = thm1_shape_reports((2, 2, 1), seed=4, shuffles=4)
    assert [r.ordering for r in reports_c] != [r.ordering for r in reports_a]


def test_phi_of_the_full_generator_set_is_evacuation():
    for n in range(2, 7):
        full = frozenset(range(1, n))
        for shape in partitions(n):
            for t in enumerate_syt(shape):
                assert phi_connected(full, t) == evacuate(t)


def test_phi_composite_along_the_two_step_chain_is_promotion():
    for n in range(3, 7):
        lower = frozenset(range(1, n - 1))
        full = frozenset(range(1, n))
        for shape in partitions(n):
            for t in enumerate_syt(shape):
                assert phi_connected(full, phi_connected(lower, t)) \
                    == promote(t)


def test_preorder_keys_cover_the_shape():
    for n in range(2, 6):
        for shape in partitions(n):
            for chain in all_connected_chains(n):
                j_set = chain[-1]
                keys = preorder_connected(j_set, shape)
                assert set(keys) == set(enumerate_syt(shape))


def test_connected_chain_counts():
    assert len(all_connected_chains(2)) == 1
    assert len(all_connected_chains(3)) == 5
    assert len(all_connected_chains(4)) == 19
    assert len(all_connected_chains(5)) == 67
    for chain in all_connected_chains(5):
        for small, big in zip(chain, chain[1:]):
            assert small < big
        for j_set in chain:
            lo, hi = min(j_set), max(j_set)
            assert j_set == frozenset(range(lo, hi + 1))


def test_thm4_two_step_chain_on_the_triangle():
    report = verify_thm4_chain((2, 1), [{2}, {1, 2}])
    assert report.passed, report.failures
    assert report.theorem == 'thm4'


def test_thm4_single_full_chain_realizes_evacuation():
    for n in range(2, 6):
        full = frozenset(range(1, n))
        for shape in partitions(n):
            report = verify_thm4_chain(shape, [full])
            assert report.passed, (shape, report.failures)
            sym = report.witness['symmetry']
            from klspecht.tableaux import format_tableau

            for t in enumerate_syt(shape):
                assert sym[format_tableau(t)] \
                    == format_tableau(evacuate(t))


def test_thm4_small_sweep():
    for n in range(2, 5):
        for shape in partitions(n):
            for chain in all_connected_chains(n):
                report = verify_thm4_chain(shape, chain)
                assert report.passed, (shape, chain, report.failures)


def test_thm4_rejects_bad_chains():
    with pytest.raises(ValueError):
        verify_thm4_chain((2, 1, 1), [{1, 3}])  # not contiguous
    with pytest.raises(ValueError):
        verify_thm4_chain((2, 1), [{1, 2}, {2}])  # not increasing
    with pytest.raises(ValueError):
        verify_thm4_chain((2, 1), [])


def test_counterexample_report():
    report = verify_counterexample()
    assert report.passed, report.failures
    outcomes = report.witness['orderings']
    assert len(outcomes) == 6
    assert all(v != 'unexpected signed permutation' for v in outcomes.values())
    assert report.witness['long_cycle_ordering'] is not None


def test_search_finds_the_index_order_for_the_long_cycle():
    found = search_ordering((3, 1, 1), (2, 3, 4, 5, 1))
    assert found == enumerate_syt((3, 1, 1))


def test_search_fails_on_the_nonseparable_pattern():
    assert search_ordering((3, 1), (2, 4, 1, 3)) is None


def test_search_succeeds_for_long_elements():
    for n in range(2, 5):
        w0 = tuple(range(n, 0, -1))
        for shape in partitions(n):
            assert search_ordering(shape, w0) is not None


def test_search_bound_enforced():
    assert count_syt((4, 2)) == 9
    with pytest.raises(ValueError):
        search_ordering((4, 2), tuple(range(6, 0, -1)))


@st.composite
def signed_upper_products(draw, d=3):
    perm = draw(st.permutations(range(d)))
    signs = draw(st.lists(st.sampled_from((1, -1)), min_size=d, max_size=d))
    upper = [
        [
            Fraction(
                draw(st.integers(min_value=-4, max_value=4)),
                draw(st.integers(min_value=1, max_value=3)),
            )
            if j > i else 0
            for j in range(d)
        ]
        for i in range(d)
    ]
    for i in range(d):
        upper[i][i] = Fraction(
            draw(st.integers(min_value=1, max_value=5)),
            draw(st.integers(min_value=1, max_value=3)),
        )
    s = [[0] * d for _ in range(d)]
    for c in range(d):
        s[perm[c]][c] = signs[c]
    m = mat_mul(s, upper)
    return s, upper, m


@settings(max_examples=60, deadline=None)
@given(signed_upper_products())
def test_qr_recovers_signed_permutation_factors(parts):
    s, upper, m = parts
    # uniqueness: Q must be exactly the orthogonal factor we multiplied in
    fact = exact_qr(m)
    assert mat_eq(fact.q, s)
    assert mat_eq(fact.r, upper)
    assert as_signed_permutation(fact.q) is not None

"""Series engine: sparse cube series, truncated products, tau tables."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tauprimes.errors import BudgetExceededError
from tauprimes.series import (
    SparseCubeSeries,
    TauTable,
    _convolve_packed,
    _convolve_schoolbook,
    delta_series,
    jacobi_cube,
    multiply_by_sparse,
)

EXPANSION_HEAD = [1, -24, 252, -1472, 4830]


def brute_cube(limit):
    # prod (1-q^n)^3 by naive repeated multiplication; oracle for jacobi_cube.
    poly = [0] * (limit + 1)
    poly[0] = 1
    for n in range(1, limit + 1):
        for _ in range(3):
            for i in range(limit, n - 1, -1):
                poly[i] -= poly[i - n]
    return poly


def test_jacobi_cube_small_truncations():
    assert jacobi_cube(1).terms == ((0, 1), (1, -3))
    assert jacobi_cube(6).terms == ((0, 1), (1, -3), (3, 5), (6, -7))


def test_jacobi_cube_matches_brute_expansion():
    for limit in (1, 2, 7, 40):
        dense = [0] * (limit + 1)
        for e, c in jacobi_cube(limit).terms:
            dense[e] = c
        assert dense == brute_cube(limit)


def test_jacobi_cube_term_shape():
    series = jacobi_cube(5000)
    for m, (e, c) in enumerate(series.terms):
        assert e == m * (m + 1) // 2
        assert c == (2 * m + 1) * (-1) ** m
    count = len(series.terms)
    assert series.terms[-1][0] <= 5000
    assert count * (count + 1) // 2 > 5000


def test_jacobi_cube_rejects_zero():
    with pytest.raises(ValueError):
        jacobi_cube(0)


def test_multiply_by_sparse_frozen_examples():
    assert multiply_by_sparse([1], jacobi_cube(3), 3) == [1, -3, 0, 5]
    assert multiply_by_sparse([1, -3], jacobi_cube(1), 2) == [1, -6, 9]


def test_multiply_by_sparse_negative_limit():
    with pytest.raises(ValueError):
        multiply_by_sparse([1], jacobi_cube(1), -1)


@given(
    dense=st.lists(st.integers(min_value=-(10**12), max_value=10**12), min_size=0, max_size=80),
    limit=st.integers(min_value=0, max_value=120),
)
@settings(max_examples=200)
def test_packed_convolution_equals_schoolbook(dense, limit):
    terms = [(e, c) for e, c in jacobi_cube(max(limit, 1)).terms if e <= limit]
    assert _convolve_packed(dense, terms, limit) == _convolve_schoolbook(dense, terms, limit)


def test_packed_convolution_equals_schoolbook_above_cutover():
    table = delta_series(600)
    dense = list(table.coeffs)
    terms = list(jacobi_cube(599).terms)
    assert _convolve_packed(dense, terms, 599) == _convolve_schoolbook(dense, terms, 599)


def test_delta_series_head():
    assert list(delta_series(5).coeffs) == EXPANSION_HEAD


def test_delta_series_limit_one():
    table = delta_series(1)
    assert table.limit == 1 and table[1] == 1


def test_delta_series_rejects_bad_limits():
    with pytest.raises(ValueError):
        delta_series(0)
    with pytest.raises(BudgetExceededError):
        delta_series(1000, ceiling=999)
    assert delta_series(1001, ceiling=1001).limit == 1001


def test_tau_table_indexing(table100k):
    assert table100k[1] == 1
    assert table100k[2] == -24
    with pytest.raises(IndexError):
        table100k[0]
    with pytest.raises(IndexError):
        table100k[100_001]
    assert len(table100k) == 100_000


def test_tau_table_truncation_is_prefix(table100k):
    small = table100k.truncated(500)
    assert small.coeffs == table100k.coeffs[:500]
    direct = delta_series(500)
    assert small.coeffs == direct.coeffs


def test_tau_table_validates_tau1():
    with pytest.raises(ValueError):
        TauTable((2, 3))
    with pytest.raises(ValueError):
        TauTable(())


def test_sparse_series_type_invariants():
    with pytest.raises(ValueError):
        SparseCubeSeries(3, ((1, -3),))

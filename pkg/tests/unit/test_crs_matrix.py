"""Compressed row storage: conversion structure and invariant validation."""

import pytest

from heatcg.linalg import CrsMatrix, DenseMatrix, dense_to_crs


def test_mixed_pattern_compresses_by_row_scan():
    m = DenseMatrix.from_rows([[1.0, 0.0, 2.0], [0.0, 0.0, 3.0], [4.0, 5.0, 0.0]])
    crs = dense_to_crs(m)
    assert list(crs.values) == [1.0, 2.0, 3.0, 4.0, 5.0]
    assert list(crs.col_indices) == [0, 2, 2, 0, 1]
    assert list(crs.row_ptr) == [0, 2, 3, 5]


def test_zero_matrix_has_empty_structure():
    crs = dense_to_crs(DenseMatrix(2, 2, [0.0, 0.0, 0.0, 0.0]))
    assert crs.values == ()
    assert crs.col_indices == ()
    assert list(crs.row_ptr) == [0, 0, 0]


def test_identity_structure():
    crs = dense_to_crs(DenseMatrix.from_rows([[1.0, 0.0], [0.0, 1.0]]))
    assert list(crs.values) == [1.0, 1.0]
    assert list(crs.col_indices) == [0, 1]
    assert list(crs.row_ptr) == [0, 1, 2]


def test_negative_zero_is_dropped():
    crs = dense_to_crs(DenseMatrix(1, 1, [-0.0]))
    assert crs.nnz() == 0


def test_roundtrip_through_dense_is_exact():
    m = DenseMatrix.from_rows([[1.0, 0.0, 2.0], [0.0, 0.0, 3.0], [4.0, 5.0, 0.0]])
    assert dense_to_crs(m).to_dense() == m


def test_roundtrip_of_empty_matrix():
    m = DenseMatrix(0, 0, [])
    assert dense_to_crs(m).to_dense() == m


def test_nnz_counts_stored_values():
    m = DenseMatrix.from_rows([[0.0, 7.0], [0.0, 0.0]])
    assert dense_to_crs(m).nnz() == 1


def test_stored_zero_is_rejected():
    with pytest.raises(ValueError, match="zero"):
        CrsMatrix(1, 2, [0.0], [0], [0, 1])


def test_unsorted_columns_rejected():
    with pytest.raises(ValueError, match="strictly increasing"):
        CrsMatrix(1, 3, [1.0, 2.0], [2, 0], [0, 2])


def test_duplicate_columns_rejected():
    with pytest.raises(ValueError, match="strictly increasing"):
        CrsMatrix(1, 3, [1.0, 2.0], [1, 1], [0, 2])


def test_row_ptr_must_start_at_zero():
    with pytest.raises(ValueError, match=r"row_ptr\[0\]"):
        CrsMatrix(1, 2, [1.0], [0], [1, 1])


def test_row_ptr_must_end_at_value_count():
    with pytest.raises(ValueError, match="values length"):
        CrsMatrix(1, 2, [1.0], [0], [0, 2])


def test_row_ptr_must_be_non_decreasing():
    with pytest.raises(ValueError, match="non-decreasing"):
        CrsMatrix(3, 3, [1.0, 2.0], [0, 1], [0, 2, 1, 2])


def test_row_ptr_length_checked():
    with pytest.raises(ValueError, match="rows \\+ 1"):
        CrsMatrix(2, 2, [1.0], [0], [0, 1])


def test_column_index_out_of_range_rejected():
    with pytest.raises(ValueError, match="out of range"):
        CrsMatrix(1, 2, [1.0], [2], [0, 1])


def test_col_indices_length_must_match_values():
    with pytest.raises(ValueError, match="must equal"):
        CrsMatrix(1, 3, [1.0, 2.0], [0], [0, 2])


def test_non_integer_indices_rejected():
    with pytest.raises(TypeError):
        CrsMatrix(1, 2, [1.0], [0.0], [0, 1])

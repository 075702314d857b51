"""Matrix-vector products across the dense and compressed-row paths."""

import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from heatcg.linalg import (
    DenseMatrix,
    Orientation,
    Vector,
    crs_matvec,
    dense_to_crs,
    matvec,
    vec_add,
)
from heatcg.numkit import FloatCompareSpec, approx_eq
from testutil import assert_components_bitwise


def test_dense_product_accumulates_rows():
    m = DenseMatrix.from_rows([[1.0, 2.0, 3.0], [4.0, 5.0, 6.0], [7.0, 8.0, 9.0]])
    result = matvec(m, Vector([6.0, -2.0, 6.0]))
    assert_components_bitwise(result.components, [20.0, 50.0, 80.0])
    assert result.orientation is Orientation.COLUMN


def test_sparse_product_matches_worked_values():
    m = DenseMatrix.from_rows([[1.0, 2.0, 3.0], [4.0, 5.0, 6.0], [7.0, 8.0, 9.0]])
    result = crs_matvec(dense_to_crs(m), Vector([6.0, -2.0, 6.0]))
    assert_components_bitwise(result.components, [20.0, 50.0, 80.0])


def test_identity_returns_input_components():
    identity = DenseMatrix.from_rows([[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]])
    v = Vector([1.5, -2.25, 8.0])
    assert matvec(identity, v) == v
    assert crs_matvec(dense_to_crs(identity), v) == v


def test_dimension_mismatch_names_the_contract():
    m = DenseMatrix(2, 3, [1.0, 2.0, 3.0, 4.0, 5.0, 6.0])
    with pytest.raises(
        ValueError, match="number of matrix columns must be equal"
    ):
        matvec(m, Vector([1.0, 2.0]))


def test_sparse_dimension_mismatch_fails_fast():
    crs = dense_to_crs(DenseMatrix(2, 3, [1.0, 2.0, 3.0, 4.0, 5.0, 6.0]))
    with pytest.raises(ValueError, match="number of matrix columns"):
        crs_matvec(crs, Vector([1.0, 2.0]))


def test_row_vector_operand_rejected():
    m = DenseMatrix.from_rows([[1.0, 2.0], [3.0, 4.0]])
    with pytest.raises(ValueError, match="column vector"):
        matvec(m, Vector([1.0, 2.0], Orientation.ROW))


def test_empty_shapes_are_legal():
    empty = Vector([])
    assert matvec(DenseMatrix(0, 0, []), empty).components == ()
    # a 3x0 matrix maps the empty vector to three empty sums
    result = matvec(DenseMatrix(3, 0, []), empty)
    assert list(result.components) == [0.0, 0.0, 0.0]
    assert crs_matvec(dense_to_crs(DenseMatrix(3, 0, [])), empty) == result


def test_product_is_linear_on_random_inputs():
    rng = random.Random(431)
    spec = FloatCompareSpec(tolerance_multiplier=64)
    for _ in range(20):
        n = rng.randint(1, 8)
        m = DenseMatrix(
            n, n, [rng.uniform(-1.0, 1.0) for _ in range(n * n)]
        )
        u = Vector([rng.uniform(-1.0, 1.0) for _ in range(n)])
        v = Vector([rng.uniform(-1.0, 1.0) for _ in range(n)])
        combined = matvec(m, vec_add(u, v))
        separate = vec_add(matvec(m, u), matvec(m, v))
        for a, b in zip(combined.components, separate.components):
            if a == b == 0.0:
                continue  # relative comparison is undefined against zero
            assert approx_eq(a, b, spec)


def test_sparse_equals_dense_on_seeded_sweep():
    rng = random.Random(97)
    for _ in range(50):
        rows = rng.randint(0, 20)
        cols = rng.randint(0, 20)
        entries = [
            rng.uniform(-10.0, 10.0) if rng.random() < 0.3 else 0.0
            for _ in range(rows * cols)
        ]
        m = DenseMatrix(rows, cols, entries)
        v = Vector([rng.uniform(-10.0, 10.0) for _ in range(cols)])
        assert_components_bitwise(
            crs_matvec(dense_to_crs(m), v).components,
            list(matvec(m, v).components),
        )


_entry = st.one_of(
    st.just(0.0),
    st.just(-0.0),
    st.floats(
        min_value=-1e100, max_value=1e100, allow_nan=False, allow_infinity=False
    ),
)


@given(data=st.data(), rows=st.integers(0, 6), cols=st.integers(0, 6))
def test_sparse_equals_dense_bitwise_property(data, rows, cols):
    entries = data.draw(
        st.lists(_entry, min_size=rows * cols, max_size=rows * cols)
    )
    comps = data.draw(
        st.lists(
            st.floats(
                min_value=-1e100, max_value=1e100, allow_nan=False, allow_infinity=False
            ),
            min_size=cols,
            max_size=cols,
        )
    )
    m = DenseMatrix(rows, cols, entries)
    v = Vector(comps)
    dense = matvec(m, v)
    sparse = crs_matvec(dense_to_crs(m), v)
    assert_components_bitwise(sparse.components, list(dense.components))


@given(data=st.data(), rows=st.integers(0, 5), cols=st.integers(0, 5))
def test_compression_invariants_and_roundtrip_property(data, rows, cols):
    entries = data.draw(
        st.lists(_entry, min_size=rows * cols, max_size=rows * cols)
    )
    m = DenseMatrix(rows, cols, entries)
    crs = dense_to_crs(m)  # the constructor itself enforces the invariants
    assert crs.row_ptr[0] == 0
    assert crs.row_ptr[-1] == crs.nnz()
    assert all(a <= b for a, b in zip(crs.row_ptr, crs.row_ptr[1:]))
    assert all(x != 0.0 for x in crs.values)
    reconstructed = crs.to_dense()
    # dropped zeros come back as +0.0; values equal under ==, which treats
    # -0.0 == 0.0, and every nonzero entry round-trips bitwise
    assert reconstructed.rows == m.rows and reconstructed.cols == m.cols
    for original, rebuilt in zip(m.entries, reconstructed.entries):
        assert original == rebuilt

import numpy as np
import pytest

from bicomplex import (
    E1, E2, I, J, K, BicomplexMatrix, BicomplexScalar, NotProduct, ShapeMismatch, ZeroTrace,
    block_representation, is_hyperbolic_positive, is_state, mat_inverse, random_gram,
    random_state, recover_factors, tensor_cartesian, tensor_idempotent, trace,
)
from bicomplex.jsonio import load_matrix
from bicomplex.tensor import factor_residual, partial_traces

from conftest import random_bc_matrix, well_conditioned


def kron_by_loops(a, b):
    """Oracle: Kronecker product entry by entry with scalar bicomplex multiplication."""
    (n1, n2), (m1, m2) = a.shape, b.shape
    rows = []
    for i1 in range(n1):
        for i2 in range(m1):
            rows.append([a[i1, j1] * b[i2, j2] for j1 in range(n2) for j2 in range(m2)])
    return BicomplexMatrix.from_entries(rows)


def bell_pattern():
    c = np.zeros((4, 4))
    for r in (0, 3):
        for s in (0, 3):
            c[r, s] = 0.5
    return BicomplexMatrix(c, c)


class TestGoldenExample:
    def test_both_routes_reproduce_printed_result(self, data_dir):
        a = load_matrix(data_dir / "example_A.json")
        b = load_matrix(data_dir / "example_B.json")
        expected = load_matrix(data_dir / "example_tensor.json")
        assert tensor_cartesian(a, b).max_component_diff(expected) <= 1e-12
        assert tensor_idempotent(a, b).max_component_diff(expected) <= 1e-12

    def test_printed_idempotent_components(self, data_dir):
        a = load_matrix(data_dir / "example_A.json")
        b = load_matrix(data_dir / "example_B.json")
        printed = load_matrix(data_dir / "example_tensor_idempotent.json")
        assert np.array_equal(a.c1, [[2, 1], [-1j, 1 + 1j]])
        assert np.array_equal(a.c2, [[0, 1 + 2j], [1j, -1 + 1j]])
        assert np.array_equal(b.c1, [[-1j, 1j], [0, 2 - 1j]])
        assert np.array_equal(b.c2, [[1j, 1j], [2j, 1j]])
        assert tensor_idempotent(a, b).max_component_diff(printed) <= 1e-12
        assert load_matrix(data_dir / "example_tensor.json").max_component_diff(printed) <= 1e-12


class TestProducts:
    def test_trivial_examples(self):
        assert tensor_cartesian(BicomplexMatrix.identity(2), BicomplexMatrix.identity(3)).allclose(
            BicomplexMatrix.identity(6), 1e-15)
        e1, e2 = BicomplexMatrix.scalar(E1), BicomplexMatrix.scalar(E2)
        assert tensor_cartesian(e1, e2).allclose(BicomplexMatrix.zeros(1), 1e-15)
        assert tensor_idempotent(e1, e2) == BicomplexMatrix.zeros(1)
        assert tensor_idempotent(e1, e1) == e1
        a = BicomplexMatrix.scalar(BicomplexScalar(2 + 1j, 3))
        b = BicomplexMatrix.scalar(BicomplexScalar(-1j, 5))
        assert tensor_idempotent(a, b)[0, 0] == BicomplexScalar((2 + 1j) * -1j, 15)

    def test_matches_loop_oracle(self, rng):
        for _ in range(10):
            a = random_bc_matrix(rng, *rng.integers(1, 4, 2))
            b = random_bc_matrix(rng, *rng.integers(1, 4, 2))
            oracle = kron_by_loops(a, b)
            assert tensor_idempotent(a, b).max_component_diff(oracle) <= 1e-12
            assert tensor_cartesian(a, b).max_component_diff(oracle) <= 1e-12

    def test_route_equivalence(self, rng):
        for _ in range(200):
            a = random_bc_matrix(rng, *rng.integers(1, 5, 2))
            b = random_bc_matrix(rng, *rng.integers(1, 5, 2))
            assert tensor_cartesian(a, b).max_component_diff(tensor_idempotent(a, b)) <= 1e-12 * max(
                1, a.frobenius() * b.frobenius() / 4)

    def test_hyperbolic_closure(self, rng):
        a = BicomplexMatrix(rng.standard_normal((2, 2)), rng.standard_normal((2, 2)))
        b = BicomplexMatrix(rng.standard_normal((3, 3)), rng.standard_normal((3, 3)))
        assert a.is_hyperbolic() and b.is_hyperbolic()
        assert tensor_idempotent(a, b).is_hyperbolic(0)
        assert tensor_cartesian(a, b).is_hyperbolic(1e-14)


class TestBlockRepresentation:
    def test_examples(self):
        assert np.array_equal(block_representation(BicomplexMatrix.scalar(J)), [[0, -1], [1, 0]])
        assert np.array_equal(block_representation(BicomplexMatrix.scalar(I)), [[1j, 0], [0, 1j]])
        assert np.array_equal(block_representation(BicomplexMatrix.scalar(K)), [[0, -1j], [1j, 0]])

    def test_multiplicative(self, rng):
        a, b = random_bc_matrix(rng, 2, 3), random_bc_matrix(rng, 3, 2)
        assert np.allclose(block_representation(a @ b),
                           block_representation(a) @ block_representation(b), atol=1e-12)

    def test_blocks_of_tensor(self, rng):
        a, b = random_bc_matrix(rng, 2), random_bc_matrix(rng, 3)
        a1, a2 = a.cartesian
        b1, b2 = b.cartesian
        blk = block_representation(tensor_idempotent(a, b))
        n = 6
        assert np.allclose(blk[:n, :n], np.kron(a1, b1) - np.kron(a2, b2), atol=1e-12)
        assert np.allclose(blk[n:, :n], np.kron(a1, b2) + np.kron(a2, b1), atol=1e-12)
        assert np.allclose(blk[:n, n:], -np.kron(a1, b2) - np.kron(a2, b1), atol=1e-12)
        assert np.allclose(blk[n:, n:], blk[:n, :n], atol=1e-12)


class TestLaws:
    def test_bilinearity(self, rng):
        for _ in range(30):
            a, d = random_bc_matrix(rng, 2, 3), random_bc_matrix(rng, 2, 3)
            b, c = random_bc_matrix(rng, 3, 2), random_bc_matrix(rng, 3, 2)
            t = tensor_idempotent
            assert t(a, b + c).max_component_diff(t(a, b) + t(a, c)) <= 1e-11
            assert t(a + d, b).max_component_diff(t(a, b) + t(d, b)) <= 1e-11

    def test_mixed_product(self, rng):
        for _ in range(30):
            a, b = random_bc_matrix(rng, 2, 3), random_bc_matrix(rng, 3, 2)
            c, d = random_bc_matrix(rng, 3, 1), random_bc_matrix(rng, 1, 4)
            t = tensor_idempotent
            assert t(a @ b, c @ d).max_component_diff(t(a, c) @ t(b, d)) <= 1e-10 * (
                1 + a.frobenius() * b.frobenius() * c.frobenius() * d.frobenius())

    def test_inverse_law(self, rng):
        for _ in range(30):
            a, b = well_conditioned(rng, 2), well_conditioned(rng, 3)
            lhs = mat_inverse(tensor_idempotent(a, b))
            rhs = tensor_idempotent(mat_inverse(a), mat_inverse(b))
            assert lhs.max_component_diff(rhs) <= 1e-9

    def test_positivity_and_state_preservation(self):
        for s in range(20):
            a, b = random_gram(2, seed=s), random_gram(3, 2, seed=s + 99)
            assert is_hyperbolic_positive(tensor_idempotent(a, b))
            ra, rb = random_state(2, seed=s), random_state(3, seed=s + 7)
            prod = tensor_idempotent(ra, rb)
            assert is_state(prod)
            assert trace(prod).isclose(trace(ra) * trace(rb), 1e-12)
            assert trace(prod).isclose(1, 1e-12)


class TestRecovery:
    def test_partial_traces_match_formula(self, rng):
        # Oracle: the basis-vector sums written out literally.
        n, m = 2, 3
        c = rng.standard_normal((n * m, n * m)) + 1j * rng.standard_normal((n * m, n * m))
        eye_n, eye_m = np.eye(n), np.eye(m)
        t_n, t_m = partial_traces(c, n, m)
        for d in range(n):
            for cc in range(n):
                val = sum(np.kron(eye_n[d], eye_m[k]).conj() @ c @ np.kron(eye_n[cc], eye_m[k])
                          for k in range(m))
                assert np.isclose(t_n[d, cc], val)
        for d in range(m):
            for cc in range(m):
                val = sum(np.kron(eye_n[k], eye_m[d]).conj() @ c @ np.kron(eye_n[k], eye_m[cc])
                          for k in range(n))
                assert np.isclose(t_m[d, cc], val)

    def test_identity_state(self):
        a, b = recover_factors(BicomplexMatrix.identity(4) / 4, 2, 2)
        half = BicomplexMatrix.identity(2) / 2
        assert a.allclose(half, 1e-15) and b.allclose(half, 1e-15)

    def test_round_trip_states(self):
        for s in range(20):
            rho, sigma = random_state(2, seed=s), random_state(3, seed=1000 + s)
            a, b = recover_factors(tensor_idempotent(rho, sigma), 2, 3)
            assert a.max_component_diff(rho) <= 1e-8
            assert b.max_component_diff(sigma) <= 1e-8

    def test_gauge_for_unnormalized_input(self):
        a0, b0 = random_gram(2, seed=1), random_gram(2, seed=2)
        m = tensor_idempotent(a0, b0)
        a, b = recover_factors(m, 2, 2)
        assert trace(b).isclose(1, 1e-12)
        assert trace(a).isclose(trace(m), 1e-10)
        assert factor_residual(m, a, b) <= 1e-10 * (1 + m.frobenius())
        # same factors up to reciprocal component scalars
        scale = trace(b0)
        assert a.max_component_diff(a0 * scale) <= 1e-9

    def test_bell_pattern_rejected(self):
        with pytest.raises(NotProduct) as info:
            recover_factors(bell_pattern(), 2, 2)
        assert info.value.residual > 1e-3

    def test_zero_trace(self):
        m = BicomplexMatrix(np.eye(4) / 4, np.diag([1.0, -1, 1, -1]))
        with pytest.raises(ZeroTrace):
            recover_factors(m, 2, 2)

    def test_bad_dimensions(self):
        with pytest.raises(ShapeMismatch):
            recover_factors(BicomplexMatrix.identity(4), 3, 2)

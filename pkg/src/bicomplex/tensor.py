"""The bicomplex tensor product and tensor-factor recovery.

For ``A = A1 + j A2`` and ``B = B1 + j B2`` the product is

    A (x)_j B = (A1 (x) B1 - A2 (x) B2) + j (A1 (x) B2 + A2 (x) B1),

which in idempotent coordinates is simply ``(C1 (x) D1) e1 + (C2 (x) D2) e2``.
Kronecker products follow numpy's row-major block layout: entry
``(i1*m1 + i2, j1*m2 + j2)`` equals ``A[i1, j1] * B[i2, j2]``.
"""
from __future__ import annotations

import numpy as np

from .errors import NotProduct, ShapeMismatch, ZeroTrace
from .matrix import BicomplexMatrix, require_square

RECOVERY_GAUGE = "each idempotent component of B has trace 1; A carries trace(M)"


def tensor_cartesian(a: BicomplexMatrix, b: BicomplexMatrix) -> BicomplexMatrix:
    """Tensor product computed from the cartesian parts."""
    a1, a2 = a.cartesian
    b1, b2 = b.cartesian
    return BicomplexMatrix.from_cartesian(np.kron(a1, b1) - np.kron(a2, b2),
                                          np.kron(a1, b2) + np.kron(a2, b1))


def tensor_idempotent(a: BicomplexMatrix, b: BicomplexMatrix) -> BicomplexMatrix:
    """Tensor product computed component-wise on the idempotent parts."""
    return BicomplexMatrix(np.kron(a.c1, b.c1), np.kron(a.c2, b.c2))


tensor = tensor_idempotent


def block_representation(a: BicomplexMatrix) -> np.ndarray:
    """The complex ``2n1 x 2n2`` matrix ``[[A1, -A2], [A2, A1]]``."""
    a1, a2 = a.cartesian
    return np.block([[a1, -a2], [a2, a1]])


def partial_traces(c: np.ndarray, n: int, m: int) -> tuple[np.ndarray, np.ndarray]:
    """Contract a complex ``nm x nm`` matrix against a standard basis of each factor.

    Returns ``(T_n, T_m)`` with ``d^* T_n c = sum_k (d (x) f_k)^* M (c (x) f_k)``
    and ``d^* T_m c = sum_k (e_k (x) d)^* M (e_k (x) c)``. For ``M = X (x) Y``
    these are ``tr(Y) X`` and ``tr(X) Y``.
    """
    t = c.reshape(n, m, n, m)
    return np.einsum("akbk->ab", t), np.einsum("kakb->ab", t)


def factor_residual(m: BicomplexMatrix, a: BicomplexMatrix, b: BicomplexMatrix) -> float:
    """Largest per-component Frobenius norm of ``A (x)_j B - M``."""
    prod = tensor_idempotent(a, b)
    return float(max(np.linalg.norm(prod.c1 - m.c1), np.linalg.norm(prod.c2 - m.c2)))


def recover_factors(m: BicomplexMatrix, n: int, k: int,
                    tol: float = 1e-8) -> tuple[BicomplexMatrix, BicomplexMatrix]:
    """Split ``M = A (x)_j B`` with ``A`` of size ``n`` and ``B`` of size ``k``.

    The factorization is unique only up to reciprocal component scalars. The
    returned pair is fixed so that each idempotent component of ``B`` has
    trace 1 (see ``RECOVERY_GAUGE``). Raises :class:`ZeroTrace` when a
    component of ``trace(M)`` vanishes and :class:`NotProduct` when the
    reconstruction misses ``M`` by more than ``tol * (1 + ||M||_F)``.
    """
    size = require_square(m)
    if n < 1 or k < 1 or n * k != size:
        raise ShapeMismatch(f"cannot split a {size}x{size} matrix into {n} x {k} factors")
    a_parts, b_parts = [], []
    for idx, c in enumerate(m.components, start=1):
        t_n, t_k = partial_traces(c, n, k)
        tr = np.trace(c)
        if abs(tr) <= tol:
            raise ZeroTrace(f"trace of idempotent component {idx} vanishes ({abs(tr):.3e})")
        # t_k = tr(A) B and tr(A) = tr(M) once B is normalized; t_n = tr(B) A = A.
        b_parts.append(t_k / tr)
        a_parts.append(t_n)
    a = BicomplexMatrix(*a_parts)
    b = BicomplexMatrix(*b_parts)
    residual = factor_residual(m, a, b)
    scale = 1 + max(np.linalg.norm(m.c1), np.linalg.norm(m.c2))
    if residual > tol * scale:
        raise NotProduct(f"matrix is not a {n} x {k} tensor product (residual {residual:.3e})",
                         residual)
    return a, b

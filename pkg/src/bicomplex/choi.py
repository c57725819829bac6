"""Completely positive maps between bicomplex matrix spaces.

A linear map ``phi: BC^{n x n} -> BC^{m x m}`` acts independently on the two
idempotent components, ``phi(A) = phi1(C1) e1 + phi2(C2) e2``. It is stored
through the images of the matrix units ``E_jk`` under each component map.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import InputError, NotCP, ShapeMismatch
from .matrix import BicomplexMatrix, require_square
from .positivity import DEFAULT_TOL, is_psd
from .tensor import tensor_idempotent


@dataclass(frozen=True)
class KrausSet:
    """Operators ``V_1 .. V_r`` (each ``m x n``) of ``A -> sum V_i A V_i^{*t}``."""

    n: int
    m: int
    operators: tuple[BicomplexMatrix, ...]

    def __post_init__(self):
        ops = tuple(self.operators)
        if not ops:
            raise InputError("a Kraus set needs at least one operator")
        for op in ops:
            if op.shape != (self.m, self.n):
                raise ShapeMismatch(f"Kraus operator of shape {op.shape}, expected {(self.m, self.n)}")
        object.__setattr__(self, "operators", ops)

    @classmethod
    def from_operators(cls, operators: Sequence[BicomplexMatrix]) -> KrausSet:
        ops = tuple(operators)
        if not ops:
            raise InputError("a Kraus set needs at least one operator")
        m, n = ops[0].shape
        return cls(n, m, ops)

    def __len__(self) -> int:
        return len(self.operators)


@dataclass(frozen=True, eq=False)
class MatrixMap:
    """Linear map given by unit images.

    ``unit_images_1[j, k]`` is the ``m x m`` complex matrix ``phi1(E_jk)``;
    likewise ``unit_images_2`` for the second idempotent component. Both arrays
    have shape ``(n, n, m, m)``.
    """

    n: int
    m: int
    unit_images_1: np.ndarray
    unit_images_2: np.ndarray

    def __post_init__(self):
        expected = (self.n, self.n, self.m, self.m)
        for name in ("unit_images_1", "unit_images_2"):
            arr = np.array(getattr(self, name), dtype=np.complex128)
            if arr.shape != expected:
                raise ShapeMismatch(f"{name} has shape {arr.shape}, expected {expected}")
            arr.setflags(write=False)
            object.__setattr__(self, name, arr)

    @property
    def components(self) -> tuple[np.ndarray, np.ndarray]:
        return self.unit_images_1, self.unit_images_2

    def __call__(self, a: BicomplexMatrix) -> BicomplexMatrix:
        return apply_map(self, a)


def _unit_images_from_kraus(ops: Sequence[np.ndarray], n: int, m: int) -> np.ndarray:
    # V E_jk V^H = outer(V[:, j], conj(V[:, k]))
    images = np.zeros((n, n, m, m), dtype=np.complex128)
    for v in ops:
        images += np.einsum("aj,bk->jkab", v, v.conj())
    return images


def map_from_kraus(kraus: KrausSet) -> MatrixMap:
    return MatrixMap(
        kraus.n, kraus.m,
        _unit_images_from_kraus([v.c1 for v in kraus.operators], kraus.n, kraus.m),
        _unit_images_from_kraus([v.c2 for v in kraus.operators], kraus.n, kraus.m),
    )


def apply_kraus(kraus: KrausSet, a: BicomplexMatrix) -> BicomplexMatrix:
    """Direct evaluation of ``sum V_i A V_i^{*t}``."""
    if a.shape != (kraus.n, kraus.n):
        raise ShapeMismatch(f"map acts on {kraus.n}x{kraus.n} matrices, got {a.shape}")
    out = BicomplexMatrix.zeros(kraus.m)
    for v in kraus.operators:
        out = out + v @ a @ v.star_transpose()
    return out


def apply_map(phi: MatrixMap, a: BicomplexMatrix) -> BicomplexMatrix:
    if a.shape != (phi.n, phi.n):
        raise ShapeMismatch(f"map acts on {phi.n}x{phi.n} matrices, got {a.shape}")
    return BicomplexMatrix(np.einsum("jk,jkab->ab", a.c1, phi.unit_images_1),
                           np.einsum("jk,jkab->ab", a.c2, phi.unit_images_2))


def block_apply(phi: MatrixMap, block: BicomplexMatrix) -> BicomplexMatrix:
    """Apply ``phi`` to every ``n x n`` block of an ``Nn x Nn`` matrix."""
    size = require_square(block)
    if size % phi.n:
        raise ShapeMismatch(f"{size}x{size} matrix is not made of {phi.n}x{phi.n} blocks")
    big_n = size // phi.n
    out = []
    for c, images in zip(block.components, phi.components):
        blocks = c.reshape(big_n, phi.n, big_n, phi.n)
        mapped = np.einsum("pjqk,jkab->paqb", blocks, images)
        out.append(mapped.reshape(big_n * phi.m, big_n * phi.m))
    return BicomplexMatrix(*out)


def _component_choi(images: np.ndarray) -> np.ndarray:
    # sum_jk E_jk (x) phi(E_jk): entry (j*m + a, k*m + b) = phi(E_jk)[a, b]
    n, _, m, _ = images.shape
    return images.transpose(0, 2, 1, 3).reshape(n * m, n * m)


def choi_matrix(phi: MatrixMap) -> BicomplexMatrix:
    """Bicomplex Choi matrix whose components are the complex Choi matrices of ``phi1, phi2``."""
    return BicomplexMatrix(_component_choi(phi.unit_images_1), _component_choi(phi.unit_images_2))


def is_completely_positive(phi: MatrixMap, tol: float = DEFAULT_TOL) -> bool:
    choi = choi_matrix(phi)
    return is_psd(choi.c1, tol) and is_psd(choi.c2, tol)


def _component_kraus(choi: np.ndarray, n: int, m: int, tol: float) -> list[np.ndarray]:
    w, v = np.linalg.eigh((choi + choi.conj().T) / 2)
    if w.size == 0:
        return []
    cutoff = tol * (1 + np.max(np.abs(w)))
    ops = []
    for idx in np.argsort(w)[::-1]:
        if w[idx] <= cutoff:
            break
        # eigenvector index j*m + a becomes operator entry [a, j]
        ops.append(np.sqrt(w[idx]) * v[:, idx].reshape(n, m).T)
    return ops


def kraus_decomposition(phi: MatrixMap, tol: float = DEFAULT_TOL) -> KrausSet:
    """Kraus operators ``V_k = U_k e1 + W_k e2`` from the component Choi spectra.

    The two components may have different Kraus ranks; the shorter list is
    padded with zero operators. A map with zero Choi matrix yields a single
    zero operator.
    """
    if not is_completely_positive(phi, tol):
        raise NotCP("map is not completely positive")
    choi = choi_matrix(phi)
    u = _component_kraus(choi.c1, phi.n, phi.m, tol)
    w = _component_kraus(choi.c2, phi.n, phi.m, tol)
    r = max(len(u), len(w), 1)
    zero = np.zeros((phi.m, phi.n), dtype=np.complex128)
    u += [zero] * (r - len(u))
    w += [zero] * (r - len(w))
    return KrausSet(phi.n, phi.m, tuple(BicomplexMatrix(a, b) for a, b in zip(u, w)))


def is_trace_preserving(phi: MatrixMap, tol: float = DEFAULT_TOL) -> bool:
    """``tr phi(E_jk) = delta_jk`` in both components."""
    eye = np.eye(phi.n)
    for images in phi.components:
        traces = np.einsum("jkaa->jk", images)
        if np.max(np.abs(traces - eye), initial=0.0) > tol:
            return False
    return True


def tensor_maps(phi: MatrixMap, psi: MatrixMap) -> MatrixMap:
    """``phi (x) psi`` acting on ``BC^{n1 n2 x n1 n2}``.

    The unit ``E_{(j1 j2),(k1 k2)} = E_{j1 k1} (x) E_{j2 k2}`` is sent to
    ``phi(E_{j1 k1}) (x)_j psi(E_{j2 k2})``.
    """
    n, m = phi.n * psi.n, phi.m * psi.m
    out = []
    for f, g in zip(phi.components, psi.components):
        # kron of the m-blocks for every (j1,k1,j2,k2), then regroup unit indices
        t = np.einsum("pqab,rscd->prqsacbd", f, g)
        out.append(t.reshape(n, n, m, m))
    return MatrixMap(n, m, *out)


def tensor_kraus(k1: KrausSet, k2: KrausSet) -> KrausSet:
    """All pairwise products ``V_i (x)_j W_j``."""
    ops = tuple(tensor_idempotent(v, w) for v in k1.operators for w in k2.operators)
    return KrausSet(k1.n * k2.n, k1.m * k2.m, ops)


def compose_maps(second: MatrixMap, first: MatrixMap) -> MatrixMap:
    """``second o first``, obtained by pushing the unit images of ``first`` through ``second``."""
    if first.m != second.n:
        raise ShapeMismatch(f"cannot compose: output size {first.m} vs input size {second.n}")
    out = [np.einsum("jkab,abcd->jkcd", f, s)
           for f, s in zip(first.components, second.components)]
    return MatrixMap(first.n, second.m, *out)


def identity_map(n: int) -> MatrixMap:
    return map_from_kraus(KrausSet(n, n, (BicomplexMatrix.identity(n),)))


def transpose_map(n: int) -> MatrixMap:
    """``A -> A^t`` on both idempotent components; positive but not completely positive."""
    images = np.zeros((n, n, n, n), dtype=np.complex128)
    for j in range(n):
        for k in range(n):
            images[j, k, k, j] = 1
    return MatrixMap(n, n, images, images)


def depolarizing_map(n: int) -> MatrixMap:
    """``A -> tr(A) I / n`` in each component."""
    images = np.zeros((n, n, n, n), dtype=np.complex128)
    for j in range(n):
        images[j, j] = np.eye(n) / n
    return MatrixMap(n, n, images, images)


def random_kraus(n: int, m: int, r: int, seed=None, trace_preserving: bool = False) -> KrausSet:
    """Random Kraus set; with ``trace_preserving`` the operators satisfy ``sum V^{*t} V = I``."""
    rng = np.random.default_rng(seed)
    comps = []
    for _ in range(2):
        ops = rng.standard_normal((r, m, n)) + 1j * rng.standard_normal((r, m, n))
        if trace_preserving:
            # Whiten so that sum_i V_i^H V_i = I.
            s = np.einsum("iab,iac->bc", ops.conj(), ops)
            w, v = np.linalg.eigh(s)
            ops = ops @ ((v / np.sqrt(w)) @ v.conj().T)
        comps.append(ops)
    return KrausSet(n, m, tuple(BicomplexMatrix(a, b) for a, b in zip(*comps)))

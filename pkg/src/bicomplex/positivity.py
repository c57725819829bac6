"""Hyperbolic positivity of bicomplex matrices.

A square ``A`` is hyperbolic positive when ``(c^*)^t A c`` lies in D+ for every
``c``. Three equivalent tests are offered (``components``, ``cartesian``,
``eigen``) together with Cholesky and rank-one factorizations and the state
predicate (hyperbolic positive with trace 1).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

import numpy as np

from .errors import InputError, NotPositive, ShapeMismatch
from .matrix import BicomplexMatrix, BicomplexVector, require_square, trace
from .scalar import BicomplexScalar

PositivityMethod = Literal["components", "cartesian", "eigen"]
METHODS: tuple[PositivityMethod, ...] = ("components", "cartesian", "eigen")

DEFAULT_TOL = 1e-10


@dataclass(frozen=True)
class EigenPairList:
    """Unpaired spectra of the two idempotent components."""

    spectrum1: np.ndarray
    spectrum2: np.ndarray


def _is_hermitian(c: np.ndarray, tol: float) -> bool:
    scale = 1 + np.max(np.abs(c), initial=0.0)
    return bool(np.max(np.abs(c - c.conj().T), initial=0.0) <= tol * scale)


def _psd_by_eigvalsh(c: np.ndarray, tol: float) -> bool:
    if c.size == 0:
        return True
    w = np.linalg.eigvalsh((c + c.conj().T) / 2)
    radius = np.max(np.abs(w))
    return bool(w[0] >= -tol * (1 + radius))


def is_psd(c: np.ndarray, tol: float = DEFAULT_TOL) -> bool:
    """Complex PSD test: Hermitian within ``tol`` and no eigenvalue below ``-tol (1 + rho)``."""
    return _is_hermitian(c, tol) and _psd_by_eigvalsh(c, tol)


def quadratic_form(a: BicomplexMatrix, c: BicomplexVector) -> BicomplexScalar:
    """``(c^*)^t A c``."""
    n = require_square(a)
    if len(c) != n:
        raise ShapeMismatch(f"vector of length {len(c)} for a {n}x{n} matrix")
    return BicomplexScalar(np.vdot(c.v1, a.c1 @ c.v1), np.vdot(c.v2, a.c2 @ c.v2))


def _positive_components(a: BicomplexMatrix, tol: float) -> bool:
    return is_psd(a.c1, tol) and is_psd(a.c2, tol)


def _positive_cartesian(a: BicomplexMatrix, tol: float) -> bool:
    # A1 >= 0, A2 skew-adjoint and -A1 <= i A2 <= A1.
    a1, a2 = a.cartesian
    scale = 1 + max(np.max(np.abs(a1), initial=0.0), np.max(np.abs(a2), initial=0.0))
    if np.max(np.abs(a2 + a2.conj().T), initial=0.0) > tol * scale:
        return False
    if not is_psd(a1, tol):
        return False
    ia2 = 1j * a2
    return is_psd(a1 - ia2, tol) and is_psd(a1 + ia2, tol)


def _positive_eigen(a: BicomplexMatrix, tol: float) -> bool:
    for c in a.components:
        if not _is_hermitian(c, tol):
            return False
        w = np.linalg.eigvals(c)
        if w.size == 0:
            continue
        radius = np.max(np.abs(w))
        if np.any(np.abs(w.imag) > tol * (1 + radius)) or np.any(w.real < -tol * (1 + radius)):
            return False
    return True


_TESTS = {
    "components": _positive_components,
    "cartesian": _positive_cartesian,
    "eigen": _positive_eigen,
}


def is_hyperbolic_positive(a: BicomplexMatrix, tol: float = DEFAULT_TOL,
                           method: PositivityMethod = "components") -> bool:
    require_square(a)
    try:
        test = _TESTS[method]
    except KeyError:
        raise ValueError(f"unknown positivity method {method!r}") from None
    return test(a, tol)


def random_gram(n: int, rank: int | None = None, seed=None) -> BicomplexMatrix:
    """Random hyperbolic-positive ``B^{*t} B`` with ``B`` of shape ``rank x n``."""
    rank = n if rank is None else rank
    if not 1 <= rank <= n:
        raise InputError(f"rank must satisfy 1 <= rank <= n, got rank={rank}, n={n}")
    rng = np.random.default_rng(seed)
    comps = []
    for _ in range(2):
        b = rng.standard_normal((rank, n)) + 1j * rng.standard_normal((rank, n))
        g = b.conj().T @ b
        comps.append((g + g.conj().T) / 2)
    return BicomplexMatrix(*comps)


def random_state(n: int, seed=None) -> BicomplexMatrix:
    """Random full-rank bicomplex state (both components have trace 1)."""
    g = random_gram(n, n, seed)
    return BicomplexMatrix(g.c1 / np.trace(g.c1).real, g.c2 / np.trace(g.c2).real)


def _component_cholesky(c: np.ndarray) -> np.ndarray:
    """Upper-triangular ``U`` with ``c = U^H U``."""
    n = c.shape[0]
    if n == 0:
        return c.copy()
    herm = (c + c.conj().T) / 2
    try:
        return np.linalg.cholesky(herm).conj().T
    except np.linalg.LinAlgError:
        pass
    # Semidefinite: Hermitian square root S (S^H S = c), then S = Q R gives c = R^H R.
    w, v = np.linalg.eigh(herm)
    root = (v * np.sqrt(np.clip(w, 0, None))) @ v.conj().T
    _, r = np.linalg.qr(root)
    d = np.diag(r)
    phase = np.where(np.abs(d) > 0, d.conj() / np.where(np.abs(d) > 0, np.abs(d), 1), 1)
    return phase[:, None] * r


def cholesky(a: BicomplexMatrix, tol: float = DEFAULT_TOL, lower: bool = False) -> BicomplexMatrix:
    """Triangular factor ``T`` with ``A = T^{*t} T``.

    ``T`` is upper triangular by default; ``lower=True`` factors the reversed
    ordering and flips back, giving a lower-triangular ``T``.
    """
    require_square(a)
    if not is_hyperbolic_positive(a, tol):
        raise NotPositive("matrix is not hyperbolic positive")
    factors = []
    for c in a.components:
        if lower:
            u = _component_cholesky(c[::-1, ::-1])
            factors.append(u[::-1, ::-1])
        else:
            factors.append(_component_cholesky(c))
    return BicomplexMatrix(*factors)


def _component_rank_one(c: np.ndarray, tol: float) -> list[np.ndarray]:
    w, v = np.linalg.eigh((c + c.conj().T) / 2)
    if w.size == 0:
        return []
    cutoff = tol * (1 + np.max(np.abs(w)))
    out = []
    for idx in np.argsort(w)[::-1]:
        if w[idx] <= cutoff:
            break
        vec = v[:, idx]
        # Fix the phase so the largest entry is real positive.
        pivot = vec[np.argmax(np.abs(vec))]
        vec = vec * (abs(pivot) / pivot)
        out.append(np.sqrt(w[idx]) * vec)
    return out


def rank_one_decomposition(a: BicomplexMatrix, tol: float = DEFAULT_TOL) -> list[BicomplexVector]:
    """Pairwise orthogonal ``a_i`` with ``A = sum a_i a_i^{*t}``.

    Component eigenvectors are scaled by the square roots of their
    eigenvalues; the shorter list is zero-padded so both components share
    ``r = max(rank C1, rank C2)`` terms.
    """
    n = require_square(a)
    if not is_hyperbolic_positive(a, tol):
        raise NotPositive("matrix is not hyperbolic positive")
    b = _component_rank_one(a.c1, tol)
    c = _component_rank_one(a.c2, tol)
    r = max(len(b), len(c))
    zero = np.zeros(n, dtype=np.complex128)
    b += [zero] * (r - len(b))
    c += [zero] * (r - len(c))
    return [BicomplexVector(bi, ci) for bi, ci in zip(b, c)]


def _trace_is_one(a: BicomplexMatrix, tol: float) -> bool:
    tr = trace(a)
    return bool(abs(tr.l1 - 1) <= tol and abs(tr.l2 - 1) <= tol)


def is_state(a: BicomplexMatrix, tol: float = DEFAULT_TOL) -> bool:
    """Hyperbolic positive with ``trace(A) = 1``."""
    require_square(a)
    return is_hyperbolic_positive(a, tol) and _trace_is_one(a, tol)


def is_complex_state(c: np.ndarray, tol: float = DEFAULT_TOL) -> bool:
    return bool(is_psd(c, tol) and abs(np.trace(c) - 1) <= tol)


def is_state_componentwise(a: BicomplexMatrix, tol: float = DEFAULT_TOL) -> bool:
    """Both idempotent components are complex density matrices."""
    require_square(a)
    return is_complex_state(a.c1, tol) and is_complex_state(a.c2, tol)


def bc_eigenvalues(a: BicomplexMatrix, tol: float = DEFAULT_TOL) -> EigenPairList:
    require_square(a)
    spectra = []
    for c in a.components:
        if _is_hermitian(c, tol):
            spectra.append(np.linalg.eigvalsh((c + c.conj().T) / 2).astype(np.complex128))
        else:
            spectra.append(np.sort_complex(np.linalg.eigvals(c)))
    return EigenPairList(*spectra)

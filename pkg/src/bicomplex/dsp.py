"""Fast products with tensor-structured matrices.

When ``C = A_s (x)_j B_r`` (``A_s`` is ``s x s``, ``B_r`` is ``r x r``) the
product ``Y = C X`` on ``n = r s`` inputs factors as

    Y = P_{n,s} (I_r (x) A_s) P_{n,r} (I_s (x) B_r) X,

two block-diagonal stages separated by stride permutations. Bicomplex inputs
run the complex kernel once per idempotent component.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import BadFactorization, ShapeMismatch
from .matrix import BicomplexMatrix, BicomplexVector
from .tensor import tensor_idempotent


@dataclass(frozen=True, eq=False)
class StridePermutation:
    """The commutation permutation ``P_{n,s}``: ``P (w (x) u) = u (x) w`` for ``len(u) = s``.

    ``index`` is a gather map, ``(P x)[i] = x[index[i]]``.
    """

    n: int
    s: int
    index: np.ndarray

    @property
    def r(self) -> int:
        return self.n // self.s

    def apply(self, x: np.ndarray) -> np.ndarray:
        return np.asarray(x)[self.index]

    def __call__(self, x: np.ndarray) -> np.ndarray:
        return self.apply(x)

    def matrix(self) -> np.ndarray:
        p = np.zeros((self.n, self.n))
        p[np.arange(self.n), self.index] = 1
        return p


def stride_permutation(n: int, s: int) -> StridePermutation:
    if n < 1 or s < 1 or n % s:
        raise BadFactorization(f"{s} does not divide {n}")
    r = n // s
    # w (x) u has w_a u_b at a*s + b; u (x) w puts it at b*r + a.
    a, b = np.meshgrid(np.arange(r), np.arange(s), indexing="xy")
    index = np.empty(n, dtype=np.intp)
    index[(b * r + a).ravel()] = (a * s + b).ravel()
    index.setflags(write=False)
    return StridePermutation(n, s, index)


@dataclass
class OpCounter:
    """Complex multiplication/addition tallies, one slot per idempotent component."""

    complex_mults: list[int] = field(default_factory=lambda: [0, 0])
    complex_adds: list[int] = field(default_factory=lambda: [0, 0])

    def record(self, component: int, mults: int, adds: int) -> None:
        self.complex_mults[component] += mults
        self.complex_adds[component] += adds


def _block_diag_apply(blocks: int, mat: np.ndarray, x: np.ndarray,
                      counter: OpCounter | None, component: int) -> np.ndarray:
    """``(I_blocks (x) mat) x``, one dense mat-vec per block."""
    size = mat.shape[0]
    y = np.empty_like(x)
    for blk in range(blocks):
        seg = slice(blk * size, (blk + 1) * size)
        y[seg] = mat @ x[seg]
        if counter is not None:
            counter.record(component, size * size, size * (size - 1))
    return y


def _check_shapes(a_s: BicomplexMatrix, b_r: BicomplexMatrix, x: BicomplexVector) -> tuple[int, int]:
    if not (a_s.is_square() and b_r.is_square()):
        raise ShapeMismatch("tensor factors must be square")
    s, r = a_s.rows, b_r.rows
    if len(x) != r * s:
        raise ShapeMismatch(f"input length {len(x)} does not equal {s} * {r}")
    return s, r


def apply_factored(a_s: BicomplexMatrix, b_r: BicomplexMatrix, x: BicomplexVector,
                   counter: OpCounter | None = None) -> BicomplexVector:
    """``(A_s (x)_j B_r) X`` through the two-stage factorization.

    Costs ``s r^2 + r s^2`` complex multiplications per component; the
    permutations are free.
    """
    s, r = _check_shapes(a_s, b_r, x)
    n = r * s
    p_ns = stride_permutation(n, s)
    p_nr = stride_permutation(n, r)
    out = []
    for comp, (a, b, v) in enumerate(zip(a_s.components, b_r.components, (x.v1, x.v2))):
        y = _block_diag_apply(s, b, v, counter, comp)
        y = p_nr(y)
        y = _block_diag_apply(r, a, y, counter, comp)
        out.append(p_ns(y))
    return BicomplexVector(*out)


def apply_direct(a_s: BicomplexMatrix, b_r: BicomplexMatrix, x: BicomplexVector,
                 counter: OpCounter | None = None) -> BicomplexVector:
    """Reference product: materialize ``A_s (x)_j B_r`` and multiply."""
    _check_shapes(a_s, b_r, x)
    c = tensor_idempotent(a_s, b_r)
    n = c.rows
    if counter is not None:
        for comp in (0, 1):
            counter.record(comp, n * n, n * (n - 1))
    return c @ x


def multiplication_counts(s: int, r: int) -> dict[str, int]:
    """Per-component complex multiplication counts of both routes."""
    return {"direct_mults": (r * s) ** 2, "factored_mults": s * r * r + r * s * s}

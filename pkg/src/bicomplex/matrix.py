"""Bicomplex matrices and vectors.

A matrix ``A`` over BC is held as its two idempotent complex components,
``A = C1 e1 + C2 e2``. The cartesian pair ``A = A1 + j A2`` is a view::

    C1 = A1 - i A2        A1 = (C1 + C2) / 2
    C2 = A1 + i A2        A2 = i (C1 - C2) / 2
"""
from __future__ import annotations

from numbers import Number
from typing import Iterable, Literal, Sequence

import numpy as np

from .errors import NotSquare, ShapeMismatch, Singular
from .scalar import BicomplexScalar, HyperbolicScalar

InverseMethod = Literal["componentwise", "cartesian"]

# A component is singular when sigma_min <= SINGULAR_RTOL * (sigma_max + 1).
SINGULAR_RTOL = 1e-10


def _frozen(arr) -> np.ndarray:
    out = np.array(arr, dtype=np.complex128)
    out.setflags(write=False)
    return out


class BicomplexMatrix:
    """Immutable ``rows x cols`` matrix over the bicomplex numbers."""

    __slots__ = ("c1", "c2")

    def __init__(self, c1, c2=None):
        c1 = _frozen(c1)
        c2 = c1 if c2 is None else _frozen(c2)
        if c1.ndim != 2 or c2.ndim != 2:
            raise ShapeMismatch("idempotent components must be 2-D")
        if c1.shape != c2.shape:
            raise ShapeMismatch(f"component shapes differ: {c1.shape} vs {c2.shape}")
        object.__setattr__(self, "c1", c1)
        object.__setattr__(self, "c2", c2)

    def __setattr__(self, name, value):
        raise AttributeError("BicomplexMatrix is immutable")

    # construction

    @classmethod
    def from_cartesian(cls, a1, a2=None) -> BicomplexMatrix:
        a1 = np.asarray(a1, dtype=np.complex128)
        a2 = np.zeros_like(a1) if a2 is None else np.asarray(a2, dtype=np.complex128)
        if a1.shape != a2.shape:
            raise ShapeMismatch(f"cartesian shapes differ: {a1.shape} vs {a2.shape}")
        return cls(a1 - 1j * a2, a1 + 1j * a2)

    @classmethod
    def from_entries(cls, rows: Sequence[Sequence]) -> BicomplexMatrix:
        """Build from a nested list of scalars (numbers or :class:`BicomplexScalar`)."""
        entries = [[BicomplexScalar.coerce(v) for v in row] for row in rows]
        if not entries or any(len(r) != len(entries[0]) for r in entries):
            raise ShapeMismatch("ragged or empty entry list")
        return cls([[z.l1 for z in r] for r in entries], [[z.l2 for z in r] for r in entries])

    @classmethod
    def identity(cls, n: int) -> BicomplexMatrix:
        return cls(np.eye(n))

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> BicomplexMatrix:
        return cls(np.zeros((rows, rows if cols is None else cols)))

    @classmethod
    def scalar(cls, z) -> BicomplexMatrix:
        z = BicomplexScalar.coerce(z)
        return cls([[z.l1]], [[z.l2]])

    # views

    @property
    def shape(self) -> tuple[int, int]:
        return self.c1.shape

    @property
    def rows(self) -> int:
        return self.c1.shape[0]

    @property
    def cols(self) -> int:
        return self.c1.shape[1]

    @property
    def components(self) -> tuple[np.ndarray, np.ndarray]:
        return self.c1, self.c2

    @property
    def cartesian(self) -> tuple[np.ndarray, np.ndarray]:
        return (self.c1 + self.c2) / 2, 1j * (self.c1 - self.c2) / 2

    def __getitem__(self, idx) -> BicomplexScalar:
        r, c = idx
        return BicomplexScalar(self.c1[r, c], self.c2[r, c])

    def entries(self) -> list[list[BicomplexScalar]]:
        return [[self[r, c] for c in range(self.cols)] for r in range(self.rows)]

    def is_square(self) -> bool:
        return self.rows == self.cols

    def frobenius(self) -> float:
        """Euclidean norm of the entries seen as vectors of R^4."""
        return float(np.sqrt((np.linalg.norm(self.c1) ** 2 + np.linalg.norm(self.c2) ** 2) / 2))

    def max_component_diff(self, other: BicomplexMatrix) -> float:
        _check_same_shape(self, other)
        return float(max(np.max(np.abs(self.c1 - other.c1), initial=0.0),
                         np.max(np.abs(self.c2 - other.c2), initial=0.0)))

    def allclose(self, other: BicomplexMatrix, atol: float = 1e-12) -> bool:
        return self.shape == other.shape and self.max_component_diff(other) <= atol

    def is_hyperbolic(self, tol: float = 1e-12) -> bool:
        """True when both idempotent components are real matrices."""
        return bool(np.all(np.abs(self.c1.imag) <= tol) and np.all(np.abs(self.c2.imag) <= tol))

    # arithmetic

    def __add__(self, other):
        if not isinstance(other, BicomplexMatrix):
            return NotImplemented
        return mat_add(self, other)

    def __sub__(self, other):
        if not isinstance(other, BicomplexMatrix):
            return NotImplemented
        _check_same_shape(self, other)
        return BicomplexMatrix(self.c1 - other.c1, self.c2 - other.c2)

    def __neg__(self):
        return BicomplexMatrix(-self.c1, -self.c2)

    def __matmul__(self, other):
        if isinstance(other, BicomplexMatrix):
            return mat_mul(self, other)
        if isinstance(other, BicomplexVector):
            return mat_vec(self, other)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, (Number, BicomplexScalar, HyperbolicScalar)):
            return scalar_mul(other, self)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Number):
            return BicomplexMatrix(self.c1 / other, self.c2 / other)
        return NotImplemented

    def star_transpose(self) -> BicomplexMatrix:
        return star_transpose(self)

    def __eq__(self, other):
        if not isinstance(other, BicomplexMatrix):
            return NotImplemented
        return (self.shape == other.shape and np.array_equal(self.c1, other.c1)
                and np.array_equal(self.c2, other.c2))

    __hash__ = None

    def __repr__(self) -> str:
        return f"BicomplexMatrix(c1={self.c1.tolist()!r}, c2={self.c2.tolist()!r})"


class BicomplexVector:
    """Immutable vector in BC^n held by idempotent components."""

    __slots__ = ("v1", "v2")

    def __init__(self, v1, v2=None):
        v1 = _frozen(v1)
        v2 = v1 if v2 is None else _frozen(v2)
        if v1.ndim != 1 or v1.shape != v2.shape:
            raise ShapeMismatch(f"vector components must be 1-D of equal length, got {v1.shape}, {v2.shape}")
        object.__setattr__(self, "v1", v1)
        object.__setattr__(self, "v2", v2)

    def __setattr__(self, name, value):
        raise AttributeError("BicomplexVector is immutable")

    @classmethod
    def from_entries(cls, values: Iterable) -> BicomplexVector:
        zs = [BicomplexScalar.coerce(v) for v in values]
        return cls([z.l1 for z in zs], [z.l2 for z in zs])

    @classmethod
    def from_cartesian(cls, a1, a2=None) -> BicomplexVector:
        a1 = np.asarray(a1, dtype=np.complex128)
        a2 = np.zeros_like(a1) if a2 is None else np.asarray(a2, dtype=np.complex128)
        return cls(a1 - 1j * a2, a1 + 1j * a2)

    def __len__(self) -> int:
        return self.v1.shape[0]

    def __getitem__(self, idx: int) -> BicomplexScalar:
        return BicomplexScalar(self.v1[idx], self.v2[idx])

    def __add__(self, other):
        if not isinstance(other, BicomplexVector):
            return NotImplemented
        if len(self) != len(other):
            raise ShapeMismatch("vector lengths differ")
        return BicomplexVector(self.v1 + other.v1, self.v2 + other.v2)

    def __mul__(self, other):
        if isinstance(other, (Number, BicomplexScalar, HyperbolicScalar)):
            z = BicomplexScalar.coerce(other)
            return BicomplexVector(z.l1 * self.v1, z.l2 * self.v2)
        return NotImplemented

    __rmul__ = __mul__

    def as_column(self) -> BicomplexMatrix:
        return BicomplexMatrix(self.v1[:, None], self.v2[:, None])

    def outer_star(self) -> BicomplexMatrix:
        """The rank-one matrix ``a a^{*t}``."""
        return BicomplexMatrix(np.outer(self.v1, self.v1.conj()), np.outer(self.v2, self.v2.conj()))

    def max_component_diff(self, other: BicomplexVector) -> float:
        if len(self) != len(other):
            raise ShapeMismatch("vector lengths differ")
        return float(max(np.max(np.abs(self.v1 - other.v1), initial=0.0),
                         np.max(np.abs(self.v2 - other.v2), initial=0.0)))

    def __eq__(self, other):
        if not isinstance(other, BicomplexVector):
            return NotImplemented
        return np.array_equal(self.v1, other.v1) and np.array_equal(self.v2, other.v2)

    __hash__ = None

    def __repr__(self) -> str:
        return f"BicomplexVector(v1={self.v1.tolist()!r}, v2={self.v2.tolist()!r})"


def _check_same_shape(a: BicomplexMatrix, b: BicomplexMatrix) -> None:
    if a.shape != b.shape:
        raise ShapeMismatch(f"shapes differ: {a.shape} vs {b.shape}")


def require_square(a: BicomplexMatrix) -> int:
    if not a.is_square():
        raise NotSquare(f"expected a square matrix, got {a.shape}")
    return a.rows


def mat_add(a: BicomplexMatrix, b: BicomplexMatrix) -> BicomplexMatrix:
    _check_same_shape(a, b)
    return BicomplexMatrix(a.c1 + b.c1, a.c2 + b.c2)


def mat_mul(a: BicomplexMatrix, b: BicomplexMatrix) -> BicomplexMatrix:
    if a.cols != b.rows:
        raise ShapeMismatch(f"cannot multiply {a.shape} by {b.shape}")
    return BicomplexMatrix(a.c1 @ b.c1, a.c2 @ b.c2)


def mat_vec(a: BicomplexMatrix, x: BicomplexVector) -> BicomplexVector:
    if a.cols != len(x):
        raise ShapeMismatch(f"cannot apply {a.shape} matrix to vector of length {len(x)}")
    return BicomplexVector(a.c1 @ x.v1, a.c2 @ x.v2)


def scalar_mul(z, a: BicomplexMatrix) -> BicomplexMatrix:
    z = BicomplexScalar.coerce(z)
    return BicomplexMatrix(z.l1 * a.c1, z.l2 * a.c2)


def star_transpose(a: BicomplexMatrix) -> BicomplexMatrix:
    """``(A^*)^t``: the star conjugation fixes idempotent slots, so each component is conj-transposed."""
    return BicomplexMatrix(a.c1.conj().T, a.c2.conj().T)


def trace(a: BicomplexMatrix) -> BicomplexScalar:
    require_square(a)
    return BicomplexScalar(np.trace(a.c1), np.trace(a.c2))


def _check_invertible(c: np.ndarray, component: int) -> None:
    sv = np.linalg.svd(c, compute_uv=False)
    if sv.size == 0:
        return
    if sv[-1] <= SINGULAR_RTOL * (sv[0] + 1):
        raise Singular(f"idempotent component {component} is singular "
                       f"(sigma_min={sv[-1]:.3e}, sigma_max={sv[0]:.3e})", component)


def mat_inverse(a: BicomplexMatrix, method: InverseMethod = "componentwise") -> BicomplexMatrix:
    """Inverse of a square bicomplex matrix.

    ``componentwise`` inverts each idempotent component. ``cartesian`` starts
    from ``A = A1 + j A2``, rebuilds the components from the cartesian parts
    and assembles ``A^{-1} = T1 + j T2`` with ``T1 = (inv(C1) + inv(C2))/2`` and
    ``T2 = -(i/2) (inv(C2) - inv(C1))``.
    """
    n = require_square(a)
    if method == "componentwise":
        c1, c2 = a.c1, a.c2
    elif method == "cartesian":
        a1, a2 = a.cartesian
        c1, c2 = a1 - 1j * a2, a1 + 1j * a2
    else:
        raise ValueError(f"unknown inverse method {method!r}")
    _check_invertible(c1, 1)
    _check_invertible(c2, 2)
    eye = np.eye(n)
    inv1 = np.linalg.solve(c1, eye)
    inv2 = np.linalg.solve(c2, eye)
    if method == "componentwise":
        return BicomplexMatrix(inv1, inv2)
    t1 = (inv1 + inv2) / 2
    t2 = -0.5j * (inv2 - inv1)
    return BicomplexMatrix.from_cartesian(t1, t2)


def d_inner_product(x: BicomplexVector, y: BicomplexVector) -> BicomplexScalar:
    """``<X1, Y1> e1 + <X2, Y2> e2`` with the Hermitian product ``<u, v> = sum conj(u) v``.

    The result is hyperbolic (and in D+) when ``x is y``; in general each
    component is a complex number, so a :class:`BicomplexScalar` is returned.
    """
    if len(x) != len(y):
        raise ShapeMismatch(f"vector lengths differ: {len(x)} vs {len(y)}")
    return BicomplexScalar(np.vdot(x.v1, y.v1), np.vdot(x.v2, y.v2))


def d_vector_norm(x: BicomplexVector) -> HyperbolicScalar:
    return HyperbolicScalar(np.linalg.norm(x.v1), np.linalg.norm(x.v2))

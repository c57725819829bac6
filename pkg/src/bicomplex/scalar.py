"""Bicomplex and hyperbolic scalars.

A bicomplex number ``Z = x1 + i x2 + j x3 + k x4`` (with ``k = i j``,
``i^2 = j^2 = -1``, ``k^2 = 1``) is stored by its idempotent components
``(l1, l2)`` so that ``Z = l1 e1 + l2 e2`` with ``e1 = (1 + k)/2`` and
``e2 = (1 - k)/2``. Writing ``Z = z1 + j z2`` with ``z1 = x1 + i x2`` and
``z2 = x3 + i x4``::

    l1 = z1 - i z2        z1 = (l1 + l2) / 2
    l2 = z1 + i z2        z2 = i (l1 - l2) / 2

Sums, products and inverses act component-wise on ``(l1, l2)``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from numbers import Number
from typing import Literal

from .errors import ZeroDivisor

ConjugateKind = Literal["bar", "dagger", "star"]

# Additive slack on the idempotent coordinates of a hyperbolic number when
# deciding membership in D+.
D_PLUS_TOL = 1e-12
# Relative threshold below which an idempotent component counts as zero.
ZERO_DIVISOR_TOL = 1e-12


@dataclass(frozen=True)
class BicomplexScalar:
    """An immutable bicomplex number held as its idempotent pair ``(l1, l2)``."""

    l1: complex
    l2: complex

    def __post_init__(self):
        object.__setattr__(self, "l1", complex(self.l1))
        object.__setattr__(self, "l2", complex(self.l2))

    @classmethod
    def from_cartesian(cls, x1: float, x2: float = 0.0, x3: float = 0.0,
                       x4: float = 0.0) -> BicomplexScalar:
        return cls(complex(x1 + x4, x2 - x3), complex(x1 - x4, x2 + x3))

    @classmethod
    def from_complex_pair(cls, z1: complex, z2: complex) -> BicomplexScalar:
        """Build ``z1 + j z2`` from two ``C(i)`` numbers."""
        z1, z2 = complex(z1), complex(z2)
        return cls(z1 - 1j * z2, z1 + 1j * z2)

    @classmethod
    def coerce(cls, value) -> BicomplexScalar:
        if isinstance(value, BicomplexScalar):
            return value
        if isinstance(value, HyperbolicScalar):
            return value.to_bicomplex()
        if isinstance(value, Number):
            c = complex(value)
            return cls(c, c)
        raise TypeError(f"cannot interpret {value!r} as a bicomplex number")

    # cartesian views

    @property
    def z1(self) -> complex:
        return (self.l1 + self.l2) / 2

    @property
    def z2(self) -> complex:
        return 1j * (self.l1 - self.l2) / 2

    @property
    def cartesian(self) -> tuple[float, float, float, float]:
        """Real coefficients ``(x1, x2, x3, x4)`` of ``1, i, j, k``."""
        a, b = self.l1, self.l2
        return ((a.real + b.real) / 2, (a.imag + b.imag) / 2,
                (b.imag - a.imag) / 2, (a.real - b.real) / 2)

    @property
    def idempotent(self) -> tuple[complex, complex]:
        return self.l1, self.l2

    def is_hyperbolic(self, tol: float = D_PLUS_TOL) -> bool:
        """True when both idempotent components are real (``x2 = x3 = 0``)."""
        return abs(self.l1.imag) <= tol and abs(self.l2.imag) <= tol

    def to_hyperbolic(self, tol: float = D_PLUS_TOL) -> HyperbolicScalar:
        if not self.is_hyperbolic(tol):
            raise ValueError(f"{self} is not a hyperbolic number")
        return HyperbolicScalar(self.l1.real, self.l2.real)

    # arithmetic

    def __add__(self, other):
        try:
            other = BicomplexScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return BicomplexScalar(self.l1 + other.l1, self.l2 + other.l2)

    __radd__ = __add__

    def __neg__(self):
        return BicomplexScalar(-self.l1, -self.l2)

    def __sub__(self, other):
        try:
            other = BicomplexScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return BicomplexScalar(self.l1 - other.l1, self.l2 - other.l2)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            other = BicomplexScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return BicomplexScalar(self.l1 * other.l1, self.l2 * other.l2)

    __rmul__ = __mul__

    def __truediv__(self, other):
        try:
            other = BicomplexScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self * bc_inverse(other)

    def __rtruediv__(self, other):
        return BicomplexScalar.coerce(other) * bc_inverse(self)

    def __pow__(self, n: int):
        return BicomplexScalar(self.l1 ** n, self.l2 ** n)

    def __abs__(self) -> float:
        return euclidean_norm(self)

    def isclose(self, other, tol: float = 1e-12) -> bool:
        other = BicomplexScalar.coerce(other)
        return abs(self.l1 - other.l1) <= tol and abs(self.l2 - other.l2) <= tol

    def __repr__(self) -> str:
        x1, x2, x3, x4 = self.cartesian
        return f"BicomplexScalar({x1!r} + {x2!r}i + {x3!r}j + {x4!r}k)"


@dataclass(frozen=True)
class HyperbolicScalar:
    """A hyperbolic number ``x + k y`` stored as ``s e1 + t e2`` (``s = x + y``, ``t = x - y``)."""

    s: float
    t: float

    def __post_init__(self):
        object.__setattr__(self, "s", float(self.s))
        object.__setattr__(self, "t", float(self.t))

    @classmethod
    def from_xy(cls, x: float, y: float = 0.0) -> HyperbolicScalar:
        return cls(x + y, x - y)

    @classmethod
    def coerce(cls, value) -> HyperbolicScalar:
        if isinstance(value, HyperbolicScalar):
            return value
        if isinstance(value, BicomplexScalar):
            return value.to_hyperbolic()
        if isinstance(value, Number) and not isinstance(value, complex):
            return cls(value, value)
        raise TypeError(f"cannot interpret {value!r} as a hyperbolic number")

    @property
    def x(self) -> float:
        return (self.s + self.t) / 2

    @property
    def y(self) -> float:
        return (self.s - self.t) / 2

    def to_bicomplex(self) -> BicomplexScalar:
        return BicomplexScalar(self.s, self.t)

    def diamond(self) -> HyperbolicScalar:
        """Hyperbolic conjugate ``x - k y`` (swaps the idempotent coordinates)."""
        return HyperbolicScalar(self.t, self.s)

    def __add__(self, other):
        try:
            other = HyperbolicScalar.coerce(other)
        except (TypeError, ValueError):
            return NotImplemented
        return HyperbolicScalar(self.s + other.s, self.t + other.t)

    __radd__ = __add__

    def __neg__(self):
        return HyperbolicScalar(-self.s, -self.t)

    def __sub__(self, other):
        try:
            other = HyperbolicScalar.coerce(other)
        except (TypeError, ValueError):
            return NotImplemented
        return HyperbolicScalar(self.s - other.s, self.t - other.t)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            other = HyperbolicScalar.coerce(other)
        except (TypeError, ValueError):
            return NotImplemented
        return HyperbolicScalar(self.s * other.s, self.t * other.t)

    __rmul__ = __mul__

    def __le__(self, other):
        return d_leq(self, HyperbolicScalar.coerce(other))

    def __ge__(self, other):
        return d_leq(HyperbolicScalar.coerce(other), self)

    def isclose(self, other, tol: float = 1e-12) -> bool:
        other = HyperbolicScalar.coerce(other)
        return abs(self.s - other.s) <= tol and abs(self.t - other.t) <= tol

    def __repr__(self) -> str:
        return f"HyperbolicScalar({self.s!r} e1 + {self.t!r} e2)"


ONE = BicomplexScalar(1, 1)
ZERO = BicomplexScalar(0, 0)
I = BicomplexScalar.from_cartesian(0, 1, 0, 0)
J = BicomplexScalar.from_cartesian(0, 0, 1, 0)
K = BicomplexScalar.from_cartesian(0, 0, 0, 1)
E1 = BicomplexScalar(1, 0)
E2 = BicomplexScalar(0, 1)


def idempotent_split(z: BicomplexScalar) -> tuple[complex, complex]:
    """Return ``(l1, l2)`` with ``z = l1 e1 + l2 e2``."""
    return z.l1, z.l2


def idempotent_join(l1: complex, l2: complex) -> BicomplexScalar:
    return BicomplexScalar(l1, l2)


def conjugate(z: BicomplexScalar, kind: ConjugateKind) -> BicomplexScalar:
    """One of the three bicomplex conjugations.

    ``bar``: ``conj(z1) + j conj(z2)``; ``dagger``: ``z1 - j z2``;
    ``star``: ``conj(z1) - j conj(z2)``. In idempotent coordinates bar swaps
    and conjugates, dagger swaps, star conjugates in place.
    """
    if kind == "bar":
        return BicomplexScalar(z.l2.conjugate(), z.l1.conjugate())
    if kind == "dagger":
        return BicomplexScalar(z.l2, z.l1)
    if kind == "star":
        return BicomplexScalar(z.l1.conjugate(), z.l2.conjugate())
    raise ValueError(f"unknown conjugation {kind!r}")


def bc_mul(z: BicomplexScalar, w: BicomplexScalar) -> BicomplexScalar:
    return BicomplexScalar(z.l1 * w.l1, z.l2 * w.l2)


def bc_inverse(z: BicomplexScalar) -> BicomplexScalar:
    """Multiplicative inverse; raises :class:`ZeroDivisor` on zero divisors."""
    thresh = ZERO_DIVISOR_TOL * (1 + euclidean_norm(z))
    for idx, comp in enumerate((z.l1, z.l2), start=1):
        if abs(comp) <= thresh:
            raise ZeroDivisor(f"idempotent component {idx} of {z} vanishes")
    return BicomplexScalar(1 / z.l1, 1 / z.l2)


def euclidean_norm(z: BicomplexScalar) -> float:
    """Norm of ``z`` seen as a vector of R^4, computed from ``(l1, l2)``."""
    return math.sqrt(abs(z.l1) ** 2 + abs(z.l2) ** 2) / math.sqrt(2)


def euclidean_norm_cartesian(z: BicomplexScalar) -> float:
    return math.sqrt(sum(x * x for x in z.cartesian))


def d_norm(z: BicomplexScalar) -> HyperbolicScalar:
    """Hyperbolic-valued norm ``|l1| e1 + |l2| e2``."""
    return HyperbolicScalar(abs(z.l1), abs(z.l2))


def d_plus_contains(h: HyperbolicScalar, tol: float = D_PLUS_TOL) -> bool:
    return h.s >= -tol and h.t >= -tol


def d_leq(h1: HyperbolicScalar, h2: HyperbolicScalar, tol: float = D_PLUS_TOL) -> bool:
    """Partial order on D: ``h1 <= h2`` iff ``h2 - h1`` lies in D+."""
    return d_plus_contains(h2 - h1, tol)


def hyp_modulus_sq(h: HyperbolicScalar) -> float:
    """``h * h.diamond() = x^2 - y^2``, evaluated as ``s * t`` to avoid cancellation."""
    return h.s * h.t

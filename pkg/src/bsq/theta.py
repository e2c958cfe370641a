"""Level-k theta functions with characteristics and the point-evaluation basis.

theta_w(z) = sum_n exp(pi*i*k*tau*(n+w)^2 + 2*pi*i*k*(n+w)*z), summed over a
symmetric window |n| <= N wide enough that the dropped Gaussian tail is below
eps relative to the largest retained term.  The k characteristics w = j/k and
the k fiber points b_j = j/k give a square evaluation matrix whose
nondegeneracy is checked numerically through its singular values; the
optional half-form normalization is a single positive scalar in this model.
Everything here is plain double precision.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

TRUNCATION_CAP = 10**6
DEFAULT_EPS = 1e-12


class TruncationFailure(ArithmeticError):
    """The eps target would need a summation window beyond the hard cap."""


@dataclass(frozen=True)
class ModularParameter:
    """Upper half-plane parameter of the underlying torus."""

    tau: complex = 1j

    def __post_init__(self):
        object.__setattr__(self, "tau", complex(self.tau))
        if not self.tau.imag > 0:
            raise ValueError(f"Im(tau) must be positive, got {self.tau}")


def _tau_value(tau) -> complex:
    if isinstance(tau, ModularParameter):
        return tau.tau
    t = complex(tau)
    if not t.imag > 0:
        raise ValueError(f"Im(tau) must be positive, got {t}")
    return t


@dataclass(frozen=True)
class ThetaCharacteristic:
    """Characteristic w = j/k with integer j in 0..k-1."""

    k: int
    w: Fraction

    def __post_init__(self):
        object.__setattr__(self, "w", Fraction(self.w))
        if self.k < 1:
            raise ValueError(f"level must be >= 1, got {self.k}")
        j = self.w * self.k
        if j.denominator != 1 or not 0 <= j <= self.k - 1:
            raise ValueError(f"w*k must be an integer in 0..{self.k - 1}, got w={self.w}")

    @property
    def index(self) -> int:
        return int(self.w * self.k)


def characteristics(k: int) -> list[ThetaCharacteristic]:
    """All k characteristics j/k, j = 0..k-1."""
    if not isinstance(k, int) or k < 1:
        raise ValueError(f"level must be an integer >= 1, got {k!r}")
    return [ThetaCharacteristic(k, Fraction(j, k)) for j in range(k)]


@dataclass(frozen=True)
class HalfFormNormalization:
    """Scalar half-form factor; the model keeps it at 1 unless overridden."""

    constant: float = 1.0

    def __post_init__(self):
        if not self.constant > 0:
            raise ValueError(f"normalization must be positive, got {self.constant}")


def bs_points(k: int) -> list[Fraction]:
    """The k Bohr-Sommerfeld points b_j = j/k, increasing, exact rationals."""
    if not isinstance(k, int) or k < 1:
        raise ValueError(f"level must be an integer >= 1, got {k!r}")
    return [Fraction(j, k) for j in range(k)]


def _window(k: int, w: float, z: complex, tau: complex, eps: float) -> int:
    """Half-width N of the summation window |n| <= N.

    The terms fall off like exp(-t*(n - center)^2) with t = pi*k*Im(tau);
    N is the smallest integer with the window edge at least
    sqrt(ln(1/eps)/t) past the Gaussian center, which leaves the omitted
    mass below eps times the largest retained term (geometric tail bound).
    """
    t = math.pi * k * tau.imag
    center = -w - z.imag / tau.imag
    spread = math.sqrt(max(math.log(1.0 / eps), 0.0) / t)
    n = max(2, math.ceil(1.0 + abs(center) + spread))
    if n > TRUNCATION_CAP:
        raise TruncationFailure(
            f"window half-width {n} exceeds the cap {TRUNCATION_CAP} "
            f"(k={k}, Im(tau)={tau.imag}, eps={eps})"
        )
    return n


def truncation_bound(ch: ThetaCharacteristic, z: complex, tau=1j, eps: float = DEFAULT_EPS) -> float:
    """Absolute bound on the dropped tail: eps times the peak term size."""
    tau = _tau_value(tau)
    z = complex(z)
    t = math.pi * ch.k * tau.imag
    shift = z.imag / tau.imag
    return eps * math.exp(t * shift * shift)


def theta_value(ch: ThetaCharacteristic, z: complex, tau=1j, eps: float = DEFAULT_EPS) -> complex:
    """Evaluate theta_w(z) by direct summation over the truncation window."""
    if not isinstance(ch, ThetaCharacteristic):
        raise TypeError(f"expected a ThetaCharacteristic, got {type(ch).__name__}")
    if not eps > 0:
        raise ValueError(f"eps must be positive, got {eps}")
    tau = _tau_value(tau)
    z = complex(z)
    k = ch.k
    w = float(ch.w)
    n_max = _window(k, w, z, tau, eps)
    total = 0j
    for n in range(-n_max, n_max + 1):
        q = n + w
        total += cmath.exp(1j * math.pi * k * tau * q * q + 2j * math.pi * k * q * z)
    return total


@dataclass(frozen=True)
class ThetaBasisMatrix:
    """Square evaluation matrix M[w][j] = norm * theta_{w}(b_j)."""

    k: int
    entries: np.ndarray = field(repr=False)
    tau: complex
    eps: float
    norm_constant: float = 1.0

    def smallest_singular_value(self) -> float:
        return float(np.linalg.svd(self.entries, compute_uv=False)[-1])

    def determinant(self) -> complex:
        return complex(np.linalg.det(self.entries))


def bpu_matrix(k: int, tau=1j, eps: float = DEFAULT_EPS, norm: HalfFormNormalization | float | None = None) -> ThetaBasisMatrix:
    """Evaluate every characteristic at every Bohr-Sommerfeld point.

    Row index = characteristic j/k, column index = point b_j.
    """
    tau = _tau_value(tau)
    if norm is None:
        norm = HalfFormNormalization()
    elif not isinstance(norm, HalfFormNormalization):
        norm = HalfFormNormalization(float(norm))
    points = bs_points(k)
    entries = np.empty((k, k), dtype=complex)
    for i, ch in enumerate(characteristics(k)):
        for j, b in enumerate(points):
            entries[i, j] = norm.constant * theta_value(ch, complex(float(b), 0.0), tau, eps)
    return ThetaBasisMatrix(k=k, entries=entries, tau=tau, eps=eps, norm_constant=norm.constant)

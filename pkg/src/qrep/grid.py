"""Uniform real-line lattices, their Fourier duals, and grid inner products.

Every other module builds on the conventions fixed here:

* grids are uniform with a power-of-two point count;
* user-facing grids are symmetric about the origin, ``x_j = -(n/2)*dx + j*dx``,
  so ``x = 0`` is always a sample point;
* the dual lattice has spacing ``dp = 2*pi/(n*dx)`` and is stored in monotone
  order, never in FFT wrap order;
* integrals are rectangle sums ``sum_j f_j * dx``, which is exact for the
  band-limited periodic case and makes the discrete Fourier map unitary.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.interpolate import CubicSpline

__all__ = [
    "Grid",
    "RepresentationLabel",
    "Wavefunction",
    "POSITION",
    "MOMENTUM",
    "CORRELATION",
    "interp_label",
    "rotation_label",
    "make_grid",
    "dual_grid",
    "log_grid",
    "inner",
    "log_resample",
    "norm",
    "require_contained",
    "is_contained",
]

BOUNDARY_DECAY_TOL = 1e-12


def _is_power_of_two(n: int) -> bool:
    return n >= 1 and (n & (n - 1)) == 0


@dataclass(frozen=True)
class Grid:
    """Uniform lattice of ``n`` points starting at ``x_min`` with spacing ``dx``.

    ``_dual_dx`` remembers the spacing of the grid this one was derived from,
    so that ``dual_grid`` is an exact involution regardless of rounding.
    """

    n: int
    dx: float
    x_min: float
    _dual_dx: float | None = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if not _is_power_of_two(self.n) or self.n < 8:
            raise ValueError(f"grid_size_power_of_two: n must be a power of two >= 8, got {self.n}")
        if not (self.dx > 0 and np.isfinite(self.dx)):
            raise ValueError(f"grid_spacing_positive: dx must be positive and finite, got {self.dx}")
        if not np.isfinite(self.x_min):
            raise ValueError(f"grid_origin_finite: x_min must be finite, got {self.x_min}")

    @property
    def length(self) -> float:
        return self.n * self.dx

    @property
    def points(self) -> np.ndarray:
        return self.x_min + self.dx * np.arange(self.n)

    @property
    def x_max(self) -> float:
        """Last sample point."""
        return self.x_min + (self.n - 1) * self.dx


@dataclass(frozen=True)
class RepresentationLabel:
    """Which observable's eigenbasis the samples are coefficients in."""

    kind: str
    parameter: float | None = None


POSITION = RepresentationLabel("position")
MOMENTUM = RepresentationLabel("momentum")
CORRELATION = RepresentationLabel("correlation")


def interp_label(alpha: float) -> RepresentationLabel:
    if not (0.0 <= alpha <= 1.0):
        raise ValueError(f"interp_alpha_range: alpha must lie in [0, 1], got {alpha}")
    return RepresentationLabel("interp", float(alpha))


def rotation_label(theta: float) -> RepresentationLabel:
    if not (0.0 < theta <= np.pi / 2):
        raise ValueError(f"rotation_theta_range: theta must lie in (0, pi/2], got {theta}")
    return RepresentationLabel("rotation", float(theta))


@dataclass(frozen=True)
class Wavefunction:
    """Complex samples on a grid, tagged with the representation they live in.

    The sample array is frozen after construction; operations return new
    instances, so shared values are safe to use concurrently.
    """

    grid: Grid
    samples: np.ndarray
    label: RepresentationLabel

    def __post_init__(self):
        arr = np.asarray(self.samples, dtype=complex)
        if arr.shape != (self.grid.n,):
            raise ValueError(
                f"sample_count: expected {self.grid.n} samples, got shape {arr.shape}"
            )
        if not np.all(np.isfinite(arr.real)) or not np.all(np.isfinite(arr.imag)):
            raise ValueError("sample_finite: samples must all be finite")
        arr = arr.copy()
        arr.setflags(write=False)
        object.__setattr__(self, "samples", arr)


def make_grid(n: int, length: float) -> Grid:
    """Symmetric grid of ``n`` points covering ``[-length/2, length/2)``."""
    if not isinstance(n, (int, np.integer)) or not _is_power_of_two(int(n)) or n < 8:
        raise ValueError(f"grid_size_power_of_two: n must be a power of two >= 8, got {n}")
    if not (length > 0 and np.isfinite(length)):
        raise ValueError(f"grid_length_positive: length must be positive, got {length}")
    dx = float(length) / int(n)
    return Grid(int(n), dx, -(int(n) // 2) * dx)


def dual_grid(g: Grid) -> Grid:
    """Fourier-dual lattice: same count, spacing ``2*pi/(n*dx)``, symmetric.

    Applying ``dual_grid`` twice returns the original spacing bit-exactly.
    """
    dp = g._dual_dx if g._dual_dx is not None else 2.0 * np.pi / (g.n * g.dx)
    return Grid(g.n, dp, -(g.n // 2) * dp, _dual_dx=g.dx)


def log_grid(n: int, u_min: float, u_max: float) -> Grid:
    """Uniform grid on ``[u_min, u_max)``; substrate for the log-variable transform."""
    if not (np.isfinite(u_min) and np.isfinite(u_max) and u_max > u_min):
        raise ValueError(f"log_window_order: need u_min < u_max, got ({u_min}, {u_max})")
    if not isinstance(n, (int, np.integer)) or not _is_power_of_two(int(n)) or n < 8:
        raise ValueError(f"grid_size_power_of_two: n must be a power of two >= 8, got {n}")
    du = (float(u_max) - float(u_min)) / int(n)
    return Grid(int(n), du, float(u_min))


def norm(psi: Wavefunction) -> float:
    """Rectangle-rule L2 norm on the wavefunction's own lattice."""
    return float(np.sqrt(np.sum(np.abs(psi.samples) ** 2) * psi.grid.dx))


def inner(a: Wavefunction, b: Wavefunction) -> complex:
    """Rectangle-rule inner product, conjugate-linear in the first argument."""
    if a.grid != b.grid:
        raise ValueError("grid_mismatch: inner product requires identical grids")
    if a.label != b.label:
        raise ValueError(
            f"label_mismatch: cannot combine {a.label.kind} with {b.label.kind} samples"
        )
    return complex(np.vdot(a.samples, b.samples) * a.grid.dx)


def is_contained(psi: Wavefunction, tol: float = BOUNDARY_DECAY_TOL) -> bool:
    """True when the samples have decayed below ``tol`` at both domain edges."""
    s = psi.samples
    return bool(max(abs(s[0]), abs(s[-1])) <= tol)


def require_contained(psi: Wavefunction, tol: float = BOUNDARY_DECAY_TOL) -> None:
    s = psi.samples
    edge = max(abs(s[0]), abs(s[-1]))
    if edge > tol:
        raise ValueError(
            f"boundary_decay: state must decay to <= {tol:g} at the domain edge, got {edge:.3e}"
        )


def log_resample(psi: Wavefunction, u_grid: Grid, side: int) -> np.ndarray:
    """Resample onto a logarithmic axis: ``h(u) = sqrt(2) e^(u/2) psi(side*e^u)``.

    ``psi`` must be position-labelled and is expected to be one parity
    component; the caller chooses which sign of the axis to read through
    ``side``.  Values are taken by cubic interpolation of the samples, so the
    result is accurate to the interpolation error of the underlying lattice.
    """
    if psi.label != POSITION:
        raise ValueError("position_label: log_resample expects position-representation samples")
    if side not in (+1, -1):
        raise ValueError(f"side_sign: side must be +1 or -1, got {side}")
    u = u_grid.points
    x_edge = max(abs(psi.grid.x_min), abs(psi.grid.x_max))
    if np.exp(u[-1]) > x_edge:
        raise ValueError(
            f"log_window_support: e^u_max = {np.exp(u[-1]):.4g} exceeds the grid support {x_edge:.4g}"
        )
    spline = CubicSpline(psi.grid.points, psi.samples)
    return np.sqrt(2.0) * np.exp(u / 2.0) * spline(side * np.exp(u))


# ---------------------------------------------------------------------------
# Discrete Fourier sums on centred lattices.
#
# With x_j = x0 + j*dx and a symmetric output lattice k_m = -(n/2)*dk + m*dk,
# dk = 2*pi/(n*dx), the phase factor splits as
#     e^{-i k_m x_j} = e^{-i k_m x0} * (-1)^j * e^{-2*pi*i*j*m/n},
# so the lattice sum is one FFT plus two cheap phase multiplications.
# ---------------------------------------------------------------------------


def _alternating(n: int) -> np.ndarray:
    s = np.ones(n)
    s[1::2] = -1.0
    return s


def fourier_sum(values: np.ndarray, g: Grid) -> tuple[Grid, np.ndarray]:
    """``sum_j values_j exp(-i k x_j) dx`` on the monotone dual lattice of ``g``."""
    dual = dual_grid(g)
    k = dual.points
    out = g.dx * np.exp(-1j * k * g.x_min) * np.fft.fft(_alternating(g.n) * values)
    return dual, out


def inverse_fourier_sum(values: np.ndarray, k_grid: Grid, x_grid: Grid) -> np.ndarray:
    """``sum_m values_m exp(+i k_m x_j) dk`` for ``x_j`` on ``x_grid``.

    ``k_grid`` must be symmetric about zero and ``x_grid`` must have the
    matching dual spacing (arbitrary offset is allowed).
    """
    n = k_grid.n
    if x_grid.n != n:
        raise ValueError("grid_mismatch: lattices must have equal point counts")
    if abs(k_grid.dx * x_grid.dx * n - 2.0 * np.pi) > 1e-9 * 2.0 * np.pi:
        raise ValueError("grid_mismatch: lattices are not a Fourier-dual pair")
    k = k_grid.points
    return (
        k_grid.dx
        * n
        * _alternating(n)
        * np.fft.ifft(values * np.exp(1j * k * x_grid.x_min))
    )

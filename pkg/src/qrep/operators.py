"""Discrete actions of X, P, S(alpha), S(theta), C and the moment engine.

Two independent derivative discretizations are provided on purpose.  The
spectral derivative backs all production operators; the fourth-order finite
difference backs the eigen-residual checks, where the chirp kernels are not
periodic and a second, unrelated discretization guards against convention
bugs in the first.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .grid import (
    POSITION,
    MOMENTUM,
    Wavefunction,
    dual_grid,
    fourier_sum,
    inner,
    inverse_fourier_sum,
    require_contained,
)

__all__ = [
    "MomentReport",
    "apply_x",
    "apply_p",
    "apply_s",
    "apply_s_theta",
    "apply_c",
    "apply_c_momentum",
    "parity_flip",
    "moments",
    "fd_derivative",
    "windowed_eigen_residual",
    "HERMITIAN_IMAG_TOL",
]

HERMITIAN_IMAG_TOL = 1e-9


def _require_position(psi: Wavefunction) -> None:
    if psi.label != POSITION:
        raise ValueError("position_label: operator expects position-representation samples")


def apply_x(psi: Wavefunction) -> Wavefunction:
    """Multiply by the lattice coordinate.  Output is not a normalized state."""
    _require_position(psi)
    return Wavefunction(psi.grid, psi.grid.points * psi.samples, psi.label)


def apply_p(psi: Wavefunction) -> Wavefunction:
    """Spectral derivative operator ``-i d/dx``.

    The samples are transformed, multiplied by the dual variable, and
    transformed back, so the input must have decayed at the domain edge
    (spectral differentiation treats the data as periodic).
    """
    _require_position(psi)
    require_contained(psi)
    kgrid, tilde = fourier_sum(psi.samples, psi.grid)
    out = inverse_fourier_sum(kgrid.points * tilde, kgrid, psi.grid) / (2.0 * np.pi)
    return Wavefunction(psi.grid, out, psi.label)


def apply_s(psi: Wavefunction, alpha: float) -> Wavefunction:
    """Interpolating observable ``alpha*X + (1-alpha)*P``."""
    if not np.isfinite(alpha):
        raise ValueError(f"interp_alpha_finite: alpha must be finite, got {alpha}")
    if alpha == 1.0:
        return apply_x(psi)
    if alpha == 0.0:
        return apply_p(psi)
    xpart = apply_x(psi)
    ppart = apply_p(psi)
    return Wavefunction(psi.grid, alpha * xpart.samples + (1.0 - alpha) * ppart.samples, psi.label)


def apply_s_theta(psi: Wavefunction, theta: float) -> Wavefunction:
    """Phase-space rotated observable ``X cos(theta) + P sin(theta)``."""
    if not np.isfinite(theta):
        raise ValueError(f"rotation_theta_finite: theta must be finite, got {theta}")
    xpart = apply_x(psi)
    ppart = apply_p(psi)
    return Wavefunction(
        psi.grid,
        np.cos(theta) * xpart.samples + np.sin(theta) * ppart.samples,
        psi.label,
    )


def apply_c(psi: Wavefunction) -> Wavefunction:
    """Symmetrized correlation observable ``(XP + PX)/2 = -i (x d/dx + 1/2)``."""
    return Wavefunction(
        psi.grid,
        0.5 * (apply_x(apply_p(psi)).samples + apply_p(apply_x(psi)).samples),
        psi.label,
    )


def apply_c_momentum(phi: Wavefunction) -> Wavefunction:
    """Correlation observable acting on momentum-representation samples.

    Built by the conjugation rule: the momentum form of C is the position
    form with the variable renamed and the whole operator conjugated, which
    gives ``+i (p d/dp + 1/2)``.  The derivative is evaluated spectrally
    through the position side.
    """
    if phi.label != MOMENTUM:
        raise ValueError("momentum_label: operator expects momentum-representation samples")
    sqrt_2pi = np.sqrt(2.0 * np.pi)
    xgrid = dual_grid(phi.grid)
    x = xgrid.points
    psi_x = inverse_fourier_sum(phi.samples, phi.grid, xgrid) / sqrt_2pi
    _, raw = fourier_sum(-1j * x * psi_x, xgrid)
    dphi = raw / sqrt_2pi
    p = phi.grid.points
    return Wavefunction(phi.grid, 1j * (p * dphi + 0.5 * phi.samples), phi.label)


def parity_flip(psi: Wavefunction) -> Wavefunction:
    """Reflect ``x -> -x`` on the lattice (the leftmost point maps to itself)."""
    n = psi.grid.n
    idx = (-np.arange(n)) % n
    return Wavefunction(psi.grid, psi.samples[idx], psi.label)


@dataclass(frozen=True)
class MomentReport:
    """First and second moments plus both sides of the strengthened bound.

    ``lhs = var_x * var_p`` and ``rhs = 1/4 + corr_term^2`` where
    ``corr_term = mean_c - mean_x*mean_p``; ``heisenberg_rhs`` is the plain
    1/4 floor the correlation term strengthens.
    """

    mean_x: float
    mean_p: float
    var_x: float
    var_p: float
    mean_c: float
    corr_term: float
    lhs: float
    rhs: float
    heisenberg_rhs: float = 0.25

    def as_dict(self) -> dict:
        return {
            "mean_x": self.mean_x,
            "mean_p": self.mean_p,
            "var_x": self.var_x,
            "var_p": self.var_p,
            "mean_c": self.mean_c,
            "corr_term": self.corr_term,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "heisenberg_rhs": self.heisenberg_rhs,
        }


def _real_expectation(psi: Wavefunction, op_psi: Wavefunction, name: str) -> float:
    val = inner(psi, op_psi)
    if abs(val.imag) > HERMITIAN_IMAG_TOL:
        raise ValueError(
            f"hermitian_expectation: imaginary part of <{name}> is {val.imag:.3e}, "
            f"above {HERMITIAN_IMAG_TOL:g}; the state is not resolved on this grid"
        )
    return val.real


def moments(psi: Wavefunction) -> MomentReport:
    """Moment report for a resolved, contained position-representation state.

    Every expectation is computed as ``inner(psi, Op psi)`` and must come out
    real to within ``HERMITIAN_IMAG_TOL``; a larger imaginary part signals an
    unresolved state and raises instead of being silently discarded.
    """
    _require_position(psi)
    require_contained(psi)
    x_psi = apply_x(psi)
    p_psi = apply_p(psi)
    mean_x = _real_expectation(psi, x_psi, "X")
    mean_p = _real_expectation(psi, p_psi, "P")
    mean_x2 = _real_expectation(psi, apply_x(x_psi), "X^2")
    mean_p2 = _real_expectation(psi, apply_p(p_psi), "P^2")
    mean_c = _real_expectation(psi, apply_c(psi), "C")
    var_x = mean_x2 - mean_x**2
    var_p = mean_p2 - mean_p**2
    corr = mean_c - mean_x * mean_p
    return MomentReport(
        mean_x=mean_x,
        mean_p=mean_p,
        var_x=var_x,
        var_p=var_p,
        mean_c=mean_c,
        corr_term=corr,
        lhs=var_x * var_p,
        rhs=0.25 + corr**2,
    )


def fd_derivative(values: np.ndarray, dx: float) -> np.ndarray:
    """Fourth-order central first derivative; the outer two points are NaN."""
    d = np.full(len(values), np.nan, dtype=complex)
    d[2:-2] = (-values[4:] + 8.0 * values[3:-1] - 8.0 * values[1:-3] + values[:-4]) / (12.0 * dx)
    return d


def windowed_eigen_residual(
    kernel: Wavefunction,
    eigenvalue: float,
    window: np.ndarray,
    x_coeff: float,
    d_coeff: float,
    dilation: bool = False,
) -> float:
    """Relative residual of ``(Op - eigenvalue) kernel`` on a window.

    Differentiates by finite differences: the kernels are not periodic, so
    the spectral derivative does not apply to them.  ``Op`` is
    ``x_coeff*x - i*d_coeff*d/dx`` for the linear families and
    ``-i (x d/dx + 1/2)`` when ``dilation`` is set.  The window must avoid
    the domain edges.
    """
    x = kernel.grid.points
    deriv = fd_derivative(kernel.samples, kernel.grid.dx)
    if dilation:
        op = -1j * (x * deriv + 0.5 * kernel.samples)
    else:
        op = x_coeff * x * kernel.samples - 1j * d_coeff * deriv
    resid = op - eigenvalue * kernel.samples
    mask = window & np.isfinite(resid.real)
    num = np.sqrt(np.sum(np.abs(resid[mask]) ** 2))
    den = np.sqrt(np.sum(np.abs(kernel.samples[mask]) ** 2))
    return float(num / den)

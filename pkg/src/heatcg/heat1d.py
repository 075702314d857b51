"""Finite volume discretization of the steady 1D heat equation.

The domain [0, L] is split into N equal cells with unknowns at the cell
centers x_i = i*dx + dx/2. Dirichlet values T_L and T_R are imposed
through boundary source terms: with a_w = a_e = gamma/dx, every row
carries the diagonal a_p = a_w + a_e, the boundary rows additionally
accumulate -s_p - a_w (left) and -s_p - a_e (right) with s_p = -2*gamma/dx,
and the right-hand side receives s_u*T_L and s_u*T_R with s_u = 2*gamma/dx.
Both boundary updates are additive, so the single row of an N=1 problem
receives both contributions.

The exact solution is the linear profile T(x) = T_L + (T_R - T_L)*x/L,
which the discretization represents exactly: the solve error is solver
error only, at any resolution.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

from .cgsolver import CgConfig, CgResult, cg_solve
from .linalg import DenseMatrix, Vector, dense_to_crs, l2_norm, vec_sub

__all__ = [
    "HeatProblem",
    "StencilCoefficients",
    "AssembledSystem",
    "HeatSolution",
    "stencil_coefficients",
    "cell_centers",
    "assemble",
    "analytic_solution",
    "solve_heat",
]

Storage = Literal["dense", "crs"]


def _checked_positive_real(value: object, label: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise TypeError(f"{label} must be a real number, got {type(value).__name__}")
    value = float(value)
    if not math.isfinite(value) or value <= 0:
        raise ValueError(f"{label} must be a finite positive real, got {value!r}")
    return value


def _checked_finite_real(value: object, label: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise TypeError(f"{label} must be a real number, got {type(value).__name__}")
    value = float(value)
    if not math.isfinite(value):
        raise ValueError(f"{label} must be finite, got {value!r}")
    return value


@dataclass(frozen=True)
class HeatProblem:
    """Problem definition: diffusivity, domain, resolution, boundary values."""

    gamma: float = 1.0
    domain_length: float = 1.0
    number_of_cells: int = 100
    boundary_left: float = 0.0
    boundary_right: float = 1.0

    def __post_init__(self) -> None:
        _checked_positive_real(self.gamma, "gamma")
        _checked_positive_real(self.domain_length, "domain_length")
        n = self.number_of_cells
        if isinstance(n, bool) or not isinstance(n, int):
            raise TypeError(f"number_of_cells must be an integer, got {type(n).__name__}")
        if n < 1:
            raise ValueError(f"number_of_cells must be >= 1, got {n}")
        _checked_finite_real(self.boundary_left, "boundary_left")
        _checked_finite_real(self.boundary_right, "boundary_right")


@dataclass(frozen=True)
class StencilCoefficients:
    """Derived per-cell coefficients; the identities are validated."""

    dx: float
    a_w: float
    a_e: float
    a_p: float
    s_p: float
    s_u: float

    def __post_init__(self) -> None:
        _checked_positive_real(self.dx, "dx")
        if not (self.a_w == self.a_e):
            raise ValueError(f"a_w must equal a_e, got {self.a_w!r} and {self.a_e!r}")
        if self.a_p != self.a_w + self.a_e:
            raise ValueError(
                f"a_p must equal a_w + a_e, got {self.a_p!r} vs {self.a_w + self.a_e!r}"
            )
        if self.s_u != -self.s_p:
            raise ValueError(f"s_u must equal -s_p, got {self.s_u!r} and {self.s_p!r}")


@dataclass(frozen=True)
class AssembledSystem:
    """The N x N system A T = b plus the cell center coordinates.

    Construction verifies the structural invariants: the matrix is square,
    bitwise symmetric, and tridiagonal; rhs and cell_centers have length N.
    """

    matrix: DenseMatrix
    rhs: Vector
    cell_centers: Vector

    def __post_init__(self) -> None:
        m = self.matrix
        if m.rows != m.cols:
            raise ValueError(f"matrix must be square, got {m.rows}x{m.cols}")
        n = m.rows
        if len(self.rhs) != n:
            raise ValueError(f"rhs length {len(self.rhs)} must equal {n}")
        if len(self.cell_centers) != n:
            raise ValueError(
                f"cell_centers length {len(self.cell_centers)} must equal {n}"
            )
        entries = m.entries
        for i in range(n):
            for j in range(i + 1, n):
                upper = entries[i * n + j]
                lower = entries[j * n + i]
                if upper != lower:
                    raise ValueError(
                        f"matrix must be symmetric: ({i},{j}) == {upper!r} "
                        f"but ({j},{i}) == {lower!r}"
                    )
                if j > i + 1 and upper != 0.0:
                    raise ValueError(
                        f"matrix must be tridiagonal: nonzero {upper!r} at ({i},{j})"
                    )


@dataclass(frozen=True)
class HeatSolution:
    """Solve outcome: temperatures, solver diagnostics, error vs analytic."""

    temperature: Vector
    cg: CgResult
    l2_error_vs_analytic: float


def stencil_coefficients(p: HeatProblem) -> StencilCoefficients:
    """Evaluate dx = L/N and the five coefficient formulas."""
    dx = p.domain_length / p.number_of_cells
    a_w = p.gamma / dx
    a_e = p.gamma / dx
    a_p = a_w + a_e
    s_p = -2.0 * p.gamma / dx
    s_u = 2.0 * p.gamma / dx
    return StencilCoefficients(dx=dx, a_w=a_w, a_e=a_e, a_p=a_p, s_p=s_p, s_u=s_u)


def cell_centers(p: HeatProblem) -> Vector:
    """x_i = i*dx + dx/2 for i in [0, N)."""
    dx = p.domain_length / p.number_of_cells
    return Vector([i * dx + dx / 2.0 for i in range(p.number_of_cells)])


def assemble(p: HeatProblem) -> AssembledSystem:
    """Build the tridiagonal system; boundary rows accumulate additively."""
    c = stencil_coefficients(p)
    n = p.number_of_cells
    entries = [0.0] * (n * n)
    for i in range(n):
        entries[i * n + i] = c.a_p
    entries[0] += -c.s_p - c.a_w
    entries[(n - 1) * n + (n - 1)] += -c.s_p - c.a_e
    for i in range(n - 1):
        entries[i * n + (i + 1)] = -c.a_e
        entries[(i + 1) * n + i] = -c.a_w
    rhs = [0.0] * n
    rhs[0] += c.s_u * p.boundary_left
    rhs[n - 1] += c.s_u * p.boundary_right
    return AssembledSystem(
        matrix=DenseMatrix(n, n, entries),
        rhs=Vector(rhs),
        cell_centers=cell_centers(p),
    )


def analytic_solution(p: HeatProblem) -> Vector:
    """Linear profile T(x) = T_L + (T_R - T_L)*x/L at the cell centers."""
    t_l = p.boundary_left
    span = p.boundary_right - p.boundary_left
    length = p.domain_length
    return Vector([t_l + span * x / length for x in cell_centers(p)])


def solve_heat(p: HeatProblem, cfg: CgConfig, storage: Storage = "dense") -> HeatSolution:
    """Assemble, solve with conjugate gradients, and compare to analytic.

    storage selects the operator representation handed to the solver;
    both choices produce bitwise identical temperatures.
    """
    if storage not in ("dense", "crs"):
        raise ValueError(f"storage must be 'dense' or 'crs', got {storage!r}")
    system = assemble(p)
    operator = system.matrix if storage == "dense" else dense_to_crs(system.matrix)
    result = cg_solve(operator, system.rhs, cfg)
    error = l2_norm(vec_sub(result.solution, analytic_solution(p)))
    return HeatSolution(
        temperature=result.solution, cg=result, l2_error_vs_analytic=error
    )

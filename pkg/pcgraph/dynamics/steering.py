"""Finite-horizon Gramians and minimum-energy steering of the followers.

The input u(t) = B^T e^{A^T (T-t)} W(T)^{-1} (x_target - e^{AT} x0) drives the
followers from x0 to x_target in time T with the least energy
d^T W(T)^{-1} d. Every computed input is re-simulated with RK4 before the
result is reported as steered.
"""

from __future__ import annotations

import logging
from enum import Enum
from typing import Literal

import numpy as np
from pydantic import BaseModel, ConfigDict
from scipy.integrate import simpson

from pcgraph.config import get_settings
from pcgraph.dynamics.simulate import Trajectory, integrate_rk4
from pcgraph.dynamics.system import FollowerSystem

logger = logging.getLogger(__name__)

GramianMethod = Literal["quadrature", "spectral"]

_MAX_QUADRATURE_STEPS = 1 << 15
_REFINEMENTS = 4


class SteeringStatus(str, Enum):
    STEERED = "steered"
    UNCONTROLLABLE = "uncontrollable-detected"


class SteeringResult(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    status: SteeringStatus
    times: np.ndarray
    input_trajectory: np.ndarray | None
    state_trajectory: np.ndarray | None = None
    achieved_final: np.ndarray
    residual: float
    tolerance: float
    gramian_condition: float
    energy: float | None
    follower_order: tuple[int, ...]
    leader_order: tuple[int, ...]

    @property
    def steered(self) -> bool:
        return self.status is SteeringStatus.STEERED

    def input_as_trajectory(self) -> Trajectory | None:
        if self.input_trajectory is None:
            return None
        return Trajectory(times=self.times, states=self.input_trajectory, node_order=self.leader_order)

    def states_as_trajectory(self) -> Trajectory | None:
        """Re-simulated follower states under the computed input."""
        if self.state_trajectory is None:
            return None
        return Trajectory(times=self.times, states=self.state_trajectory, node_order=self.follower_order)

    def render(self) -> str:
        lines = [
            f"status: {self.status.value}",
            f"gramian_condition: {self.gramian_condition:.4e}",
            f"residual: {self.residual:.4e} (tolerance {self.tolerance:.1e})",
            "achieved_final: " + ", ".join(f"{v:.4f}" for v in self.achieved_final),
        ]
        if self.energy is not None:
            lines.append(f"energy: {self.energy:.6g}")
        return "\n".join(lines)


def _spectral_gramian(system: FollowerSystem, T: float) -> np.ndarray:
    lam, Q = system.eigenvalues, system.eigenvectors
    C = Q.T @ system.B
    s = lam[:, None] + lam[None, :]
    small = np.abs(s) < 1e-14
    safe = np.where(small, 1.0, s)
    integral = np.where(small, T, np.expm1(s * T) / safe)
    return Q @ ((C @ C.T) * integral) @ Q.T


def _simpson_gramian(system: FollowerSystem, T: float, steps: int) -> np.ndarray:
    times = np.linspace(0.0, T, steps + 1)
    stack = np.empty((times.size, system.n_f, system.n_f))
    for i, t in enumerate(times):
        M = system.propagator(t) @ system.B
        stack[i] = M @ M.T
    return simpson(stack, x=times, axis=0)


def gramian(
    system: FollowerSystem,
    T: float,
    steps: int = 64,
    method: GramianMethod = "quadrature",
    rel_tol: float | None = None,
) -> np.ndarray:
    """W(T) = integral over [0, T] of e^{At} B B^T e^{A^T t} dt.

    ``quadrature`` uses Simpson's rule and doubles the grid until successive
    results differ by less than `rel_tol` relative; ``spectral`` integrates
    in closed form in the eigenbasis of A.
    """
    if T <= 0:
        raise ValueError(f"horizon must be positive, got {T}")
    if system.n_f == 0:
        return np.zeros((0, 0))
    if method == "spectral":
        W = _spectral_gramian(system, T)
        return (W + W.T) / 2

    rel_tol = get_settings().gramian_rel_tol if rel_tol is None else rel_tol
    steps += steps % 2
    previous = _simpson_gramian(system, T, steps)
    while True:
        steps *= 2
        current = _simpson_gramian(system, T, steps)
        change = np.abs(current - previous).max()
        scale = max(np.abs(current).max(), np.finfo(float).tiny)
        if change <= rel_tol * scale:
            break
        if steps >= _MAX_QUADRATURE_STEPS:
            logger.warning("Gramian quadrature stopped at %d steps (relative change %.2e)", steps, change / scale)
            break
        previous = current
    logger.debug("Gramian converged with %d Simpson steps", steps)
    return (current + current.T) / 2


def steer(
    system: FollowerSystem,
    x0: np.ndarray,
    x_target: np.ndarray,
    T: float,
    steps: int | None = None,
) -> SteeringResult:
    """Minimum-energy steering from x0 to x_target over [0, T].

    Returns ``uncontrollable-detected`` (with no input) when the Gramian is
    too ill-conditioned, or when re-simulation keeps missing the target after
    grid refinement.

    Raises:
        DimensionError: If x0 or x_target does not have one entry per follower.
    """
    settings = get_settings()
    steps = steps or settings.steer_steps
    x0 = system.check_state(x0, "x0")
    x_target = system.check_state(x_target, "x_target")
    tolerance = 1e-6 * (1.0 + (float(np.abs(x_target).max()) if x_target.size else 0.0))

    def result(status: SteeringStatus, **fields: object) -> SteeringResult:
        return SteeringResult(
            status=status,
            tolerance=tolerance,
            follower_order=system.follower_order,
            leader_order=system.leader_order,
            **fields,
        )

    if system.n_f == 0:
        return result(
            SteeringStatus.STEERED,
            times=np.linspace(0.0, T, steps + 1),
            input_trajectory=np.zeros((steps + 1, system.l)),
            state_trajectory=np.zeros((steps + 1, 0)),
            achieved_final=x0,
            residual=0.0,
            gramian_condition=1.0,
            energy=0.0,
        )

    W = gramian(system, T)
    condition = float(np.linalg.cond(W))
    free = system.propagator(T) @ x0
    if not np.isfinite(condition) or condition > settings.gramian_condition_max:
        logger.info("Gramian condition %.3e exceeds %.1e", condition, settings.gramian_condition_max)
        return result(
            SteeringStatus.UNCONTROLLABLE,
            times=np.linspace(0.0, T, steps + 1),
            input_trajectory=None,
            achieved_final=free,
            residual=float(np.abs(x_target - free).max()),
            gramian_condition=condition,
            energy=None,
        )

    d = x_target - free
    eta = np.linalg.solve(W, d)
    energy = float(d @ eta)

    def control(t: float) -> np.ndarray:
        return system.B.T @ (system.propagator(T - t) @ eta)

    for _ in range(_REFINEMENTS + 1):
        times, states = integrate_rk4(lambda t, x: system.rhs(x, control(t)), x0, T, steps)
        achieved = states[-1]
        residual = float(np.abs(achieved - x_target).max())
        if residual <= tolerance:
            break
        logger.debug("Residual %.3e above %.3e with %d steps; refining", residual, tolerance, steps)
        steps *= 2
    else:
        logger.warning("Steering residual %.3e stays above %.3e; reporting as uncontrollable", residual, tolerance)
        return result(
            SteeringStatus.UNCONTROLLABLE,
            times=times,
            input_trajectory=None,
            achieved_final=achieved,
            residual=residual,
            gramian_condition=condition,
            energy=None,
        )

    inputs = np.vstack([control(t) for t in times])
    return result(
        SteeringStatus.STEERED,
        times=times,
        input_trajectory=inputs,
        state_trajectory=states,
        achieved_final=achieved,
        residual=residual,
        gramian_condition=condition,
        energy=energy,
    )

"""Fixed-step RK4 simulation of consensus and leader-follower dynamics."""

from __future__ import annotations

import io
import logging
from collections.abc import Callable

import numpy as np
from pydantic import BaseModel, ConfigDict

from pcgraph.core.graph.engine import Graph
from pcgraph.core.leaders.partition import LeaderSet
from pcgraph.dynamics.system import DimensionError, FollowerSystem

logger = logging.getLogger(__name__)

Signal = Callable[[float], np.ndarray]


class Trajectory(BaseModel):
    """States on a uniform time grid; column j of `states` belongs to node_order[j]."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    times: np.ndarray
    states: np.ndarray
    node_order: tuple[int, ...]

    @property
    def final(self) -> np.ndarray:
        return self.states[-1]

    def to_csv(self) -> str:
        buffer = io.StringIO()
        header = ",".join(["t"] + [f"x_{node}" for node in self.node_order])
        np.savetxt(
            buffer,
            np.column_stack([self.times, self.states]),
            delimiter=",",
            header=header,
            comments="",
            fmt="%.10g",
        )
        return buffer.getvalue()


def integrate_rk4(
    rhs: Callable[[float, np.ndarray], np.ndarray], x0: np.ndarray, T: float, steps: int
) -> tuple[np.ndarray, np.ndarray]:
    """Classical fourth-order Runge-Kutta on [0, T] with `steps` equal steps."""
    h = T / steps
    times = np.linspace(0.0, T, steps + 1)
    states = np.empty((steps + 1, x0.shape[0]))
    states[0] = x = np.asarray(x0, dtype=float)
    for i in range(steps):
        t = times[i]
        k1 = rhs(t, x)
        k2 = rhs(t + h / 2, x + h / 2 * k1)
        k3 = rhs(t + h / 2, x + h / 2 * k2)
        k4 = rhs(t + h, x + h * k3)
        x = x + h / 6 * (k1 + 2 * k2 + 2 * k3 + k4)
        states[i + 1] = x
    return times, states


def _step_count(T: float, dt: float) -> int:
    if dt <= 0:
        raise ValueError(f"step size must be positive, got {dt}")
    if T < dt:
        raise ValueError(f"horizon {T} is shorter than one step {dt}")
    steps = max(1, int(round(T / dt)))
    if abs(steps * dt - T) > 1e-9 * T:
        logger.debug("Adjusted step to %.6g so that %d steps cover T=%.6g", T / steps, steps, T)
    return steps


def simulate(
    graph: Graph,
    leaders: LeaderSet | None,
    leader_signal: Signal | None,
    x0: np.ndarray,
    T: float,
    dt: float,
) -> Trajectory:
    """Integrate the network dynamics.

    Without leaders this is the consensus system dx/dt = -L x over all nodes.
    With leaders, the followers obey dx_f/dt = -L_f x_f - L_fl x_l(t) where
    x_l(t) = leader_signal(t) (zero when no signal is given).

    Raises:
        DimensionError: If x0 or the signal output has the wrong length.
        ValueError: If dt <= 0 or T < dt.
    """
    steps = _step_count(T, dt)

    if leaders is None:
        if leader_signal is not None:
            raise DimensionError("a leader signal needs a leader set")
        state = np.asarray(x0, dtype=float).reshape(-1)
        if state.shape[0] != graph.n:
            raise DimensionError(f"x0 has length {state.shape[0]}, expected {graph.n} nodes")
        L = graph.laplacian_array().astype(float)
        times, states = integrate_rk4(lambda t, x: -L @ x, state, T, steps)
        return Trajectory(times=times, states=states, node_order=tuple(graph.nodes))

    system = FollowerSystem.from_graph(graph, leaders)
    state = system.check_state(x0, "x0")
    zero = np.zeros(system.l)

    def signal(t: float) -> np.ndarray:
        if leader_signal is None:
            return zero
        value = np.asarray(leader_signal(t), dtype=float).reshape(-1)
        if value.shape[0] != system.l:
            raise DimensionError(f"leader signal has length {value.shape[0]}, expected {system.l}")
        return value

    times, states = integrate_rk4(lambda t, x: system.rhs(x, signal(t)), state, T, steps)
    return Trajectory(times=times, states=states, node_order=system.follower_order)

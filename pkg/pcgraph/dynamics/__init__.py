"""Consensus simulation and minimum-energy steering."""

from pcgraph.dynamics.simulate import Trajectory, integrate_rk4, simulate
from pcgraph.dynamics.steering import SteeringResult, SteeringStatus, gramian, steer
from pcgraph.dynamics.system import DimensionError, FollowerSystem

__all__ = [
    "DimensionError",
    "FollowerSystem",
    "SteeringResult",
    "SteeringStatus",
    "Trajectory",
    "gramian",
    "integrate_rk4",
    "simulate",
    "steer",
]

"""
pcgraph - perfect controllability of multi-agent interaction graphs

Decide whether a leader-follower consensus network stays controllable under
every choice of leaders, certify the answer exactly, build such graphs step by
step, and steer them.
"""

from importlib.metadata import PackageNotFoundError, version

try:
    # Prefer the installed distribution version (matches pyproject.toml).
    __version__ = version("pcgraph")
except PackageNotFoundError:  # pragma: no cover
    # Source checkout without an installed distribution.
    __version__ = "0.0.0"
__license__ = "MIT"

from pcgraph.config import PcGraphSettings, get_settings
from pcgraph.core.exact import ExactCertificate, IntPolynomial, char_poly, check_perfect_exact, is_squarefree
from pcgraph.core.graph import Graph, GraphError, LaplacianMatrix, load_graph, parse_graph, serialize_graph
from pcgraph.core.leaders import (
    LeaderSet,
    classify_all_leader_sets,
    kalman_controllable,
    partition_laplacian,
    pbh_controllable,
    perfect_by_definition,
)
from pcgraph.core.spectral import PcVerdict, SpectralReport, check_perfect_numeric, eigendecompose
from pcgraph.construct import PairScheme, enumerate_variants, init_scheme, run_script
from pcgraph.dynamics import FollowerSystem, gramian, simulate, steer
from pcgraph.search import SpectrumTarget, pc_census, random_census, reconstruct_base

__all__ = [
    "__version__",
    # Config
    "PcGraphSettings",
    "get_settings",
    # Graphs
    "Graph",
    "GraphError",
    "LaplacianMatrix",
    "load_graph",
    "parse_graph",
    "serialize_graph",
    # Spectral and exact checks
    "PcVerdict",
    "SpectralReport",
    "check_perfect_numeric",
    "eigendecompose",
    "ExactCertificate",
    "IntPolynomial",
    "char_poly",
    "check_perfect_exact",
    "is_squarefree",
    # Leaders
    "LeaderSet",
    "classify_all_leader_sets",
    "kalman_controllable",
    "partition_laplacian",
    "pbh_controllable",
    "perfect_by_definition",
    # Construction
    "PairScheme",
    "enumerate_variants",
    "init_scheme",
    "run_script",
    # Dynamics
    "FollowerSystem",
    "gramian",
    "simulate",
    "steer",
    # Search
    "SpectrumTarget",
    "pc_census",
    "random_census",
    "reconstruct_base",
]

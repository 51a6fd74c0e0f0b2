"""Relaxed area of the vortex map: free-boundary Plateau toolbox."""

from ._core import (  # noqa: F401
    NoCatenoidError,
    NoConvergenceError,
    NoSignChangeError,
    Profile,
    catenoid,
    find_threshold,
    functional_value,
    optimize,
    relaxed_area,
    sequence,
    solve,
    symmetrize_file,
    vortex_graph_area,
)

__version__ = "0.1.0"

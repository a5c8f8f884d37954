"""Linear chains of curves and embeddings of path and cycle RAAGs into mapping class groups."""

from .chains import chain_bounds, chained_recursive, ell_recursive, verify_grid
from .surfaces import (
    CutKind,
    CutOutcome,
    Surface,
    ell_closed_form,
    enumerate_arc_cuts,
    enumerate_curve_cuts,
    euler,
    f_closed_form,
    xi,
)

__version__ = "0.1.0"

__all__ = [
    "CutKind",
    "CutOutcome",
    "Surface",
    "chain_bounds",
    "chained_recursive",
    "ell_closed_form",
    "ell_recursive",
    "enumerate_arc_cuts",
    "enumerate_curve_cuts",
    "euler",
    "f_closed_form",
    "verify_grid",
    "xi",
]

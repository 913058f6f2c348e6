"""Exact computations around the Novelli-Pak-Stoyanovskii hook-length bijection."""

from .arith import binomial, det_rational, factorial, format_rational, harmonic, parse_rational
from .engine import ForwardSlide, SortTrace, check_invariance, maximal_forward_slide, nps_decode, nps_encode, nps_sort
from .shapes import (
    Cell,
    CellOrder,
    Partition,
    ShapeError,
    cell_order,
    cell_order_from_tableau,
    cohook,
    neighbors,
    parse_cell,
    parse_partition,
    partitions_of,
    partitions_up_to,
)
from .tableaux import (
    FCensus,
    FillingError,
    GridError,
    HookTableau,
    StandardYoungTableau,
    Tabloid,
    enumerate_hook_tableaux,
    enumerate_syt,
    enumerate_tabloids,
    f_census,
    hook_length_formula,
    skew_syt_count,
)

__version__ = "0.1.0"

__all__ = [
    "Cell",
    "CellOrder",
    "FCensus",
    "FillingError",
    "ForwardSlide",
    "GridError",
    "HookTableau",
    "Partition",
    "ShapeError",
    "SortTrace",
    "StandardYoungTableau",
    "Tabloid",
    "binomial",
    "cell_order",
    "cell_order_from_tableau",
    "check_invariance",
    "cohook",
    "det_rational",
    "enumerate_hook_tableaux",
    "enumerate_syt",
    "enumerate_tabloids",
    "f_census",
    "factorial",
    "format_rational",
    "harmonic",
    "hook_length_formula",
    "maximal_forward_slide",
    "neighbors",
    "nps_decode",
    "nps_encode",
    "nps_sort",
    "parse_cell",
    "parse_partition",
    "parse_rational",
    "partitions_of",
    "partitions_up_to",
    "skew_syt_count",
]

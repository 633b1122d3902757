"""Fiber-ring invariants for ladders of maximal minors, with brute-force cross-checks."""

from .chains import (
    MaximalChain,
    count_maximal_chains,
    enumerate_maximal_chains,
    lq_witnesses,
    sequence_index,
    sigma_compare,
    verify_linear_quotients,
)
from .errors import CapExceeded, LadderError, NotAChain, ShapeError
from .invariants import (
    InvariantReport,
    construct_A,
    generic_shape,
    invariant_report,
    si_closed_form,
    sparse_2xm_shape,
)
from .ladder import LadderShape, normalize_shape, validate_shape
from .tableaux import (
    SkewShape,
    count_skew_syt,
    count_skew_syt_naruse,
    enumerate_excited_diagrams,
    multiplicity,
    skew_shape_from_ladder,
)

__version__ = "0.1.0"

"""Exact tools for squaring arrangements of axis-aligned rectangles and boxes.

The core question: given rectangles in general position, can each be
replaced by a square so that the left-to-right and bottom-to-top order of
all sides stays the same?  :func:`decide` answers it exactly with a linear
feasibility problem, :func:`certify` looks for a short combinatorial proof
of impossibility, and :mod:`squarability.gallery` builds the standard
counterexamples.
"""

from .certificates import (
    CycleCertificate,
    LemmaViolation,
    NeighborhoodInstance,
    SizeOrderGraph,
    build_size_order,
    certify,
    check_neighbor_size_lemma,
    find_cycle,
    ramsey_lookup,
)
from .docio import parse, serialize
from .errors import *  # noqa: F401,F403
from .fm import fm_oracle
from .gallery import gallery, gallery_names
from .geometry import (
    Arrangement,
    Box,
    Interval,
    Kind,
    PairDescriptor,
    Relation,
    classify_pair,
    interval_relation,
    intersects,
    project,
    rect,
    validate_general_position,
)
from .lp import (
    Feasible,
    Infeasible,
    LinearSystem,
    build_lp,
    decide,
    extract_gaps,
    normalize_blowup,
    reconstruct_squares,
    solve_feasibility,
)
from .sequences import AxisSequence, axis_sequence, sequences_equal
from .svg import SvgOptions, render_svg
from .validators import (
    VARIANTS,
    check_admissible_input,
    check_combinatorial_equivalence,
    check_is_squares,
    check_keep_intersection_graph,
    check_keep_intersections_no_piercing,
    check_order_preserved,
)

__version__ = "0.1.0"

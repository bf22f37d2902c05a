"""Exact-arithmetic geometry of GC interpolation sets.

The package decides poisedness, computes fundamental polynomials, factors
them into node-pair lines (GC certification), orders used lines into
distribution sequences, verifies the maximal-line (Gasca-Maeztu) property
on generated and user-supplied sets, and checks the dependence of
line-product intersections.  Everything runs over arbitrary-precision
rationals; there is no floating point and no tolerance anywhere.
"""

from .analysis import (
    GMReport,
    IncidenceProfile,
    SearchSummary,
    TrialFailure,
    cayley_bacharach_check,
    classify_2m_nodes,
    gm_report_from_certificate,
    incidence_profile,
    maximal_lines,
    search_counterexample,
    verify_gm,
)
from .certification import (
    GCCertificate,
    NodeCertificate,
    UsedLineIndex,
    candidate_lines,
    certify_gc,
    factor_into_lines,
    line_incidence,
    used_line_index,
    used_lines_of,
)
from .errors import (
    BadRational,
    CenterInTarget,
    CountsUnequal,
    DegenerateIntersection,
    DuplicateLine,
    DuplicateNode,
    GCNLabError,
    IdenticalLines,
    IdenticalPoints,
    LengthMismatch,
    LineNotUsed,
    MultiplicityPresent,
    NotDivisible,
    NotGC,
    NotPoised,
    NotProductOfCandidateLines,
    ParallelLines,
    ParseError,
    RetryLimitExceeded,
    TooManyCollinear,
    ZeroPolynomial,
)
from .generators import (
    DEFAULT_KINDS,
    GeneratorSpec,
    gen_chung_yao,
    gen_principal,
    gen_projective_image,
    generate,
    generate_with_certificate,
)
from .geometry import (
    Line,
    Point,
    Scalar,
    general_position,
    intersect,
    is_incident,
    line_through,
    to_scalar,
)
from .interpolation import (
    FundamentalSolution,
    NodeSet,
    all_fundamentals,
    annihilator,
    fundamental,
    interpolate,
    is_essentially_dependent,
    is_independent,
    is_poised,
    vandermonde,
)
from .plotting import plot_svg
from .polynomials import (
    MAX_DEGREE,
    Poly,
    dim_pi,
    divide_by_line,
    evaluate,
    format_poly,
    monomials,
    multiply_line,
)
from .sequences import (
    MDSequence,
    MLineSequence,
    enumerate_mdseqs,
    fixed_first_mdseq,
    greedy_mdseq,
    greedy_sequence_for_lines,
    primary_zero_divisibility,
    verify_swap_property,
)

__version__ = "0.1.0"

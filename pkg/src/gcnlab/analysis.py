"""Maximal lines, Gasca-Maeztu verification and dependence checks.

A maximal line of a degree-n set passes through exactly n+1 nodes, the
most a poised set permits: a polynomial of degree n vanishing at n+2
points of a line would be divisible by it and force a dependence.  The
Gasca-Maeztu property asks every GC set to contain a maximal line; this
module verifies it instance by instance, classifies nodes sitting on two
maximal lines, computes incidence-count profiles with their exact sum
identity, checks the dependence of line-product intersections, and drives
the randomized falsification harness.

GM verification deliberately requires a prior GC certificate rather than
mere poisedness: the property is stated for GC sets, and reporting a
violation on a merely poised set would be a category error.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .certification import GCCertificate, certify_gc, line_incidence, used_line_index
from .errors import (
    CenterInTarget,
    DegenerateIntersection,
    GCNLabError,
    IdenticalLines,
    NotGC,
    NotPoised,
    ParallelLines,
    TooManyCollinear,
)
from .geometry import Line, intersect, line_through
from .interpolation import NodeSet, is_essentially_dependent


@dataclass(frozen=True)
class GMReport:
    """Outcome of a Gasca-Maeztu check on one certified set.

    ``satisfied`` is true exactly when ``maximal_lines`` is nonempty.  When
    a certified set has no maximal line (which would contradict the proved
    cases, degree <= 5), ``counterexample`` carries the full certificate so
    the configuration can be reproduced and refuted independently.
    """

    degree: int
    satisfied: bool
    maximal_lines: tuple[tuple[Line, tuple[int, ...]], ...]
    counterexample: GCCertificate | None = None


@dataclass(frozen=True)
class IncidenceProfile:
    """Counts of lines through a center node by their target-node incidence.

    ``counts[k]`` is the number of lines through the center meeting the
    target in exactly k points.  Since every target point lies on exactly
    one line through the center, ``sum(k * counts[k]) == len(target)``
    holds exactly; the constructor path asserts it.
    """

    center: int
    target: tuple[int, ...]
    counts: Mapping[int, int]


def _maximal_incidence(xs: NodeSet) -> list[tuple[Line, tuple[int, ...]]]:
    if len(xs) < 2:
        return []
    cap = xs.degree + 1
    out = []
    for line, ids in sorted(line_incidence(xs).items()):
        if len(ids) > cap:
            raise TooManyCollinear(
                f"{line} passes through {len(ids)} nodes; at most {cap} of a poised "
                f"degree-{xs.degree} set can be collinear",
                line=line,
                count=len(ids),
            )
        if len(ids) == cap:
            out.append((line, ids))
    return out


def maximal_lines(xs: NodeSet) -> set[Line]:
    """All lines through exactly degree+1 nodes.

    Raises TooManyCollinear when some line exceeds degree+1 incidences: for
    poised input that indicates an internal bug, for raw input it is a
    validity report.
    """
    return {line for line, _ in _maximal_incidence(xs)}


def gm_report_from_certificate(cert: GCCertificate) -> GMReport:
    """Build the GM report for an already-certified set."""
    maximal = tuple(_maximal_incidence(cert.nodeset))
    satisfied = bool(maximal)
    return GMReport(
        degree=cert.degree,
        satisfied=satisfied,
        maximal_lines=maximal,
        counterexample=None if satisfied else cert,
    )


def verify_gm(xs: NodeSet) -> GMReport:
    """Certify the set, then report whether it contains a maximal line.

    Raises NotPoised or NotGC (from certification) when the precondition
    fails; the GM property is only meaningful for GC sets.
    """
    if xs.degree < 1:
        raise ValueError("the maximal-line property needs degree >= 1")
    return gm_report_from_certificate(certify_gc(xs))


def classify_2m_nodes(xs: NodeSet) -> set[int]:
    """Indices of nodes lying on at least two maximal lines."""
    tally: dict[int, int] = {}
    for _, ids in _maximal_incidence(xs):
        for j in ids:
            tally[j] = tally.get(j, 0) + 1
    return {j for j, c in tally.items() if c >= 2}


def incidence_profile(
    xs: NodeSet, center: int, target: Sequence[int] | None = None
) -> IncidenceProfile:
    """Group a target set by the lines joining it to a center node.

    The exact identity ``sum(k * counts[k]) == len(target)`` is asserted
    before returning (each target node lies on exactly one joining line).
    """
    if not 0 <= center < len(xs):
        raise IndexError(f"center index {center} out of range")
    if target is None:
        ids = tuple(j for j in range(len(xs)) if j != center)
    else:
        ids = tuple(target)
        for j in ids:
            if not 0 <= j < len(xs):
                raise IndexError(f"target index {j} out of range")
    if center in ids:
        raise CenterInTarget(f"center {center} must not belong to the target")
    per_line: dict[Line, int] = {}
    for j in ids:
        l = line_through(xs.nodes[center], xs.nodes[j])
        per_line[l] = per_line.get(l, 0) + 1
    counts: dict[int, int] = {}
    for k in per_line.values():
        counts[k] = counts.get(k, 0) + 1
    if sum(k * c for k, c in counts.items()) != len(ids):
        raise GCNLabError("internal: incidence sum identity violated")
    return IncidenceProfile(center=center, target=ids, counts=counts)


def cayley_bacharach_check(lines_m: Sequence[Line], lines_n: Sequence[Line]) -> bool:
    """Dependence of the intersection points of two line products.

    The product curves of the two groups (degrees m and n) must meet at
    exactly m*n distinct points: every cross pair non-parallel and all
    cross intersections distinct, otherwise DegenerateIntersection is
    raised.  Returns True iff those points are essentially
    (m+n-3)-dependent, i.e. no point has a fundamental polynomial at that
    degree (each inhomogeneous system is infeasible by rank).
    """
    m, n = len(lines_m), len(lines_n)
    if m < 1 or n < 1 or m + n < 3:
        raise ValueError("need line groups of degrees m, n with m + n >= 3")
    points = []
    for la in lines_m:
        for lb in lines_n:
            try:
                points.append(intersect(la, lb))
            except (ParallelLines, IdenticalLines) as exc:
                raise DegenerateIntersection(f"{la} and {lb} do not meet transversally") from exc
    distinct = sorted(set(points))
    if len(distinct) != m * n:
        raise DegenerateIntersection(
            f"only {len(distinct)} distinct intersection points, expected {m * n}"
        )
    xs = NodeSet(degree=m + n - 3, nodes=tuple(distinct))
    return is_essentially_dependent(xs, m + n - 3)


@dataclass(frozen=True)
class TrialFailure:
    """One failed trial of the falsification harness."""

    trial: int
    kind: str
    seed: int
    reason: str
    certificate: GCCertificate | None


@dataclass(frozen=True)
class SearchSummary:
    """Aggregate outcome of a falsification run.

    ``use_count_max`` maps the node count of a line class to the largest
    number of nodes observed using one line of that class; the histogram is
    reported as data, no bound is asserted.
    """

    degree: int
    trials: int
    seed: int
    kinds: tuple[str, ...]
    coordinate_bound: int
    certified: int
    gm_satisfied: int
    failures: tuple[TrialFailure, ...]
    use_count_max: Mapping[int, int]

    @property
    def all_satisfied(self) -> bool:
        return self.certified == self.trials and self.gm_satisfied == self.trials


def search_counterexample(
    degree: int,
    trials: int,
    seed: int,
    kinds: Sequence[str] | None = None,
    coordinate_bound: int = 8,
) -> SearchSummary:
    """Generate seeded GC sets and look for one without a maximal line.

    Trials round-robin over the generator kinds; trial ``i`` runs with the
    derived seed ``substream_seed(seed, i)``, so results are reproducible
    and independent of execution order.  For degree <= 5 every certified
    set must turn out GM-satisfied; a failure dump would be a refutation
    of a proved statement and deserves independent scrutiny.
    """
    from .generators import DEFAULT_KINDS, GeneratorSpec, generate_with_certificate
    from .rng import substream_seed

    kind_cycle = tuple(kinds) if kinds is not None else DEFAULT_KINDS
    certified = 0
    satisfied = 0
    failures: list[TrialFailure] = []
    use_count_max: dict[int, int] = {}
    for i in range(trials):
        kind = kind_cycle[i % len(kind_cycle)]
        trial_seed = substream_seed(seed, i)
        spec = GeneratorSpec(
            kind=kind, degree=degree, seed=trial_seed, coordinate_bound=coordinate_bound
        )
        try:
            xs, cert = generate_with_certificate(spec)
        except (NotPoised, NotGC) as exc:
            failures.append(
                TrialFailure(trial=i, kind=kind, seed=trial_seed, reason=str(exc), certificate=None)
            )
            continue
        certified += 1
        report = gm_report_from_certificate(cert)
        if report.satisfied:
            satisfied += 1
        else:
            failures.append(
                TrialFailure(
                    trial=i, kind=kind, seed=trial_seed, reason="no maximal line", certificate=cert
                )
            )
        incidence = line_incidence(xs)
        for line, users in used_line_index(cert).users.items():
            node_count = len(incidence[line])
            uses = len(users)
            if uses > use_count_max.get(node_count, 0):
                use_count_max[node_count] = uses
    return SearchSummary(
        degree=degree,
        trials=trials,
        seed=seed,
        kinds=kind_cycle,
        coordinate_bound=coordinate_bound,
        certified=certified,
        gm_satisfied=satisfied,
        failures=tuple(failures),
        use_count_max=use_count_max,
    )

"""Greedy orderings of a node's used lines and their count vectors.

Given a certified node, its used lines are ordered greedily: each step
picks the line covering the most not-yet-covered nodes of the set, ties
broken by canonical line order so the result is deterministic.  The count
vector of newly covered nodes per step is the node's distribution sequence;
a node of the set is *primary* for the first line in the order containing
it and *secondary* for every later one.

Determinism never masks non-uniqueness: :func:`enumerate_mdseqs` explores
every maximal choice at every step and returns the full set of achievable
count vectors (expected, and tested, to be a singleton).

Intersection points of used lines that are not nodes of the set are ignored
by all counting here; only nodes count.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Mapping, Sequence

from .certification import GCCertificate
from .errors import CountsUnequal, LineNotUsed, MultiplicityPresent, ParallelLines
from .geometry import Line, Point, intersect, is_incident
from .interpolation import NodeSet
from .polynomials import Poly, divide_by_line

TieBreak = Callable[[Line], object]

_CANONICAL: TieBreak = lambda line: line.coefficients


@dataclass(frozen=True)
class MDSequence:
    """A distribution sequence: counts of newly covered nodes per line."""

    counts: tuple[int, ...]


@dataclass(frozen=True)
class MLineSequence:
    """An ordered used-line sequence with its counts and primary assignment.

    ``primary`` maps the index of every covered node to the position (into
    ``lines``) of the first line containing it.  ``used`` is the node's full
    set of used lines, kept so the greedy property can be re-verified
    against the alternatives that were available at each step.
    """

    node_index: int
    nodeset: NodeSet
    used: tuple[Line, ...]
    lines: tuple[Line, ...]
    counts: tuple[int, ...]
    primary: Mapping[int, int]
    fixed_first: Line | None = None

    def distribution(self) -> MDSequence:
        return MDSequence(self.counts)


def _line_node_sets(xs: NodeSet, lines: Sequence[Line]) -> dict[Line, frozenset[int]]:
    return {
        l: frozenset(j for j, p in enumerate(xs.nodes) if is_incident(p, l)) for l in lines
    }


def greedy_sequence_for_lines(
    xs: NodeSet,
    node_index: int,
    used: Sequence[Line],
    fixed_first: Line | None = None,
    tiebreak: TieBreak | None = None,
) -> MLineSequence:
    """Greedy ordering of an arbitrary used-line set over a node set.

    This is the engine behind :func:`greedy_mdseq` and
    :func:`fixed_first_mdseq`; it accepts any collection of distinct lines,
    which lets synthetic incidence structures be analyzed directly.
    """
    used = tuple(sorted(set(used)))
    key = tiebreak or _CANONICAL
    incidence = _line_node_sets(xs, used)
    remaining = set(range(len(xs)))
    pool = set(used)
    order: list[Line] = []
    counts: list[int] = []
    primary: dict[int, int] = {}
    forced = fixed_first
    while pool:
        if forced is not None:
            chosen = forced
            forced = None
        else:
            best = max(len(incidence[l] & remaining) for l in pool)
            chosen = min((l for l in pool if len(incidence[l] & remaining) == best), key=key)
        new = incidence[chosen] & remaining
        position = len(order)
        for j in new:
            primary[j] = position
        counts.append(len(new))
        remaining -= new
        pool.remove(chosen)
        order.append(chosen)
    return MLineSequence(
        node_index=node_index,
        nodeset=xs,
        used=used,
        lines=tuple(order),
        counts=tuple(counts),
        primary=primary,
        fixed_first=fixed_first,
    )


def _distinct_used(cert: GCCertificate, k: int) -> tuple[Line, ...]:
    entry = cert.entries[k]
    distinct = tuple(sorted(set(entry.lines)))
    if len(distinct) != len(entry.lines):
        raise MultiplicityPresent(
            f"node {k} repeats a factor line; sequence analysis needs distinct lines"
        )
    return distinct


def greedy_mdseq(cert: GCCertificate, k: int, tiebreak: TieBreak | None = None) -> MLineSequence:
    """The deterministic greedy line sequence of a certified node."""
    return greedy_sequence_for_lines(cert.nodeset, k, _distinct_used(cert, k), tiebreak=tiebreak)


def fixed_first_mdseq(cert: GCCertificate, k: int, line: Line) -> MLineSequence:
    """Greedy sequence with a designated line forced into first position."""
    used = _distinct_used(cert, k)
    if line not in used:
        raise LineNotUsed(f"{line} is not used by node {k}")
    return greedy_sequence_for_lines(cert.nodeset, k, used, fixed_first=line)


def enumerate_mdseqs(cert: GCCertificate, k: int) -> set[MDSequence]:
    """All count vectors reachable by any greedy-consistent ordering.

    Every maximal choice at every step is explored with an explicit work
    stack; the result deduplicates count vectors, so a singleton means the
    distribution sequence is independent of tie-breaking.
    """
    used = _distinct_used(cert, k)
    xs = cert.nodeset
    incidence = _line_node_sets(xs, used)
    results: set[MDSequence] = set()
    stack: list[tuple[frozenset[Line], frozenset[int], tuple[int, ...]]] = [
        (frozenset(used), frozenset(range(len(xs))), ())
    ]
    while stack:
        pool, remaining, counts = stack.pop()
        if not pool:
            results.add(MDSequence(counts))
            continue
        best = max(len(incidence[l] & remaining) for l in pool)
        for l in pool:
            covered = incidence[l] & remaining
            if len(covered) == best:
                stack.append((pool - {l}, remaining - covered, counts + (best,)))
    return results


def _is_greedy_ordering(
    xs: NodeSet, used: Sequence[Line], order: Sequence[Line], exempt_first: bool
) -> bool:
    incidence = _line_node_sets(xs, used)
    remaining = set(range(len(xs)))
    pool = set(used)
    for s, line in enumerate(order):
        if line not in pool:
            return False
        covered = len(incidence[line] & remaining)
        if not (exempt_first and s == 0):
            best = max(len(incidence[l] & remaining) for l in pool)
            if covered < best:
                return False
        remaining -= incidence[line]
        pool.remove(line)
    return not pool


def verify_swap_property(seq: MLineSequence, i: int) -> bool:
    """Check the swap law at two equal-count positions (0-based ``i``, ``i+1``).

    True iff (a) exchanging the two lines still yields a valid greedy
    ordering, and (b) when the two lines intersect at a node of the set,
    that node is secondary for both, i.e. its primary line appears strictly
    before position ``i``.  Raises CountsUnequal when the precondition
    ``counts[i] == counts[i+1]`` fails.
    """
    if not 0 <= i < len(seq.lines) - 1:
        raise IndexError(f"position {i} has no successor in a length-{len(seq.lines)} sequence")
    if seq.counts[i] != seq.counts[i + 1]:
        raise CountsUnequal(
            f"counts {seq.counts[i]} and {seq.counts[i + 1]} at positions {i}, {i + 1} differ"
        )
    swapped = list(seq.lines)
    swapped[i], swapped[i + 1] = swapped[i + 1], swapped[i]
    exempt = seq.fixed_first is not None
    if not _is_greedy_ordering(seq.nodeset, seq.used, swapped, exempt_first=exempt):
        return False
    try:
        crossing = intersect(seq.lines[i], seq.lines[i + 1])
    except ParallelLines:
        return True
    idx = seq.nodeset.index(crossing)
    if idx is None:
        return True
    return idx in seq.primary and seq.primary[idx] < i


def primary_zero_divisibility(
    p: Poly, suffix: Sequence[tuple[Line, Sequence[Point]]]
) -> Poly:
    """Divide out a suffix of lines justified by their primary zero counts.

    ``suffix`` lists ``(line, primary_points)`` pairs whose point counts
    must descend one by one from ``p.degree_bound + 1``; each batch of
    points must be distinct, lie on its line, avoid all earlier lines in
    the list, and be zeros of ``p``.  Under those checks every division is
    forced (a polynomial of degree d vanishing at d+1 points of a line has
    the line as a factor); a NotDivisible escape therefore means the stated
    preconditions did not actually hold.
    """
    m = p.degree_bound + 1
    seen_lines: list[Line] = []
    for t, (line, points) in enumerate(suffix):
        pts = list(points)
        if len(pts) != m - t:
            raise ValueError(
                f"line at position {t} lists {len(pts)} primary zeros, expected {m - t}"
            )
        if len(set(pts)) != len(pts):
            raise ValueError(f"line at position {t} repeats a primary zero")
        for pt in pts:
            if not is_incident(pt, line):
                raise ValueError(f"{pt} is not on {line}")
            if any(is_incident(pt, earlier) for earlier in seen_lines):
                raise ValueError(f"{pt} lies on an earlier line of the suffix")
            if p.at(pt) != 0:
                raise ValueError(f"polynomial does not vanish at stated primary zero {pt}")
        seen_lines.append(line)
    result = p
    for line, _ in suffix:
        result = divide_by_line(result, line)
    return result

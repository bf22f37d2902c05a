"""GC certification: factor fundamental polynomials into node-pair lines.

Any line dividing a fundamental polynomial must pass through at least two
nodes of the set (with a nonvanishing cofactor there), so the factor search
can be restricted to the finite family of lines spanned by node pairs.
That turns an algebraic factorization problem into a search over at most
C(s, 2) canonical lines.

Factorization itself is greedy exact division.  Since a product of linear
factors over a field factors uniquely up to scaling, any successful
division makes progress toward the unique factorization and the order of
attempts can never cause a false negative.  The certifier prefers, at each
step, a candidate covering at least ``deg+1`` still-uncovered zero nodes
(such a line is guaranteed to divide, because a polynomial vanishing at
deg+1 points of a line has that line as a factor); when no such line
exists it falls back to trial division over all candidates.

Certificates are rechecked by direct evaluation before being returned:
``constant * product(lines)`` must reproduce the Kronecker deltas at every
node, and every factor line must carry at least two witness nodes where
the complementary cofactor is nonzero.

Certification of distinct nodes is independent: the node set, the shared
fundamental solutions and the candidate index are immutable, so the
per-node work may be fanned out concurrently; entries are assembled in
node order either way.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import prod
from typing import Mapping, Sequence

from .errors import (
    GCNLabError,
    NotDivisible,
    NotGC,
    NotPoised,
    NotProductOfCandidateLines,
    ZeroPolynomial,
)
from .geometry import Line, line_through
from .interpolation import NodeSet, all_fundamentals, is_poised
from .polynomials import Poly, divide_by_line


@dataclass(frozen=True)
class NodeCertificate:
    """Factorization of one node's fundamental polynomial.

    ``constant * product(lines)`` equals the fundamental polynomial exactly;
    ``witnesses`` maps each distinct factor line to the indices of nodes on
    it where the complementary cofactor is nonzero (always at least two).
    """

    node_index: int
    constant: Fraction
    lines: tuple[Line, ...]
    witnesses: Mapping[Line, tuple[int, ...]]


@dataclass(frozen=True)
class GCCertificate:
    """Per-node line factorizations for a whole poised set."""

    nodeset: NodeSet
    entries: tuple[NodeCertificate, ...]

    def entry(self, k: int) -> NodeCertificate:
        return self.entries[k]

    @property
    def degree(self) -> int:
        return self.nodeset.degree


@dataclass(frozen=True)
class UsedLineIndex:
    """For each line, the indices of the nodes whose factorization uses it."""

    users: Mapping[Line, tuple[int, ...]]

    @classmethod
    def from_certificate(cls, cert: GCCertificate) -> "UsedLineIndex":
        acc: dict[Line, list[int]] = {}
        for entry in cert.entries:
            for line in set(entry.lines):
                acc.setdefault(line, []).append(entry.node_index)
        return cls({line: tuple(sorted(ks)) for line, ks in sorted(acc.items())})

    def users_of(self, line: Line) -> tuple[int, ...]:
        return self.users.get(line, ())


def line_incidence(xs: NodeSet) -> dict[Line, tuple[int, ...]]:
    """Every line through at least two nodes, with its incident node indices.

    Built by pair enumeration: each node on a line pairs with every other
    node on it, so the union of pair endpoints per canonical line is the
    full incidence set with no extra membership tests.
    """
    if len(xs) < 2:
        raise ValueError("need at least two nodes to span lines")
    acc: dict[Line, set[int]] = {}
    nodes = xs.nodes
    for i in range(len(nodes)):
        for j in range(i + 1, len(nodes)):
            l = line_through(nodes[i], nodes[j])
            acc.setdefault(l, set()).update((i, j))
    return {l: tuple(sorted(ids)) for l, ids in acc.items()}


def candidate_lines(xs: NodeSet) -> set[Line]:
    """All canonical lines through at least two nodes, deduplicated."""
    return set(line_incidence(xs))


def factor_into_lines(p: Poly, candidates: set[Line]) -> tuple[tuple[Line, ...], Fraction]:
    """Factor ``p`` as ``constant * product(candidate lines)`` or fail.

    Candidates are tried in canonical order, each divided out to its full
    multiplicity.  Success means the residual is a nonzero constant after
    exactly ``p.degree()`` peels; a residual of degree >= 1 raises
    NotProductOfCandidateLines.
    """
    if p.is_zero():
        raise ZeroPolynomial("the zero polynomial has no line factorization")
    residual = p
    factors: list[Line] = []
    for line in sorted(candidates):
        while residual.degree() >= 1:
            try:
                residual = divide_by_line(residual, line)
            except NotDivisible:
                break
            factors.append(line)
        if residual.degree() < 1:
            break
    if residual.degree() >= 1:
        raise NotProductOfCandidateLines(
            f"residual of degree {residual.degree()} is not a product of candidate lines",
            residual_degree=residual.degree(),
        )
    return tuple(sorted(factors)), residual.coeffs[0]


def _factor_zero_cover(
    p: Poly,
    cands: Sequence[tuple[Line, frozenset[int]]],
    zero_nodes: set[int],
) -> tuple[tuple[Line, ...], Fraction]:
    """Greedy factorization of a polynomial with known zero nodes.

    ``zero_nodes`` must index nodes where ``p`` vanishes; the invariant that
    every still-uncovered zero node remains a zero of the residual justifies
    the guaranteed-division fast path.
    """
    residual = p
    uncovered = set(zero_nodes)
    factors: list[Line] = []
    while residual.degree() >= 1:
        d = residual.degree()
        best_line, best_idx, best_count = None, None, -1
        for line, idxs in cands:
            c = len(idxs & uncovered)
            if c > best_count:
                best_line, best_idx, best_count = line, idxs, c
        if best_line is not None and best_count >= d + 1:
            residual = divide_by_line(residual, best_line)
            factors.append(best_line)
            uncovered -= best_idx
            continue
        for line, idxs in cands:
            try:
                residual = divide_by_line(residual, line)
            except NotDivisible:
                continue
            factors.append(line)
            uncovered -= idxs
            break
        else:
            raise NotProductOfCandidateLines(
                f"residual of degree {d} is not a product of candidate lines",
                residual_degree=d,
            )
    return tuple(sorted(factors)), residual.coeffs[0]


def certify_gc(xs: NodeSet) -> GCCertificate:
    """Certify that every fundamental polynomial is a product of lines.

    Raises NotPoised when the set is not poised and NotGC (carrying the
    first offending node index) when some fundamental polynomial does not
    factor into exactly ``degree`` candidate lines.  The returned
    certificate has been rechecked by direct evaluation.
    """
    if not is_poised(xs):
        raise NotPoised(f"{len(xs)} nodes at degree {xs.degree} are not poised")
    n = xs.degree
    funds = all_fundamentals(xs)
    incidence = line_incidence(xs) if len(xs) >= 2 else {}
    sorted_cands = [(l, frozenset(ids)) for l, ids in sorted(incidence.items())]
    entries = []
    for k, fund in enumerate(funds):
        cands_k = [(l, ids) for l, ids in sorted_cands if k not in ids]
        zeros = set(range(len(xs))) - {k}
        try:
            factors, const = _factor_zero_cover(fund.poly, cands_k, zeros)
        except NotProductOfCandidateLines as exc:
            raise NotGC(
                f"fundamental polynomial of node {k} is not a product of node-pair lines",
                node_index=k,
            ) from exc
        if len(factors) != n:
            raise NotGC(
                f"fundamental polynomial of node {k} splits into {len(factors)} lines, not {n}",
                node_index=k,
            )
        witnesses: dict[Line, tuple[int, ...]] = {}
        for line in sorted(set(factors)):
            others = list(factors)
            others.remove(line)
            found = []
            for j in incidence[line]:
                node = xs.nodes[j]
                if const * prod((o.at(node) for o in others), start=Fraction(1)) != 0:
                    found.append(j)
            if len(found) < 2:
                raise GCNLabError(
                    f"internal: factor {line} of node {k} has {len(found)} nonvanishing-cofactor "
                    "witnesses; a used line of a poised set must have at least two"
                )
            witnesses[line] = tuple(found)
        for j, node in enumerate(xs.nodes):
            value = const * prod((l.at(node) for l in factors), start=Fraction(1))
            if value != (1 if j == k else 0):
                raise GCNLabError(
                    f"internal: certified product for node {k} evaluates to {value} at node {j}"
                )
        entries.append(NodeCertificate(k, const, factors, witnesses))
    return GCCertificate(xs, tuple(entries))


def used_lines_of(cert: GCCertificate, k: int) -> set[Line]:
    """The distinct lines in node ``k``'s factor multiset."""
    return set(cert.entries[k].lines)


def used_line_index(cert: GCCertificate) -> UsedLineIndex:
    return UsedLineIndex.from_certificate(cert)

"""JSON interchange for node sets, certificates, reports and summaries.

Rationals travel as the exact strings ``"p"`` or ``"p/q"``; decimal floats
never appear anywhere in a schema, so a load/save round trip reproduces
every value bit for bit.  Dumps are canonical (sorted keys, two-space
indent, a single trailing newline, lists in node/canonical-line order),
which is what makes the byte-identical determinism guarantee testable.

Schemas
-------
node set:     {"degree": n, "nodes": [["p/q", "p/q"], ...], "labels": [...]?}
certificate:  {"degree": n, "nodes": [...], "entries": [
                  {"node": k, "constant": "p/q", "lines": [[a, b, c], ...],
                   "witnesses": {"a,b,c": [j, ...]}}, ...]}
report:       {"degree": n, "satisfied": bool,
               "maximal_lines": [{"line": [a, b, c], "nodes": [j, ...]}, ...],
               "counterexample": certificate | null}
summary:      {"degree": n, "trials": T, "seed": s, "kinds": [...],
               "coordinate_bound": B, "certified": c, "gm_satisfied": g,
               "failures": [{"trial": i, "kind": ..., "seed": ...,
                             "reason": ..., "certificate": certificate | null}],
               "use_count_max": {"nodes-on-line": max-uses}}
polynomial:   {"degree": n, "coefficients": ["p/q", ...]}   (graded-lex order)
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Any

from .analysis import GMReport, SearchSummary, TrialFailure
from .certification import GCCertificate, NodeCertificate
from .errors import BadRational, ParseError
from .geometry import Line, Point
from .interpolation import NodeSet
from .polynomials import Poly, dim_pi

_RATIONAL_RE = re.compile(r"^-?\d+(/\d+)?$")


def format_rational(value: Fraction) -> str:
    return str(Fraction(value))


def parse_rational(text: Any) -> Fraction:
    """Parse an exact ``"p"`` or ``"p/q"`` string; anything else is BadRational."""
    if not isinstance(text, str) or not _RATIONAL_RE.match(text):
        raise BadRational(f"not an exact rational string: {text!r}")
    try:
        return Fraction(text)
    except ZeroDivisionError:
        raise BadRational(f"zero denominator in {text!r}") from None


def _dumps(doc: Any) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def _loads(text: str, what: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed {what} document at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None


def _expect(condition: bool, message: str) -> None:
    if not condition:
        raise ParseError(message)


# --- node sets ---------------------------------------------------------------

def nodeset_to_dict(xs: NodeSet) -> dict:
    doc: dict[str, Any] = {
        "degree": xs.degree,
        "nodes": [[format_rational(p.x), format_rational(p.y)] for p in xs.nodes],
    }
    if xs.labels is not None:
        doc["labels"] = list(xs.labels)
    return doc


def nodeset_from_dict(doc: Any) -> NodeSet:
    _expect(isinstance(doc, dict), "node set document must be an object")
    _expect(isinstance(doc.get("degree"), int) and not isinstance(doc.get("degree"), bool),
            "field 'degree' must be an integer")
    raw_nodes = doc.get("nodes")
    _expect(isinstance(raw_nodes, list), "field 'nodes' must be a list")
    points = []
    for row, entry in enumerate(raw_nodes):
        _expect(isinstance(entry, list) and len(entry) == 2,
                f"node row {row} must be a [x, y] pair")
        points.append(Point(parse_rational(entry[0]), parse_rational(entry[1])))
    labels = doc.get("labels")
    if labels is not None:
        _expect(isinstance(labels, list) and all(isinstance(s, str) for s in labels),
                "field 'labels' must be a list of strings")
        labels = tuple(labels)
    return NodeSet(degree=doc["degree"], nodes=tuple(points), labels=labels)


def save_nodeset(xs: NodeSet) -> str:
    return _dumps(nodeset_to_dict(xs))


def load_nodeset(text: str) -> NodeSet:
    return nodeset_from_dict(_loads(text, "node set"))


# --- polynomials --------------------------------------------------------------

def poly_to_dict(p: Poly) -> dict:
    return {
        "degree": p.degree_bound,
        "coefficients": [format_rational(c) for c in p.coeffs],
    }


def poly_from_dict(doc: Any) -> Poly:
    _expect(isinstance(doc, dict), "polynomial document must be an object")
    degree = doc.get("degree")
    _expect(isinstance(degree, int) and not isinstance(degree, bool) and degree >= 0,
            "field 'degree' must be a nonnegative integer")
    coeffs = doc.get("coefficients")
    _expect(isinstance(coeffs, list) and len(coeffs) == dim_pi(degree),
            f"field 'coefficients' must list {dim_pi(degree)} rationals")
    return Poly(degree, tuple(parse_rational(c) for c in coeffs))


# --- certificates --------------------------------------------------------------

def _line_key(line: Line) -> str:
    return f"{line.a},{line.b},{line.c}"


def _line_from_triple(triple: Any, context: str) -> Line:
    _expect(
        isinstance(triple, list) and len(triple) == 3
        and all(isinstance(v, int) and not isinstance(v, bool) for v in triple),
        f"{context}: a line must be an [a, b, c] integer triple",
    )
    return Line(triple[0], triple[1], triple[2])


def certificate_to_dict(cert: GCCertificate) -> dict:
    entries = []
    for e in cert.entries:
        entries.append(
            {
                "node": e.node_index,
                "constant": format_rational(e.constant),
                "lines": [list(l.coefficients) for l in e.lines],
                "witnesses": {_line_key(l): list(w) for l, w in sorted(e.witnesses.items())},
            }
        )
    doc = nodeset_to_dict(cert.nodeset)
    doc["entries"] = entries
    return doc


def certificate_from_dict(doc: Any) -> GCCertificate:
    xs = nodeset_from_dict(doc)
    raw_entries = doc.get("entries")
    _expect(isinstance(raw_entries, list), "field 'entries' must be a list")
    entries = []
    for e in raw_entries:
        _expect(isinstance(e, dict), "certificate entries must be objects")
        _expect(isinstance(e.get("node"), int), "entry field 'node' must be an integer")
        lines = tuple(_line_from_triple(t, f"entry {e.get('node')}") for t in e.get("lines", []))
        witnesses = {}
        raw_witnesses = e.get("witnesses", {})
        _expect(isinstance(raw_witnesses, dict), "entry field 'witnesses' must be an object")
        for key, ids in raw_witnesses.items():
            parts = key.split(",")
            _expect(len(parts) == 3, f"witness key {key!r} is not 'a,b,c'")
            try:
                line = Line(int(parts[0]), int(parts[1]), int(parts[2]))
            except ValueError as exc:
                raise ParseError(f"witness key {key!r} is not a line: {exc}") from None
            _expect(isinstance(ids, list) and all(isinstance(j, int) for j in ids),
                    f"witnesses of {key!r} must be a list of node indices")
            witnesses[line] = tuple(ids)
        entries.append(
            NodeCertificate(
                node_index=e["node"],
                constant=parse_rational(e.get("constant")),
                lines=lines,
                witnesses=witnesses,
            )
        )
    return GCCertificate(nodeset=xs, entries=tuple(entries))


def save_certificate(cert: GCCertificate) -> str:
    return _dumps(certificate_to_dict(cert))


def load_certificate(text: str) -> GCCertificate:
    return certificate_from_dict(_loads(text, "certificate"))


# --- GM reports -----------------------------------------------------------------

def report_to_dict(report: GMReport) -> dict:
    return {
        "degree": report.degree,
        "satisfied": report.satisfied,
        "maximal_lines": [
            {"line": list(line.coefficients), "nodes": list(ids)}
            for line, ids in report.maximal_lines
        ],
        "counterexample": None
        if report.counterexample is None
        else certificate_to_dict(report.counterexample),
    }


def report_from_dict(doc: Any) -> GMReport:
    _expect(isinstance(doc, dict), "report document must be an object")
    _expect(isinstance(doc.get("degree"), int), "field 'degree' must be an integer")
    _expect(isinstance(doc.get("satisfied"), bool), "field 'satisfied' must be a boolean")
    raw = doc.get("maximal_lines")
    _expect(isinstance(raw, list), "field 'maximal_lines' must be a list")
    maximal = []
    for item in raw:
        _expect(isinstance(item, dict), "maximal line entries must be objects")
        line = _line_from_triple(item.get("line"), "maximal line")
        ids = item.get("nodes")
        _expect(isinstance(ids, list) and all(isinstance(j, int) for j in ids),
                "maximal line 'nodes' must be a list of indices")
        maximal.append((line, tuple(ids)))
    raw_cex = doc.get("counterexample")
    cex = None if raw_cex is None else certificate_from_dict(raw_cex)
    return GMReport(
        degree=doc["degree"],
        satisfied=doc["satisfied"],
        maximal_lines=tuple(maximal),
        counterexample=cex,
    )


def save_report(report: GMReport) -> str:
    return _dumps(report_to_dict(report))


def load_report(text: str) -> GMReport:
    return report_from_dict(_loads(text, "report"))


# --- search summaries -------------------------------------------------------------

def summary_to_dict(summary: SearchSummary) -> dict:
    return {
        "degree": summary.degree,
        "trials": summary.trials,
        "seed": summary.seed,
        "kinds": list(summary.kinds),
        "coordinate_bound": summary.coordinate_bound,
        "certified": summary.certified,
        "gm_satisfied": summary.gm_satisfied,
        "failures": [
            {
                "trial": f.trial,
                "kind": f.kind,
                "seed": f.seed,
                "reason": f.reason,
                "certificate": None if f.certificate is None else certificate_to_dict(f.certificate),
            }
            for f in summary.failures
        ],
        "use_count_max": {str(k): v for k, v in sorted(summary.use_count_max.items())},
    }


def summary_from_dict(doc: Any) -> SearchSummary:
    _expect(isinstance(doc, dict), "summary document must be an object")
    for field_name in ("degree", "trials", "seed", "coordinate_bound", "certified", "gm_satisfied"):
        _expect(isinstance(doc.get(field_name), int), f"field {field_name!r} must be an integer")
    _expect(isinstance(doc.get("kinds"), list), "field 'kinds' must be a list")
    failures = []
    for f in doc.get("failures", []):
        cert = None if f.get("certificate") is None else certificate_from_dict(f["certificate"])
        failures.append(
            TrialFailure(
                trial=f["trial"], kind=f["kind"], seed=f["seed"], reason=f["reason"], certificate=cert
            )
        )
    raw_counts = doc.get("use_count_max", {})
    _expect(isinstance(raw_counts, dict), "field 'use_count_max' must be an object")
    return SearchSummary(
        degree=doc["degree"],
        trials=doc["trials"],
        seed=doc["seed"],
        kinds=tuple(doc["kinds"]),
        coordinate_bound=doc["coordinate_bound"],
        certified=doc["certified"],
        gm_satisfied=doc["gm_satisfied"],
        failures=tuple(failures),
        use_count_max={int(k): v for k, v in raw_counts.items()},
    )


def save_summary(summary: SearchSummary) -> str:
    return _dumps(summary_to_dict(summary))


def load_summary(text: str) -> SearchSummary:
    return summary_from_dict(_loads(text, "summary"))

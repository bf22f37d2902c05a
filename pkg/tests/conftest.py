"""Shared fixtures: small lattices and their certificates, computed once."""

from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from gcnlab import (
    GeneratorSpec,
    Line,
    NodeSet,
    Point,
    certify_gc,
    gen_principal,
    generate_with_certificate,
    intersect,
)

CY2_LINES = (Line(1, 0, 0), Line(0, 1, 0), Line(1, 1, -1), Line(2, 1, -4))


def cy_nodes_from_lines(lines, degree):
    pts = sorted(
        {intersect(lines[i], lines[j]) for i in range(len(lines)) for j in range(i + 1, len(lines))}
    )
    return NodeSet(degree, tuple(pts))


@pytest.fixture(scope="session")
def triangle():
    """The smallest poised set: degree 1, unit triangle."""
    return NodeSet(1, (Point(0, 0), Point(1, 0), Point(0, 1)))


@pytest.fixture(scope="session")
def cy2():
    """A natural-lattice GC_2 set built from four named lines."""
    return cy_nodes_from_lines(CY2_LINES, 2)


@pytest.fixture(scope="session")
def cy2_cert(cy2):
    return certify_gc(cy2)


@pytest.fixture(scope="session")
def principal5():
    return gen_principal(5)


@pytest.fixture(scope="session")
def principal5_cert(principal5):
    return certify_gc(principal5)


@pytest.fixture(scope="session")
def cy5_pair():
    """A degree-5 natural lattice with its certificate (seeded)."""
    return generate_with_certificate(GeneratorSpec("chung_yao", 5, seed=42))


@pytest.fixture(scope="session")
def cy3_pair():
    return generate_with_certificate(GeneratorSpec("chung_yao", 3, seed=11))

"""Shared fixtures and helpers for the test suite."""

import json

import numpy as np
import pytest

from diskinterp import PointSequence, cli


@pytest.fixture
def rng():
    return np.random.default_rng(20260814)


def random_separated(rng, count: int, min_sep: float, max_abs: float = 0.85):
    """Rejection-sample a pseudohyperbolically separated point list."""
    points: list[complex] = []
    while len(points) < count:
        z = complex(*rng.uniform(-max_abs, max_abs, 2))
        if abs(z) >= max_abs:
            continue
        if all(abs((z - w) / (1 - np.conj(w) * z)) >= min_sep for w in points):
            points.append(z)
    return points


def make_sequence(rng, count: int, min_sep: float = 0.05) -> PointSequence:
    return PointSequence(tuple(random_separated(rng, count, min_sep)))


def write_document(path, points, label: str = "test") -> str:
    doc = cli.sequence_to_document(PointSequence(tuple(points), label=label))
    path.write_text(json.dumps(doc))
    return str(path)


def run_cli(argv: list[str]) -> int:
    """Invoke the CLI entry in-process and return its exit code."""
    return cli.main(argv)

"""Certificates for unavoidable induced structures in 2-connected graphs."""

import json

from ._core import FormatError, Graph, is_two_connected, longest_induced_path, threshold_names
from . import _core

__all__ = [
    "FormatError",
    "Graph",
    "extract",
    "is_two_connected",
    "longest_induced_path",
    "oracle",
    "threshold",
    "threshold_names",
    "verify",
]


def extract(graph, r, grs="none", path_budget=200_000, window_budget=1_000_000):
    """Run the extraction pipeline and return its report as a dict."""
    return json.loads(_core._extract(graph, r, grs, path_budget, window_budget))


def verify(graph, certificate):
    """Check a certificate (dict or JSON text) against ``graph``.

    Returns ``(ok, reason)``.
    """
    doc = certificate if isinstance(certificate, str) else json.dumps(certificate)
    return _core._verify(graph, doc)


def oracle(graph, r, cap=10):
    return json.loads(_core._oracle(graph, r, cap))


def threshold(name, *args, grs="none"):
    """Exact threshold value as an int, or None when it is unbounded."""
    return _core._threshold(name, [str(a) for a in args], grs)

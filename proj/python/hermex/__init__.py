"""Rank and inertia extremes of Hermitian matrix expressions.

Instances are dicts (or JSON text) in the command-line tool's file format:
{"kind": ..., "matrices": {name: {"rows", "cols", "entries"}}}, with exact
scalars written as strings like "1/2-3/4i". Every command returns
(exit_code, report_dict) using the tool's exit codes.
"""

import json as _json

from ._core import (  # noqa: F401
    HermexError,
    InputError,
    InternalInconsistency,
    PremiseViolated,
    inertia,
    pinv,
    rank,
    run,
)
from . import _core

__all__ = [
    "HermexError", "InputError", "InternalInconsistency", "PremiseViolated",
    "rank", "inertia", "pinv", "run",
    "analyze", "solve", "check_triple", "verify", "gen",
]


def _text(doc):
    return doc if isinstance(doc, str) else _json.dumps(doc)


def _wrap(res):
    code, text = res
    return code, _json.loads(text)


def analyze(instance, backend="", tol=None):
    return _wrap(_core.analyze(_text(instance), backend, tol))


def solve(instance, seed=1, backend="", tol=None):
    return _wrap(_core.solve(_text(instance), seed, backend, tol))


def check_triple(instance, backend="", tol=None):
    return _wrap(_core.check_triple(_text(instance), backend, tol))


def verify(instance, trials=1000, grid=2, seed=1, report=None):
    rep = None if report is None else _text(report)
    return _wrap(_core.verify(_text(instance), trials, grid, seed, rep))


def gen(kind="", n=2, seed=1, triple=""):
    """Random consistent instance; returns (instance_dict, planted_rows)."""
    text, planted = _core.gen(kind, triple, n, seed)
    return _json.loads(text), planted

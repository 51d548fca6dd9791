"""JSON encodings of complexes, cochains and exterior algebra elements.

Rationals always travel as ``"p/q"`` strings (or integers on input).
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Dict, List

from . import linalg as la
from .complex import Cochain, PComplex, build_complex
from .ring import Ext, Q, ext_ring


def parse_rational(x) -> Fraction:
    if isinstance(x, float):
        raise ValueError(f"floats are not accepted: {x!r}")
    return Fraction(x)


def parse_covector(text: str) -> tuple:
    """``"a/b,c/d,..."`` to a tuple of fractions."""
    return tuple(parse_rational(p.strip()) for p in text.split(",") if p.strip())


def format_covector(v) -> str:
    return ",".join(la.fmt(x) for x in v)


def ext_to_json(e: Ext) -> List[Dict[str, Any]]:
    return [{"blade": list(b), "coeff": la.fmt(c)} for b, c in sorted(e.terms.items(), key=lambda t: (len(t[0]), t[0]))]


def ext_from_json(data, n: int) -> Ext:
    return Ext(n, {tuple(t["blade"]): parse_rational(t["coeff"]) for t in data})


def complex_to_json(X: PComplex) -> dict:
    return {
        "dim": X.n,
        "vertices": [[la.fmt(x) for x in v] for v in X.vertices],
        "cells": [{"vertices": list(c.vertices), "orient": list(c.orient)} for c in X.cells],
    }


def complex_from_json(data: dict) -> PComplex:
    verts = [[parse_rational(x) for x in v] for v in data["vertices"]]
    if "dim" in data and any(len(v) != data["dim"] for v in verts):
        raise ValueError("vertex length does not match \"dim\"")
    return build_complex(verts, data["cells"])


def cochain_to_json(r: Cochain) -> dict:
    enc = ext_to_json if r.ring.kind == "ext" else la.fmt
    return {
        "degree": r.degree,
        "ring": r.ring.kind,
        "values": {str(k): enc(v) for k, v in sorted(r.values.items())},
    }


def cochain_from_json(data: dict, X: PComplex) -> Cochain:
    kind = data.get("ring", "Q")
    if kind == "Q":
        ring, dec = Q, parse_rational
    elif kind == "ext":
        ring = ext_ring(X.n)
        dec = lambda v: ext_from_json(v, X.n)  # noqa: E731
    else:
        raise ValueError(f"unknown ring {kind!r}")
    vals = {int(k): dec(v) for k, v in data.get("values", {}).items()}
    for k in vals:
        if not 0 <= k < len(X) or X[k].dim != data["degree"]:
            raise ValueError(f"cell {k} is not a {data['degree']}-cell")
    return Cochain(X, data["degree"], vals, ring)


def points_from_json(data) -> list:
    """A polytope file: a list of points, or ``{"vertices": [...]}``."""
    if isinstance(data, dict):
        data = data["vertices"]
    return [tuple(parse_rational(x) for x in p) for p in data]


def load(path: str):
    with open(path) as fh:
        return json.load(fh)


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)

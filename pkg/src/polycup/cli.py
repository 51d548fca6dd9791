"""Command-line front end.

Exit codes: 0 success, 2 invalid input or non-convenient parameter,
3 an internal cross-check disagreed.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import factorial
from typing import List, Optional

from . import io
from . import linalg as la
from .complex import ComplexError, Cochain, cohomology_rank
from .cup import NotConvenient, cech_cup, cup, is_convenient, sample_convenient, v_order
from .discriminant import WallCrossingError, classify_point, discriminant, wall_crossing
from .geometry import DimensionMismatch, mixed_volume, volume_by_cup, volume_by_triangulation
from .ring import RingMismatch, ext_ring
from .subdivision import NotASubdivision, build_subdivision, res, restriction_defect

OK, INVALID, MISMATCH = 0, 2, 3


@dataclass
class RunConfig:
    command: str
    inputs: List[str] = field(default_factory=list)
    v: Optional[tuple] = None
    u: Optional[tuple] = None
    seed: int = 0
    ring: Optional[str] = None
    verify: bool = False
    out: Optional[str] = None


class Mismatch(Exception):
    def __init__(self, report):
        self.report = report
        super().__init__("cross-check mismatch")


def _parameter(cfg: RunConfig, X, degrees=None) -> tuple:
    if cfg.v is None:
        return sample_convenient(X, cfg.seed, degrees)
    rep = is_convenient(cfg.v, X, degrees)
    if not rep:
        raise NotConvenient(rep.kind, rep.cell, rep.pair, rep.degrees)
    return cfg.v


def _load_cochain(path, X, ring: Optional[str]) -> Cochain:
    r = io.cochain_from_json(io.load(path), X)
    if ring == "ext" and r.ring.kind == "Q":
        r = Cochain(X, r.degree, r.values, ext_ring(X.n))
    elif ring == "Q" and r.ring.kind == "ext":
        raise RingMismatch("exterior cochain where --ring Q was requested")
    return r


def _complex(path):
    return io.complex_from_json(io.load(path))


def cmd_validate(cfg: RunConfig) -> dict:
    X = _complex(cfg.inputs[0])
    counts = {str(d): len(X.cells_of_dim(d)) for d in range(X.dim + 1)}
    return {"valid": True, "ambient_dim": X.n, "dim": X.dim, "cells_by_dim": counts, "simplicial": X.is_simplicial()}


def cmd_product(cfg: RunConfig) -> dict:
    X = _complex(cfg.inputs[0])
    r = _load_cochain(cfg.inputs[1], X, cfg.ring)
    s = _load_cochain(cfg.inputs[2], X, cfg.ring)
    v = _parameter(cfg, X, [(r.degree, s.degree)])
    prod = cup(r, s, v)
    out = {"v": io.format_covector(v), "product": io.cochain_to_json(prod)}
    if cfg.verify and X.is_simplicial():
        ok = cech_cup(r, s, v_order(X, v)) == prod
        out["cech_agrees"] = ok
        if not ok:
            raise Mismatch(out)
    return out


def cmd_volume(cfg: RunConfig) -> dict:
    pts = io.points_from_json(io.load(cfg.inputs[0]))
    vol, v = volume_by_cup(pts, cfg.v, cfg.seed)
    tri = volume_by_triangulation(pts)
    out = {"volume": la.fmt(vol), "volume_triangulation": la.fmt(tri),
           "v": io.format_covector(v) if v is not None else None}
    if vol != tri:
        raise Mismatch(out)
    return out


def polarization(summands) -> Fraction:
    """``V = (1/n!) sum over subsets S of (-1)^(n-|S|) vol(sum S)``."""
    n = len(summands)
    total = Fraction(0)
    for k in range(1, n + 1):
        for S in combinations(range(n), k):
            acc = [tuple(Fraction(0) for _ in range(n))]
            for i in S:
                acc = [la.add(a, la.vec(b)) for a in acc for b in summands[i]]
            total += (-1) ** (n - k) * volume_by_triangulation(acc)
    return total / factorial(n)


def cmd_mixed_volume(cfg: RunConfig) -> dict:
    summands = [io.points_from_json(io.load(p)) for p in cfg.inputs]
    val, v = mixed_volume(summands, cfg.v, cfg.seed)
    out = {"mixed_volume": la.fmt(val), "v": io.format_covector(v) if v is not None else None}
    if cfg.verify:
        pol = polarization(summands)
        out["polarization"] = la.fmt(pol)
        if pol != val:
            raise Mismatch(out)
    return out


def cmd_discriminant(cfg: RunConfig) -> dict:
    X = _complex(cfg.inputs[0])
    walls = [{"normal": list(h.normal),
              "triples": [{"delta": t.delta, "lambda": t.lam, "gamma": t.gamma, "p": t.p, "q": t.q} for t in h.triples]}
             for h in discriminant(X)]
    out = {"hyperplanes": walls}
    if cfg.v is not None:
        pc = classify_point(cfg.v, X)
        out["point"] = {"v": io.format_covector(cfg.v), "kind": pc.kind,
                        "hyperplanes": [list(h) for h in pc.hyperplanes], "convenient": pc.convenient}
    return out


def cmd_wallcross(cfg: RunConfig) -> dict:
    X = _complex(cfg.inputs[0])
    r = _load_cochain(cfg.inputs[1], X, cfg.ring)
    s = _load_cochain(cfg.inputs[2], X, cfg.ring)
    if cfg.u is None or cfg.v is None:
        raise ValueError("wallcross needs both --u and --v")
    wc = wall_crossing(r, s, cfg.u, cfg.v)
    diff = cup(r, s, cfg.v) - cup(r, s, cfg.u)
    out = {"wall": list(wc.wall.normal), "kappa": io.format_covector(wc.kappa), "t": la.fmt(wc.t),
           "triples": [[t.delta, t.lam, t.gamma] for t in wc.triples],
           "correction": io.cochain_to_json(wc.correction), "identity_holds": wc.correction == diff}
    if not out["identity_holds"]:
        raise Mismatch(out)
    return out


def cmd_cech_check(cfg: RunConfig) -> dict:
    X = _complex(cfg.inputs[0])
    r = _load_cochain(cfg.inputs[1], X, cfg.ring)
    s = _load_cochain(cfg.inputs[2], X, cfg.ring)
    v = _parameter(cfg, X, [(r.degree, s.degree)])
    a, b = cup(r, s, v), cech_cup(r, s, v_order(X, v))
    out = {"v": io.format_covector(v), "agree": a == b, "product": io.cochain_to_json(a)}
    if a != b:
        out["cech"] = io.cochain_to_json(b)
        raise Mismatch(out)
    return out


def cmd_res(cfg: RunConfig) -> dict:
    X, Y = _complex(cfg.inputs[0]), _complex(cfg.inputs[1])
    m = build_subdivision(X, Y)
    r = _load_cochain(cfg.inputs[2], X, cfg.ring)
    out = {"res": io.cochain_to_json(res(r, m))}
    if len(cfg.inputs) > 3:
        s = _load_cochain(cfg.inputs[3], X, cfg.ring)
        v = cfg.v
        if v is None:
            for k in range(100):
                cand = sample_convenient(X, cfg.seed + k, [(r.degree, s.degree)])
                if is_convenient(cand, Y, [(r.degree, s.degree)]):
                    v = cand
                    break
            else:
                raise NotConvenient("no parameter convenient for both complexes")
        defect, witness = restriction_defect(r, s, v, m)
        out.update({"v": io.format_covector(v), "defect": io.cochain_to_json(defect),
                    "witness": io.cochain_to_json(witness) if witness is not None else None})
        if witness is None:
            raise Mismatch(out)
    return out


def cmd_cohomology(cfg: RunConfig) -> dict:
    X = _complex(cfg.inputs[0])
    return {"ranks": [cohomology_rank(X, p) for p in range(X.dim + 1)]}


COMMANDS = {
    "validate": (cmd_validate, ["complex"]),
    "product": (cmd_product, ["complex", "cochain_a", "cochain_b"]),
    "volume": (cmd_volume, ["polytope"]),
    "mixed-volume": (cmd_mixed_volume, ["summands+"]),
    "discriminant": (cmd_discriminant, ["complex"]),
    "wallcross": (cmd_wallcross, ["complex", "cochain_a", "cochain_b"]),
    "cech-check": (cmd_cech_check, ["complex", "cochain_a", "cochain_b"]),
    "res": (cmd_res, ["fine", "coarse", "cochain_a", "cochain_b?"]),
    "cohomology": (cmd_cohomology, ["complex"]),
}


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="polycup", description="Exact cup products on polyhedral complexes.")
    sub = ap.add_subparsers(dest="command", required=True)
    for name, (_, args) in COMMANDS.items():
        p = sub.add_parser(name)
        for a in args:
            if a.endswith("+"):
                p.add_argument(a[:-1], nargs="+")
            elif a.endswith("?"):
                p.add_argument(a[:-1], nargs="?")
            else:
                p.add_argument(a)
        g = p.add_mutually_exclusive_group()
        g.add_argument("--v", type=io.parse_covector, help='covector "a/b,c/d,..."')
        g.add_argument("--seed", type=int, help="sample a convenient covector")
        p.add_argument("--u", type=io.parse_covector, help="start of the segment (wallcross)")
        p.add_argument("--ring", choices=["Q", "ext"])
        p.add_argument("--verify", action="store_true")
        p.add_argument("--out")
    return ap


def _config(ns) -> RunConfig:
    inputs = []
    for a in COMMANDS[ns.command][1]:
        val = getattr(ns, a.rstrip("+?"))
        if isinstance(val, list):
            inputs += val
        elif val is not None:
            inputs.append(val)
    return RunConfig(ns.command, inputs, ns.v, ns.u, ns.seed or 0, ns.ring, ns.verify, ns.out)


def _emit(obj, cfg: RunConfig, stream) -> None:
    text = io.dumps(obj)
    print(text, file=stream)
    if cfg.out:
        with open(cfg.out, "w") as fh:
            fh.write(text + "\n")


def main(argv=None) -> int:
    ns = build_parser().parse_args(argv)
    cfg = _config(ns)
    try:
        out = COMMANDS[cfg.command][0](cfg)
    except Mismatch as e:
        _emit({"error": "mismatch", **e.report}, cfg, sys.stdout)
        return MISMATCH
    except (ComplexError, NotConvenient, NotASubdivision, WallCrossingError, RingMismatch,
            DimensionMismatch, ValueError, KeyError, json.JSONDecodeError, OSError) as e:
        rep = {"error": type(e).__name__, "message": str(e)}
        if isinstance(e, NotConvenient):
            rep["witness"] = {"kind": e.kind, "cell": e.cell, "pair": e.pair, "degrees": e.degrees}
        _emit(rep, cfg, sys.stdout)
        return INVALID
    _emit(out, cfg, sys.stdout)
    return OK


if __name__ == "__main__":
    sys.exit(main())

"""Command-line interface: JSON documents in, canonical JSON (or SVG) out.

Exit codes: 0 success, 1 domain failure (improper divisor, cross-check
mismatch, non-rational fiber), 2 input error.
"""

from __future__ import annotations

import argparse
import sys
from concurrent.futures import ThreadPoolExecutor
from typing import Any, Callable, Optional, Sequence

from . import docs
from .corpus import corpus
from .cone3 import Cone3
from .divisor import (
    NotProper,
    classify_points,
    essential_count,
    is_proper,
    total_polytope,
)
from .docs import DocumentError, dumps
from .downgrade import crosscheck, downgrade, toric_t1_line_dims, upgrade, altmann_t1
from .lattice import LatticeError
from .polyhedra import LatticePolyhedron
from .render import centered_box, render_svg
from .t1 import t1_dim
from .versal import NonRationalRoots, VersalFamily, build_family, specialize_fiber

OK, DOMAIN_FAILURE, INPUT_ERROR = 0, 1, 2


class DomainFailure(Exception):
    """Raised by a command whose result is valid output but a negative verdict."""

    def __init__(self, payload: dict):
        self.payload = payload
        super().__init__("domain failure")


def _read(path: str) -> Any:
    try:
        with open(path, encoding="utf-8") as f:
            text = f.read()
    except OSError as e:
        raise DocumentError("", f"cannot read {path}: {e.strerror}") from e
    return docs.loads(text)


def _vec(v: Sequence[int]) -> list[int]:
    return list(v)


def _t1_payload(D) -> dict:
    rep = t1_dim(D)
    return {
        "total": rep.total,
        "r_prime": rep.r_prime,
        "global_term": rep.global_term,
        "per_point": [{"t": str(c.point), "edge_lengths": list(c.edge_lengths),
                       "contribution": c.contribution} for c in rep.per_point],
    }


def cmd_validate(args) -> dict:
    D = docs.parse_divisor(_read(args.path))
    cert = is_proper(D)
    out = {
        "proper": cert.proper,
        "certificate": None if cert.proper else {
            "violating_vertex": _vec(cert.violating_vertex), "reason": cert.reason},
        "points": [{"t": str(p), "class": c.value} for p, c in classify_points(D)],
        "r_prime": essential_count(D),
        "total_polytope": docs.polyhedron_doc(total_polytope(D)),
    }
    if not cert.proper:
        raise DomainFailure(out)
    return out


def cmd_t1(args) -> dict:
    return _t1_payload(docs.parse_divisor(_read(args.path)))


def cmd_downgrade(args) -> dict:
    inp, basis = docs.parse_cone_document(_read(args.path))
    res = downgrade(inp, basis)
    return {
        "divisor": docs.divisor_doc(res.divisor),
        "basis": docs.vec_list(res.basis),
        "edges": [{"ray": _vec(r), "sign": s.value}
                  for r, s in zip(res.classification.rays, res.classification.signs)],
    }


def cmd_upgrade(args) -> dict:
    return docs.cone_doc(upgrade(docs.parse_divisor(_read(args.path))))


def cmd_toric_t1(args) -> dict:
    inp, basis = docs.parse_cone_document(_read(args.path))
    line = toric_t1_line_dims(inp, basis)
    hb = inp.tau.dual().hilbert_basis(args.bound)
    lo, hi = line.support_bounds()
    oracle = {}
    for a in range(min(lo, -1) - 1, max(hi, 1) + 2):
        if a:
            v = altmann_t1(inp.tau, tuple(a * c for c in inp.chi0), hilbert_basis=hb)
            if v:
                oracle[str(a)] = v
    return {
        "line": {str(a): d for a, d in sorted(line.dims.items())},
        "total": line.total,
        "oracle_line": oracle,
        "agree": oracle == {str(a): d for a, d in line.dims.items()},
    }


def _crosscheck_payload(D, bound: int) -> dict:
    rep = crosscheck(D, bound)
    return {
        "divisor_formula": rep.divisor_formula,
        "toric_corollaries": rep.toric_corollaries,
        "altmann_oracle": rep.altmann_oracle,
        "line": {str(a): d for a, d in sorted(rep.line.items())},
        "oracle_line": {str(a): d for a, d in sorted(rep.oracle_line.items())},
        "agree": rep.agree,
    }


def cmd_crosscheck(args) -> dict:
    if args.corpus is not None:
        if args.path:
            raise DocumentError("", "give either a document or --corpus, not both")
        divisors = corpus(args.seed, args.corpus, two_point=True)
        with ThreadPoolExecutor(max_workers=args.workers) as ex:
            results = list(ex.map(lambda D: _crosscheck_payload(D, args.bound), divisors))
        out = {
            "seed": args.seed,
            "count": len(results),
            "instances": [{"index": i, "divisor": docs.divisor_doc(D), **r}
                          for i, (D, r) in enumerate(zip(divisors, results))],
            "all_agree": all(r["agree"] for r in results),
        }
        ok = out["all_agree"]
    else:
        if not args.path:
            raise DocumentError("", "a divisor document or --corpus N is required")
        out = _crosscheck_payload(docs.parse_divisor(_read(args.path)), args.bound)
        ok = out["agree"]
    if not ok:
        raise DomainFailure(out)
    return out


def family_doc(F: VersalFamily, source) -> dict:
    return {
        "source": docs.divisor_doc(source),
        "normalized": docs.divisor_doc(F.normalized),
        "normalization": {
            "moebius": [docs.rat_str(x) for x in F.log.moebius],
            "shifts": [{"t": str(p), "shift": _vec(v)} for p, v in F.log.shifts],
            "added_infinity": F.log.added_infinity,
            "infinity_shift": _vec(F.log.infinity_shift),
        },
        "summands": [{
            "edge": _vec(s.xi.edge),
            "multiplicity": s.multiplicity,
            "points": [{"t": str(p), "multiplicity": k} for p, k in s.per_point],
        } for s in F.summands],
        "delta_inf": docs.polyhedron_doc(F.delta_inf),
        "params": F.param_names,
        "dim_V": F.dim_V,
        "base_point": [docs.rat_str(x) for x in F.base_point],
        "chi_basis": docs.vec_list(F.chi_basis),
        "degree_set": [{"degree": _vec(d), "section_dim": n}
                       for d, n in zip(F.degrees.degrees, F.degrees.section_dims)],
        "generators": [{
            "degree": _vec(g.degree),
            "t0": g.t0_exponent,
            "factors": list(g.factor_exponents),
            "t1": g.t1_exponent,
            "t2": g.t2_exponent,
        } for g in F.generators],
    }


def cmd_versal(args) -> dict:
    D = docs.parse_divisor(_read(args.path))
    return family_doc(build_family(D), D)


def cmd_fiber(args) -> dict:
    doc = _read(args.path)
    if isinstance(doc, dict) and "source" in doc:
        D = docs.parse_divisor(doc["source"])
    else:
        D = docs.parse_divisor(doc)
    F = build_family(D)
    a = docs.parse_at(args.at) if args.at is not None else list(F.base_point)
    if len(a) != F.dim_V:
        raise DocumentError("--at", f"expected {F.dim_V} coordinates, got {len(a)}")
    fib = specialize_fiber(F, a)
    return {"at": [docs.rat_str(x) for x in a], "divisor": docs.divisor_doc(fib),
            "t1": t1_dim(fib).total}


def cmd_hilbert(args) -> dict:
    doc = _read(args.path)
    rays = doc.get("rays") if isinstance(doc, dict) else None
    if isinstance(rays, list) and rays and isinstance(rays[0], list) and len(rays[0]) == 2:
        c2 = docs.parse_sigma(doc, "")
        return {"rays": docs.vec_list(c2.rays), "hilbert_basis": docs.vec_list(c2.hilbert_basis())}
    c3: Cone3 = docs.parse_cone3(doc)
    return {"rays": docs.vec_list(c3.rays), "hilbert_basis": docs.vec_list(c3.hilbert_basis(args.bound))}


def _render_polyhedron(doc: Any, point: Optional[str]) -> LatticePolyhedron:
    if isinstance(doc, dict) and "points" in doc:
        D = docs.parse_divisor(doc)
        if point is None:
            entries = D.sorted().entries
            if not entries:
                raise DocumentError("/points", "divisor has no entries to draw")
            return entries[0][1]
        p = docs.parse_point(point, "--point")
        poly = D.coefficient(p)
        if poly is None:
            raise DocumentError("--point", f"no coefficient at {p}")
        return poly
    sigma = docs.parse_sigma(docs._get(doc, "sigma", ""))
    return docs.parse_polyhedron(doc, sigma, "")


def cmd_render(args) -> str:
    poly = _render_polyhedron(_read(args.path), args.point)
    box = centered_box(poly, *args.clip) if args.clip else None
    svg = render_svg(poly, box)
    try:
        with open(args.out, "w", encoding="utf-8", newline="\n") as f:
            f.write(svg)
    except OSError as e:
        raise DocumentError("", f"cannot write {args.out}: {e.strerror}") from e
    return ""


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="tdeform", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name: str, fn: Callable, help: str, path: bool = True) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help)
        if path:
            p.add_argument("path")
        p.add_argument("--bound", type=int, default=10_000,
                       help="maximal parallelepiped volume for Hilbert basis enumeration")
        p.set_defaults(fn=fn)
        return p

    add("validate", cmd_validate, "check properness and classify points")
    add("t1", cmd_t1, "dimension of the degree-zero first-order deformations")
    add("downgrade", cmd_downgrade, "polyhedral divisor of a 3D cone along chi0")
    add("upgrade", cmd_upgrade, "3D cone of a divisor supported at 0 and inf")
    add("toric-t1", cmd_toric_t1, "graded toric T^1 along the chi0 line")
    cc = add("crosscheck", cmd_crosscheck, "compare the divisor formula with the toric computations",
             path=False)
    cc.add_argument("path", nargs="?")
    cc.add_argument("--corpus", type=int, metavar="N")
    cc.add_argument("--seed", type=int, default=0)
    cc.add_argument("--workers", type=int, default=4)
    add("versal", cmd_versal, "explicit versal family of a divisor")
    fb = add("fiber", cmd_fiber, "fiber of the versal family over a rational point")
    fb.add_argument("--at", help="comma-separated rationals; defaults to the base point")
    add("hilbert", cmd_hilbert, "Hilbert basis of a 2D or 3D cone")
    rd = add("render", cmd_render, "draw a polyhedron as SVG")
    rd.add_argument("out")
    rd.add_argument("--clip", type=int, nargs=2, metavar=("W", "H"))
    rd.add_argument("--point", help="which coefficient of a divisor document to draw")
    return ap


def _error(kind: str, detail: str, pointer: Optional[str] = None) -> dict:
    err = {"kind": kind, "detail": detail}
    if pointer is not None:
        err["pointer"] = pointer
    return {"error": err}


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        out = args.fn(args)
        code = OK
    except DomainFailure as e:
        out, code = e.payload, DOMAIN_FAILURE
    except DocumentError as e:
        out, code = _error("DocumentError", e.detail, e.pointer or "/"), INPUT_ERROR
    except (NotProper, NonRationalRoots) as e:
        out, code = _error(type(e).__name__, str(e)), DOMAIN_FAILURE
    except LatticeError as e:
        out, code = _error(type(e).__name__, str(e)), INPUT_ERROR
    if out != "":
        sys.stdout.write(dumps(out))
    return code


if __name__ == "__main__":
    sys.exit(main())

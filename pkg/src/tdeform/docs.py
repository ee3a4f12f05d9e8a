"""JSON documents: parsing with JSON-pointer error locations, canonical serialization."""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Optional, Sequence

from .cone3 import Cone3
from .divisor import P1Point, PolyhedralDivisor
from .downgrade import DowngradeInput
from .lattice import Cone2, LatticeError
from .polyhedra import LatticePolyhedron


class DocumentError(ValueError):
    def __init__(self, pointer: str, detail: str):
        self.pointer = pointer
        self.detail = detail
        super().__init__(f"{pointer or '/'}: {detail}")


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=True) + "\n"


def loads(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise DocumentError("", f"malformed JSON at line {e.lineno} column {e.colno}: {e.msg}") from e


def rat_str(x: Fraction) -> str:
    return str(Fraction(x))


def parse_rat(s: Any, pointer: str) -> Fraction:
    if isinstance(s, bool) or not isinstance(s, (str, int)):
        raise DocumentError(pointer, "expected an integer or a 'p/q' string")
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError) as e:
        raise DocumentError(pointer, f"invalid rational {s!r}") from e


def _get(obj: Any, key: str, pointer: str) -> Any:
    if not isinstance(obj, dict):
        raise DocumentError(pointer, "expected an object")
    if key not in obj:
        raise DocumentError(f"{pointer}/{key}", "missing")
    return obj[key]


def _int_vec(v: Any, n: int, pointer: str) -> tuple[int, ...]:
    if not isinstance(v, list) or len(v) != n or not all(
            isinstance(x, int) and not isinstance(x, bool) for x in v):
        raise DocumentError(pointer, f"expected a list of {n} integers")
    return tuple(v)


def _int_vecs(v: Any, n: int, pointer: str, min_len: int = 1) -> list[tuple[int, ...]]:
    if not isinstance(v, list) or len(v) < min_len:
        raise DocumentError(pointer, f"expected a list of at least {min_len} vectors")
    return [_int_vec(x, n, f"{pointer}/{i}") for i, x in enumerate(v)]


def parse_sigma(obj: Any, pointer: str = "/sigma") -> Cone2:
    rays = _int_vecs(_get(obj, "rays", pointer), 2, pointer + "/rays", 2)
    if len(rays) != 2:
        raise DocumentError(pointer + "/rays", "expected exactly two rays")
    try:
        return Cone2.from_rays(*rays)
    except LatticeError as e:
        raise DocumentError(pointer + "/rays", str(e)) from e


def sigma_doc(c: Cone2) -> dict:
    return {"rays": [list(c.ray0), list(c.ray1)]}


def parse_point(s: Any, pointer: str) -> P1Point:
    if isinstance(s, str) and s.strip().lower() == "inf":
        return P1Point(None)
    return P1Point(parse_rat(s, pointer))


def parse_polyhedron(obj: Any, sigma: Cone2, pointer: str) -> LatticePolyhedron:
    verts = _int_vecs(_get(obj, "vertices", pointer), 2, pointer + "/vertices")
    return LatticePolyhedron.from_vertices(sigma, verts)


def polyhedron_doc(p: LatticePolyhedron) -> dict:
    return {"vertices": [list(v) for v in p.vertices]}


def parse_divisor(doc: Any) -> PolyhedralDivisor:
    sigma = parse_sigma(_get(doc, "sigma", ""))
    pts = _get(doc, "points", "")
    if not isinstance(pts, list):
        raise DocumentError("/points", "expected a list")
    entries = []
    seen = {}
    for i, e in enumerate(pts):
        ptr = f"/points/{i}"
        p = parse_point(_get(e, "t", ptr), ptr + "/t")
        if p in seen:
            raise DocumentError(ptr + "/t", f"point {p} repeats /points/{seen[p]}")
        seen[p] = i
        entries.append((p, parse_polyhedron(_get(e, "polyhedron", ptr), sigma, ptr + "/polyhedron")))
    return PolyhedralDivisor(sigma, tuple(entries))


def divisor_doc(D: PolyhedralDivisor) -> dict:
    return {
        "sigma": sigma_doc(D.sigma),
        "points": [{"t": str(p), "polyhedron": polyhedron_doc(poly)} for p, poly in D.entries],
    }


def parse_cone3(doc: Any, pointer: str = "") -> Cone3:
    rays = _int_vecs(_get(doc, "rays", pointer), 3, pointer + "/rays", 3)
    try:
        return Cone3.from_generators(rays)
    except LatticeError as e:
        raise DocumentError(pointer + "/rays", str(e)) from e


def parse_cone_document(doc: Any) -> tuple[DowngradeInput, Optional[list[tuple[int, ...]]]]:
    """Cone document with optional ``basis`` ``[f1, f2, g]``."""
    tau = parse_cone3(doc)
    chi0 = _int_vec(_get(doc, "chi0", ""), 3, "/chi0")
    basis = None
    if isinstance(doc, dict) and "basis" in doc:
        basis = _int_vecs(doc["basis"], 3, "/basis", 3)
    return DowngradeInput(tau, chi0), basis  # type: ignore[arg-type]


def cone_doc(inp: DowngradeInput) -> dict:
    return {"rays": [list(r) for r in inp.tau.rays], "chi0": list(inp.chi0)}


def parse_at(s: str) -> list[Fraction]:
    parts = [x for x in s.split(",") if x.strip()] if s.strip() else []
    return [parse_rat(x.strip(), f"--at[{i}]") for i, x in enumerate(parts)]


def vec_list(vs: Sequence[Sequence[int]]) -> list[list[int]]:
    return [list(v) for v in vs]

"""Polyhedral divisors on the projective line."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

from .lattice import (
    Cone2,
    LatticeError,
    Vec2,
    add,
    complete_to_basis,
    cross,
    hilbert_basis_2d,
    scale,
    sort_ccw,
)
from .polyhedra import (
    LatticePolyhedron,
    NormalFan,
    TailMismatch,
    minkowski_sum_all,
    normal_fan,
)


class DivisorError(LatticeError):
    pass


class NotProper(DivisorError):
    pass


class DegreeNotInSet(DivisorError):
    pass


@dataclass(frozen=True, order=False)
class P1Point:
    """A point of the projective line: a rational coordinate or infinity."""

    t: Optional[Fraction]

    @classmethod
    def parse(cls, s: Union[str, int, Fraction, "P1Point"]) -> P1Point:
        if isinstance(s, P1Point):
            return s
        if isinstance(s, str) and s.strip().lower() in ("inf", "oo", "infinity"):
            return INF
        return cls(Fraction(s))

    @property
    def is_infinity(self) -> bool:
        return self.t is None

    def sort_key(self) -> tuple[int, Fraction]:
        return (1, Fraction(0)) if self.t is None else (0, self.t)

    def __str__(self) -> str:
        return "inf" if self.t is None else str(self.t)

    def __repr__(self) -> str:
        return f"P1Point({self})"


INF = P1Point(None)
ZERO = P1Point(Fraction(0))


def moebius(p: P1Point, m: tuple[Fraction, Fraction, Fraction, Fraction]) -> P1Point:
    """Apply ``t -> (a t + b) / (c t + d)`` (``ad - bc != 0``)."""
    a, b, c, d = m
    if a * d - b * c == 0:
        raise DivisorError("degenerate Moebius transformation")
    if p.t is None:
        return INF if c == 0 else P1Point(Fraction(a) / c)
    den = c * p.t + d
    if den == 0:
        return INF
    return P1Point((a * p.t + b) / den)


class PointClass(Enum):
    ESSENTIAL = "essential"
    REMOVABLE = "removable"
    TRIVIAL = "trivial"


def classify_polyhedron(p: LatticePolyhedron) -> PointClass:
    if p.n_vertices >= 2:
        return PointClass.ESSENTIAL
    return PointClass.TRIVIAL if p.vertices[0] == (0, 0) else PointClass.REMOVABLE


@dataclass(frozen=True)
class PolyhedralDivisor:
    """``sum p (x) Delta_p`` over distinct points with a common tail cone."""

    sigma: Cone2
    entries: tuple[tuple[P1Point, LatticePolyhedron], ...]

    def __post_init__(self) -> None:
        seen = set()
        for p, poly in self.entries:
            if p in seen:
                raise DivisorError(f"point {p} appears twice")
            seen.add(p)
            if poly.tail != self.sigma:
                raise TailMismatch(f"coefficient at {p} has tail {poly.tail}, expected {self.sigma}")

    @classmethod
    def build(cls, sigma: Cone2,
              entries: Iterable[tuple[Union[str, int, Fraction, P1Point], Iterable[Sequence[int]]]]
              ) -> PolyhedralDivisor:
        """Convenience constructor from ``(point, vertex list)`` pairs."""
        return cls(sigma, tuple(
            (P1Point.parse(p), LatticePolyhedron.from_vertices(sigma, vs)) for p, vs in entries))

    @property
    def points(self) -> list[P1Point]:
        return [p for p, _ in self.entries]

    def coefficient(self, p: P1Point) -> Optional[LatticePolyhedron]:
        for q, poly in self.entries:
            if q == p:
                return poly
        return None

    def polyhedra(self) -> list[LatticePolyhedron]:
        return [poly for _, poly in self.entries]

    def sorted(self) -> PolyhedralDivisor:
        return PolyhedralDivisor(self.sigma, tuple(sorted(self.entries, key=lambda e: e[0].sort_key())))

    def relabel(self, m: tuple[Fraction, Fraction, Fraction, Fraction]) -> PolyhedralDivisor:
        return PolyhedralDivisor(self.sigma, tuple((moebius(p, m), poly) for p, poly in self.entries))

    def with_entry(self, p: P1Point, poly: LatticePolyhedron) -> PolyhedralDivisor:
        rest = tuple(e for e in self.entries if e[0] != p)
        return PolyhedralDivisor(self.sigma, rest + ((p, poly),))

    def without_trivial(self) -> PolyhedralDivisor:
        return PolyhedralDivisor(self.sigma, tuple(
            e for e in self.entries if classify_polyhedron(e[1]) is not PointClass.TRIVIAL))


def total_polytope(D: PolyhedralDivisor) -> LatticePolyhedron:
    return minkowski_sum_all(D.sigma, D.polyhedra())


def degree(D: PolyhedralDivisor, chi: Vec2) -> int:
    return total_polytope(D).eval(chi)


def section_dim(D: PolyhedralDivisor, chi: Vec2) -> int:
    return max(degree(D, chi) + 1, 0)


@dataclass(frozen=True)
class Properness:
    proper: bool
    violating_vertex: Optional[Vec2] = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.proper


def is_proper(D: PolyhedralDivisor) -> Properness:
    """Vertex criterion: the total polytope lies in sigma and avoids the apex."""
    total = total_polytope(D)
    for v in total.vertices:
        if not D.sigma.contains(v):
            return Properness(False, v, "vertex of the total polytope lies outside sigma")
    if (0, 0) in total.vertices:
        return Properness(False, (0, 0), "origin is a vertex of the total polytope")
    return Properness(True)


def require_proper(D: PolyhedralDivisor) -> None:
    cert = is_proper(D)
    if not cert:
        raise NotProper(f"divisor is not proper: {cert.reason} {cert.violating_vertex}")


def classify_points(D: PolyhedralDivisor) -> list[tuple[P1Point, PointClass]]:
    return [(p, classify_polyhedron(poly)) for p, poly in D.entries]


def essential_count(D: PolyhedralDivisor) -> int:
    return sum(1 for _, c in classify_points(D) if c is PointClass.ESSENTIAL)


def total_normal_fan(D: PolyhedralDivisor) -> NormalFan:
    """Common refinement of the coefficient normal fans."""
    d = D.sigma.dual()
    rays = {d.ray0, d.ray1}
    for poly in D.polyhedra():
        rays.update(normal_fan(poly).rays)
    return NormalFan(tuple(sort_ccw(rays, d.ray0)))


@dataclass(frozen=True)
class DegreeSet:
    degrees: tuple[Vec2, ...]
    section_dims: tuple[int, ...]

    def __contains__(self, chi: object) -> bool:
        return chi in self.degrees

    def __iter__(self):
        return iter(self.degrees)

    def __len__(self) -> int:
        return len(self.degrees)


def _vertex_cone_conditions(D: PolyhedralDivisor) -> list[tuple[Vec2, Vec2, Vec2]]:
    """``(edge normal n, lo, hi)`` triples: some degree in ``cone(lo, hi)`` must pair with ``n`` to a basis."""
    out = []
    for poly in D.polyhedra():
        rays = normal_fan(poly).rays
        for j in range(len(rays) - 1):
            lo, hi = rays[j], rays[j + 1]
            out.append((lo, lo, hi))
            out.append((hi, lo, hi))
    return out


def degree_set_violations(D: PolyhedralDivisor, degrees: Iterable[Vec2]) -> list[str]:
    """Check the generating-degree conditions; an empty list means all hold."""
    degs = set(degrees)
    problems = []
    for c in total_normal_fan(D).subcones:
        for h in hilbert_basis_2d(c):
            if h not in degs:
                problems.append(f"Hilbert basis element {h} of {c} missing")
    for poly in D.polyhedra():
        for r in normal_fan(poly).rays:
            if r not in degs:
                problems.append(f"edge normal {r} missing")
    for n, lo, hi in _vertex_cone_conditions(D):
        cone = Cone2(lo, hi)
        if not any(cone.contains(x) and abs(cross(x, n)) == 1 for x in degs):
            problems.append(f"no degree in {cone} completes {n} to a basis")
    return problems


def degree_set(D: PolyhedralDivisor) -> DegreeSet:
    """Degrees whose graded pieces generate the coordinate ring."""
    degs: set[Vec2] = set()
    for c in total_normal_fan(D).subcones:
        degs.update(hilbert_basis_2d(c))
    for poly in D.polyhedra():
        degs.update(normal_fan(poly).rays)
    for n, lo, hi in _vertex_cone_conditions(D):
        cone = Cone2(lo, hi)
        if any(cone.contains(x) and abs(cross(x, n)) == 1 for x in degs):
            continue
        other = hi if n == lo else lo
        c2 = complete_to_basis(n)
        found = []
        for base in (c2, scale(-1, c2)):
            if cross(n, base) * cross(n, other) <= 0:
                continue
            # cross(other, base + k n) / cross(other, n) >= 0 is linear in k
            k_min = -(cross(other, base) // cross(other, n))
            found.extend(add(base, scale(k, n)) for k in range(k_min, k_min + 3))
        found = [x for x in found if cone.contains(x)]
        x = min(found, key=lambda v: (abs(v[0]) + abs(v[1]), v))
        degs.add(x)
    d = D.sigma.dual()
    ordered = tuple(sort_ccw(degs, d.ray0))
    return DegreeSet(ordered, tuple(section_dim(D, x) for x in ordered))


def section_basis_exponents(D: PolyhedralDivisor, chi: Vec2, degrees: Optional[DegreeSet] = None
                            ) -> list[tuple[Vec2, int]]:
    """Descriptors ``(chi, k)`` for ``k = 0 .. deg D(chi)``: the sections ``t^k`` in a fixed frame."""
    degrees = degrees if degrees is not None else degree_set(D)
    if chi not in degrees:
        raise DegreeNotInSet(f"{chi!r} is not in the degree set")
    return [(chi, k) for k in range(section_dim(D, chi))]


@dataclass(frozen=True)
class NormalizationLog:
    """Bookkeeping of ``normalize_for_versal``.

    ``moebius`` maps the user's coordinate to the internal one (identity when
    infinity was not essential); ``shifts`` lists the lattice translations
    applied at each (internal) finite point.
    """

    moebius: tuple[Fraction, Fraction, Fraction, Fraction]
    shifts: tuple[tuple[P1Point, Vec2], ...]
    added_infinity: bool
    infinity_shift: Vec2 = (0, 0)

    @property
    def inverse_moebius(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        a, b, c, d = self.moebius
        return (d, -b, -c, a)

    def to_user_chart(self, p: P1Point) -> P1Point:
        return moebius(p, self.inverse_moebius)


IDENTITY = (Fraction(1), Fraction(0), Fraction(0), Fraction(1))


def normalize_for_versal(D: PolyhedralDivisor) -> tuple[PolyhedralDivisor, NormalizationLog]:
    """Principal shifts putting every finite first vertex at the origin; infinity absorbs them."""
    require_proper(D)
    m = IDENTITY
    inf_poly = D.coefficient(INF)
    if inf_poly is not None and inf_poly.n_vertices >= 2:
        # move an unused finite point c to infinity: t -> 1 / (t - c)
        used = {p.t for p in D.points if p.t is not None}
        c = 0
        while Fraction(c) in used:
            c += 1
        m = (Fraction(0), Fraction(1), Fraction(1), Fraction(-c))
        D = D.relabel(m)
    added = D.coefficient(INF) is None
    if added:
        D = D.with_entry(INF, LatticePolyhedron.cone(D.sigma))
    entries = []
    shifts = []
    total_shift: Vec2 = (0, 0)
    for p, poly in D.sorted().entries:
        if p.is_infinity:
            continue
        v = poly.vertices[0]
        shifts.append((p, (-v[0], -v[1])))
        total_shift = add(total_shift, v)
        entries.append((p, poly.translate((-v[0], -v[1]))))
    inf_poly = D.coefficient(INF)
    assert inf_poly is not None
    entries.append((INF, inf_poly.translate(total_shift)))
    out = PolyhedralDivisor(D.sigma, tuple(entries))
    return out, NormalizationLog(m, tuple(shifts), added, total_shift)

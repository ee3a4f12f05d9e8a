"""Explicit equivariant deformation over an affine parameter space.

Each finite coefficient of the normalized divisor splits into primitive
polyhedra ``conv(0, u) + sigma``.  A summand occurring ``k`` times in total
gets the monic polynomial ``t^k + a_{k-1} t^{k-1} + ... + a_0``; its roots
place copies of the summand on the line, and the generators of the total
space algebra are recorded by exponent data only.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Optional, Sequence

from .divisor import (
    INF,
    DegreeSet,
    DivisorError,
    NormalizationLog,
    P1Point,
    PointClass,
    PolyhedralDivisor,
    classify_polyhedron,
    degree_set,
    is_proper,
    normalize_for_versal,
    require_proper,
    total_polytope,
)
from .lattice import Cone2, Vec2, cross
from .polyhedra import LatticePolyhedron, PrimitivePolyhedron, decompose_primitive, minkowski_sum_all
from .t1 import t1_dim


class VersalError(DivisorError):
    pass


class NonRationalRoots(VersalError):
    def __init__(self, factors: Sequence[str]):
        self.factors = list(factors)
        super().__init__("fiber has non-rational special points; irreducible factors: "
                         + ", ".join(self.factors))


@dataclass(frozen=True)
class PrimitiveSummand:
    xi: PrimitivePolyhedron
    per_point: tuple[tuple[P1Point, int], ...]

    @property
    def multiplicity(self) -> int:
        return sum(k for _, k in self.per_point)


@dataclass(frozen=True)
class Generator:
    """``P_lam * t0^k * t1^e1 * t2^e2``; ``P_lam`` is the product of the summand polynomials to ``factor_exponents``."""

    degree: Vec2
    t0_exponent: int
    factor_exponents: tuple[int, ...]
    t1_exponent: int
    t2_exponent: int


@dataclass(frozen=True)
class VersalFamily:
    sigma: Cone2
    summands: tuple[PrimitiveSummand, ...]
    delta_inf: LatticePolyhedron
    chi_basis: tuple[Vec2, Vec2]
    degrees: DegreeSet
    generators: tuple[Generator, ...]
    base_point: tuple[Fraction, ...]
    normalized: PolyhedralDivisor
    log: NormalizationLog

    @property
    def param_names(self) -> list[str]:
        return [f"a_{i + 1},{k}" for i, s in enumerate(self.summands) for k in range(s.multiplicity)]

    @property
    def dim_V(self) -> int:
        return sum(s.multiplicity for s in self.summands)

    def polynomial_coefficients(self, a: Sequence[Fraction]) -> list[list[Fraction]]:
        """Split a point of V into per-summand coefficient lists ``[a_0, ..., a_{k-1}]``."""
        if len(a) != self.dim_V:
            raise VersalError(f"expected {self.dim_V} coordinates, got {len(a)}")
        out, pos = [], 0
        for s in self.summands:
            out.append([Fraction(x) for x in a[pos:pos + s.multiplicity]])
            pos += s.multiplicity
        return out


def choose_chi_basis(sigma: Cone2) -> tuple[Vec2, Vec2]:
    """Smallest determinant-1 pair whose nonnegative span contains the dual of ``sigma``.

    Pairs are ranked by total absolute coordinate sum, then lexicographically.
    """
    d = sigma.dual()

    def ok(c1: Vec2, c2: Vec2) -> bool:
        # coordinates of a ray in the basis are (cross(r, c2), cross(c1, r))
        return all(cross(r, c2) >= 0 and cross(c1, r) >= 0 for r in d.rays)

    def search(bound: int) -> list[tuple[Vec2, Vec2]]:
        rng = range(-bound, bound + 1)
        found = []
        for c1 in product(rng, rng):
            if c1 == (0, 0):
                continue
            for c2 in product(rng, rng):
                if cross(c1, c2) == 1 and ok(c1, c2):
                    found.append((c1, c2))
        return found

    def size(p: tuple[Vec2, Vec2]) -> int:
        return sum(abs(x) for v in p for x in v)

    bound = 1
    while True:
        found = search(bound)
        if found:
            best = min(size(p) for p in found)
            # every pair of this size fits in the box of that radius
            found = search(max(bound, best))
            return min(found, key=lambda p: (size(p), p))
        bound += 1


def _expand_monic(roots: Sequence[tuple[Fraction, int]]) -> list[Fraction]:
    """Coefficients ``[c_0, ..., c_{k-1}]`` of ``prod (t - r)^m`` (leading 1 dropped)."""
    poly = [Fraction(1)]  # low to high
    for r, m in roots:
        for _ in range(m):
            nxt = [Fraction(0)] * (len(poly) + 1)
            for i, c in enumerate(poly):
                nxt[i + 1] += c
                nxt[i] -= r * c
            poly = nxt
    return poly[:-1]


def build_family(D: PolyhedralDivisor) -> VersalFamily:
    require_proper(D)
    N, log = normalize_for_versal(D)
    sigma = N.sigma
    per_edge: dict[Vec2, dict[P1Point, int]] = {}
    for p, poly in N.entries:
        if p.is_infinity:
            continue
        for xi in decompose_primitive(poly):
            per_edge.setdefault(xi.edge, {})
            per_edge[xi.edge][p] = per_edge[xi.edge].get(p, 0) + 1
    summands = tuple(
        PrimitiveSummand(PrimitivePolyhedron(u, sigma),
                         tuple(sorted(per_edge[u].items(), key=lambda e: e[0].sort_key())))
        for u in sorted(per_edge, key=lambda u: (-cross(sigma.dual().ray0, u), u)))
    delta_inf = N.coefficient(INF)
    assert delta_inf is not None
    chi1, chi2 = choose_chi_basis(sigma)
    degs = degree_set(N)
    total = total_polytope(N)
    gens = []
    for lam in degs:
        facs = tuple(-s.xi.eval(lam) for s in summands)
        assert all(f >= 0 for f in facs)
        assert delta_inf.eval(lam) + sum(s.multiplicity * s.xi.eval(lam) for s in summands) >= 0
        e1, e2 = cross(lam, chi2), cross(chi1, lam)
        for k in range(total.eval(lam) + 1):
            gens.append(Generator(lam, k, facs, e1, e2))
    base: list[Fraction] = []
    for s in summands:
        base.extend(_expand_monic([(p.t, m) for p, m in s.per_point]))  # type: ignore[misc]
    return VersalFamily(sigma, summands, delta_inf, (chi1, chi2), degs, tuple(gens),
                        tuple(base), N, log)


def _rational_roots(coeffs: Sequence[Fraction]) -> list[tuple[Fraction, int]]:
    """Roots with multiplicity of ``t^k + sum coeffs[i] t^i``; raises on irreducible nonlinear factors."""
    import sympy  # deferred: only fibers need factoring, and the import is slow

    t = sympy.Symbol("t")
    k = len(coeffs)
    expr = t ** k + sum(sympy.Rational(c.numerator, c.denominator) * t ** i
                        for i, c in enumerate(coeffs))
    _, factors = sympy.factor_list(sympy.Poly(expr, t, domain="QQ"))
    roots, bad = [], []
    for f, m in factors:
        if f.degree() == 1:
            a, b = f.all_coeffs()
            r = -sympy.Rational(b) / sympy.Rational(a)
            roots.append((Fraction(int(r.p), int(r.q)), int(m)))
        elif f.degree() > 1:
            bad.append(str(f.as_expr()) + (f"^{m}" if m > 1 else ""))
    if bad:
        raise NonRationalRoots(bad)
    return sorted(roots)


def specialize_fiber(F: VersalFamily, a: Sequence[Fraction]) -> PolyhedralDivisor:
    """The divisor of the fiber over a rational point of V."""
    at: dict[Fraction, list[LatticePolyhedron]] = {}
    bad: list[str] = []
    for s, coeffs in zip(F.summands, F.polynomial_coefficients(a)):
        try:
            roots = _rational_roots(coeffs)
        except NonRationalRoots as e:
            bad.extend(e.factors)
            continue
        for r, m in roots:
            at.setdefault(r, []).extend([s.xi.polyhedron] * m)
    if bad:
        raise NonRationalRoots(bad)
    entries = [(P1Point(r), minkowski_sum_all(F.sigma, polys)) for r, polys in sorted(at.items())]
    entries.append((INF, F.delta_inf))
    D = PolyhedralDivisor(F.sigma, tuple(entries))
    assert is_proper(D)
    return D


@dataclass(frozen=True)
class FamilyStats:
    dim_V: int
    n_generators: int
    t1: int

    @property
    def t1_lower_bound_check(self) -> bool:
        return self.dim_V >= self.t1


def family_stats(F: VersalFamily, D: Optional[PolyhedralDivisor] = None) -> FamilyStats:
    source = D if D is not None else F.normalized
    return FamilyStats(F.dim_V, len(F.generators), t1_dim(source).total)


def strip_trivial_finite(D: PolyhedralDivisor) -> PolyhedralDivisor:
    """Drop finite trivial entries (they carry no data and the fiber never lists them)."""
    return PolyhedralDivisor(D.sigma, tuple(
        (p, poly) for p, poly in D.entries
        if p.is_infinity or classify_polyhedron(poly) is not PointClass.TRIVIAL)).sorted()

"""Toric downgrade of a 3D cone along a character, and the toric T^1 along that character.

The graded pieces ``T^1_{-a chi0}`` are computed twice: from closed formulas on
the downgraded polyhedra, and from Altmann's complex of Hilbert basis subsets.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Optional, Sequence

from .cone3 import Cone3, ConeError, Vec3, dot3, hilbert_basis_3d
from .divisor import INF, ZERO, PolyhedralDivisor, require_proper, DivisorError
from .lattice import Cone2, primitive
from .linalg import det3, rank, unimodular_kernel_basis
from .polyhedra import LatticePolyhedron
from .t1 import t1_dim


class DowngradeError(ConeError):
    pass


class ChiInDualCone(DowngradeError):
    pass


class LatticeConditionViolated(DowngradeError):
    pass


class TooManyPoints(DivisorError):
    pass


class EdgeSign(Enum):
    POSITIVE = "positive"
    NEGATIVE = "negative"
    ORTHOGONAL = "orthogonal"


@dataclass(frozen=True)
class DowngradeInput:
    tau: Cone3
    chi0: Vec3


@dataclass(frozen=True)
class EdgeClassification:
    """Edge signs in the enumeration starting at a positive edge and ending at a nonpositive one."""

    rays: tuple[Vec3, ...]
    signs: tuple[EdgeSign, ...]

    @property
    def n_positive(self) -> int:
        return self.signs.count(EdgeSign.POSITIVE)

    @property
    def n_negative(self) -> int:
        return self.signs.count(EdgeSign.NEGATIVE)

    def edges(self, sign: EdgeSign) -> list[Vec3]:
        return [r for r, s in zip(self.rays, self.signs) if s is sign]


def _sign(v: int) -> EdgeSign:
    if v > 0:
        return EdgeSign.POSITIVE
    if v < 0:
        return EdgeSign.NEGATIVE
    return EdgeSign.ORTHOGONAL


def _is_cyclic_arc(flags: Sequence[bool]) -> bool:
    k = len(flags)
    starts = sum(1 for i in range(k) if flags[i] and not flags[i - 1])
    return starts <= 1


def validate(inp: DowngradeInput) -> EdgeClassification:
    chi0 = inp.chi0
    if primitive(chi0)[1] != 1:
        raise DowngradeError(f"chi0 = {chi0!r} is not primitive")
    vals = [dot3(chi0, r) for r in inp.tau.rays]
    if all(v >= 0 for v in vals) or all(v <= 0 for v in vals):
        raise ChiInDualCone(
            f"chi0 or -chi0 lies in the dual cone (values {vals}); the quotient is not P^1")
    bad = [r for r, v in zip(inp.tau.rays, vals) if abs(v) >= 2]
    if bad:
        raise LatticeConditionViolated(
            f"edges {bad!r} meet the planes chi0 = +-1 outside the lattice")
    k = len(vals)
    # rotate so that the first edge is positive and the last nonpositive
    s = next(i for i in range(k) if vals[i] > 0 and vals[i - 1] <= 0)
    rays = inp.tau.rays[s:] + inp.tau.rays[:s]
    signs = tuple(_sign(dot3(chi0, r)) for r in rays)
    assert _is_cyclic_arc([x is EdgeSign.POSITIVE for x in signs])
    assert _is_cyclic_arc([x is EdgeSign.NEGATIVE for x in signs])
    return EdgeClassification(rays, signs)


@dataclass(frozen=True)
class DowngradeResult:
    sigma: Cone2
    divisor: PolyhedralDivisor
    basis: tuple[Vec3, Vec3, Vec3]
    """Columns ``(f1, f2, g)``: ``f1, f2`` span ``ker chi0``, ``g`` spans the complement, ``chi0(g) = 1``."""

    classification: EdgeClassification

    @property
    def delta0(self) -> LatticePolyhedron:
        p = self.divisor.coefficient(ZERO)
        assert p is not None
        return p

    @property
    def delta_inf(self) -> LatticePolyhedron:
        p = self.divisor.coefficient(INF)
        assert p is not None
        return p


def _coords(basis: Sequence[Vec3], x: Sequence[int]) -> tuple[int, int, int]:
    d = det3(*basis)
    out = []
    for j in range(3):
        cols = list(basis)
        cols[j] = tuple(x)  # type: ignore[assignment]
        num = det3(*cols)
        assert num % d == 0
        out.append(num // d)
    return tuple(out)  # type: ignore[return-value]


def default_basis(chi0: Vec3) -> tuple[Vec3, Vec3, Vec3]:
    cols = unimodular_kernel_basis(chi0)
    return tuple(tuple(c) for c in cols)  # type: ignore[return-value]


def downgrade(inp: DowngradeInput,
              basis: Optional[Sequence[Sequence[int]]] = None) -> DowngradeResult:
    """Polyhedral divisor on P^1 (entries at 0 and infinity) of the subtorus ``ker chi0``."""
    cls = validate(inp)
    chi0 = inp.chi0
    if basis is None:
        basis = default_basis(chi0)
    f1, f2, g = (tuple(map(int, b)) for b in basis)
    if abs(det3(f1, f2, g)) != 1 or dot3(chi0, f1) or dot3(chi0, f2) or dot3(chi0, g) != 1:
        raise DowngradeError("basis must be unimodular with f1, f2 in ker chi0 and chi0(g) = 1")
    B = (f1, f2, g)

    def proj(x: Sequence[int]) -> tuple[int, int]:
        c = _coords(B, x)
        return (c[0], c[1])

    # sigma = tau ∩ ker chi0: orthogonal edges and sign changes across facets
    rays = cls.rays
    k = len(rays)
    sig_rays = []
    for i in range(k):
        a, b = rays[i], rays[(i + 1) % k]
        va, vb = dot3(chi0, a), dot3(chi0, b)
        if va == 0:
            sig_rays.append(proj(a))
        elif va * vb < 0:
            w = tuple(va * y - vb * x for x, y in zip(a, b))
            if va < 0:
                w = tuple(-c for c in w)
            sig_rays.append(proj(w))
    assert len(sig_rays) == 2, sig_rays
    sigma = Cone2.from_rays(*sig_rays)
    d0 = LatticePolyhedron.from_vertices(sigma, [proj(r) for r in cls.edges(EdgeSign.POSITIVE)])
    dinf = LatticePolyhedron.from_vertices(sigma, [proj(r) for r in cls.edges(EdgeSign.NEGATIVE)])
    D = PolyhedralDivisor(sigma, ((ZERO, d0), (INF, dinf)))
    return DowngradeResult(sigma, D, B, cls)  # type: ignore[arg-type]


def upgrade(D: PolyhedralDivisor) -> DowngradeInput:
    """The 3D cone whose downgrade along ``(0, 0, 1)`` is ``D``."""
    require_proper(D)
    extra = [p for p in D.points if p not in (ZERO, INF)]
    if extra:
        raise TooManyPoints(f"only points 0 and inf are allowed, got {[str(p) for p in extra]}")
    d0 = D.coefficient(ZERO) or LatticePolyhedron.cone(D.sigma)
    dinf = D.coefficient(INF) or LatticePolyhedron.cone(D.sigma)
    gens = ([(v[0], v[1], 1) for v in d0.vertices]
            + [(v[0], v[1], -1) for v in dinf.vertices]
            + [(r[0], r[1], 0) for r in D.sigma.rays])
    return DowngradeInput(Cone3.from_generators(gens), (0, 0, 1))


STANDARD_BASIS: tuple[Vec3, Vec3, Vec3] = ((1, 0, 0), (0, 1, 0), (0, 0, 1))


@dataclass(frozen=True)
class GradedT1Line:
    """``a -> dim T^1_{-a chi0}`` for ``a != 0``; only nonzero values are stored."""

    dims: dict[int, int] = field(default_factory=dict)

    @property
    def total(self) -> int:
        return sum(self.dims.values())

    def __getitem__(self, a: int) -> int:
        return self.dims.get(a, 0)

    def support_bounds(self) -> tuple[int, int]:
        return (min(self.dims, default=0), max(self.dims, default=0))


def toric_t1_line_dims(inp: DowngradeInput,
                       basis: Optional[Sequence[Sequence[int]]] = None) -> GradedT1Line:
    """Closed formulas along the character line, read off the downgraded polyhedra."""
    res = downgrade(inp, basis)
    dims: dict[int, int] = {}
    for sign, poly, n_edges in ((1, res.delta0, res.classification.n_positive),
                                (-1, res.delta_inf, res.classification.n_negative)):
        lengths = poly.edge_lengths
        first = 0 if n_edges == 1 else n_edges - 2
        if first:
            dims[sign] = first
        for a in range(2, max(lengths, default=0) + 1):
            n = sum(1 for ell in lengths if ell >= a)
            if n:
                dims[sign * a] = n
    return GradedT1Line(dims)


def _row_basis(vectors: Sequence[Sequence[int]]) -> list[Sequence[int]]:
    """A maximal linearly independent subset, chosen greedily."""
    out: list[Sequence[int]] = []
    for v in vectors:
        if rank(out + [v]) > len(out):
            out.append(v)
    return out


def altmann_t1(tau: Cone3, chi: Sequence[int], bound: int = 10_000,
               hilbert_basis: Optional[Sequence[Vec3]] = None) -> int:
    """``dim T^1_{-chi}`` of the toric variety of ``tau`` via the Hilbert basis complex.

    ``hilbert_basis`` of the dual cone may be passed in to share it across degrees.
    """
    hb = list(hilbert_basis) if hilbert_basis is not None else hilbert_basis_3d(tau.dual(), bound)
    k = len(tau.rays)
    lam_edge = [[h for h in hb if dot3(h, r) < dot3(chi, r)] for r in tau.rays]
    lam_facet = [[h for h in lam_edge[i] if h in lam_edge[(i + 1) % k]] for i in range(k)]
    edge_bases = [_row_basis(L) for L in lam_edge]
    facet_bases = [_row_basis(L) for L in lam_facet]
    dim_1 = sum(len(b) for b in edge_bases)
    # d1 sums the edge spans into the span at the apex
    rank_d1 = rank([v for b in edge_bases for v in b]) if dim_1 else 0
    # d2 sends facet i to (edge i+1) - (edge i); computed in ambient coordinates
    rows = []
    for i, b in enumerate(facet_bases):
        for w in b:
            row = [0] * (3 * k)
            j0, j1 = i, (i + 1) % k
            for c in range(3):
                row[3 * j1 + c] += w[c]
                row[3 * j0 + c] -= w[c]
            rows.append(row)
    rank_d2 = rank(rows) if rows else 0
    return dim_1 - rank_d1 - rank_d2


@dataclass(frozen=True)
class CrosscheckReport:
    divisor_formula: int
    toric_corollaries: int
    altmann_oracle: int
    line: dict[int, int]
    oracle_line: dict[int, int]

    @property
    def agree(self) -> bool:
        return (self.divisor_formula == self.toric_corollaries == self.altmann_oracle
                and self.line == self.oracle_line)


def crosscheck(D: PolyhedralDivisor, bound: int = 10_000) -> CrosscheckReport:
    """Compare the divisor formula with both toric computations on the upgraded cone."""
    inp = upgrade(D)
    line = toric_t1_line_dims(inp, STANDARD_BASIS)
    lo, hi = line.support_bounds()
    res = downgrade(inp, STANDARD_BASIS)
    # the oracle runs over the a priori support, not just where the formulas are nonzero
    reach0 = max([2, *res.delta0.edge_lengths])
    reach_inf = max([2, *res.delta_inf.edge_lengths])
    hb = hilbert_basis_3d(inp.tau.dual(), bound)
    oracle = {}
    for a in range(-reach_inf - 1, reach0 + 2):
        if a == 0:
            continue
        v = altmann_t1(inp.tau, tuple(a * c for c in inp.chi0), hilbert_basis=hb)
        if v:
            oracle[a] = v
    return CrosscheckReport(
        divisor_formula=t1_dim(D).total,
        toric_corollaries=line.total,
        altmann_oracle=sum(oracle.values()),
        line=dict(line.dims),
        oracle_line=oracle,
    )

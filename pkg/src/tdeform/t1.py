"""Dimension of the degree-zero part of T^1 from the divisor combinatorics."""

from __future__ import annotations

from dataclasses import dataclass

from .divisor import P1Point, PointClass, PolyhedralDivisor, classify_points, require_proper


@dataclass(frozen=True)
class PointContribution:
    point: P1Point
    edge_lengths: tuple[int, ...]

    @property
    def contribution(self) -> int:
        return sum(self.edge_lengths) - 1


@dataclass(frozen=True)
class T1Report:
    r_prime: int
    per_point: tuple[PointContribution, ...]

    @property
    def global_term(self) -> int:
        return max(0, self.r_prime - 3)

    @property
    def total(self) -> int:
        return self.global_term + sum(c.contribution for c in self.per_point)


def t1_dim(D: PolyhedralDivisor) -> T1Report:
    """``max(0, r' - 3)`` plus, per essential point, its finite boundary segment count minus one."""
    require_proper(D)
    contribs = []
    for (p, cls), poly in zip(classify_points(D), D.polyhedra()):
        if cls is PointClass.ESSENTIAL:
            contribs.append(PointContribution(p, tuple(poly.edge_lengths)))
    contribs.sort(key=lambda c: c.point.sort_key())
    return T1Report(len(contribs), tuple(contribs))

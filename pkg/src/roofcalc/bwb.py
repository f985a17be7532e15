"""Borel-Weil-Bott on G(k,n) and GL(n) dimension arithmetic.

For an irreducible bundle labelled (upper|lower), form the total sequence
s = (upper, lower) + rho with rho = (n-1, ..., 1, 0).  If s has a repeated
entry the bundle is acyclic; otherwise all cohomology sits in a single degree
equal to the number of inversions of s (the minimal transposition count that
sorts s strictly decreasing), and the group is the GL(n) representation of
highest weight sort_desc(s) - rho.

The sort here is to the strictly *decreasing* chamber: dominant total
sequences must land in degree zero with H^0 the space of sections, which
the trivial examples pin down.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Iterable

from .errors import RankError
from .weights import DoubleWeight, Weight, check_dominant

if TYPE_CHECKING:  # pragma: no cover
    from .bundles import BundleExpr


@dataclass(frozen=True)
class BottResult:
    """Outcome of the algorithm: acyclic, or one degree with one irrep."""

    acyclic: bool
    degree: int | None = None
    weight: Weight | None = None
    dimension: int | None = None

    @staticmethod
    def acyclic_result() -> "BottResult":
        return BottResult(acyclic=True)

    @staticmethod
    def cohomology(degree: int, weight: Weight, dimension: int) -> "BottResult":
        return BottResult(False, degree, weight, dimension)


def rho(n: int) -> Weight:
    return tuple(range(n - 1, -1, -1))


def _inversions(s: Iterable[int]) -> int:
    s = list(s)
    return sum(1 for i in range(len(s)) for j in range(i + 1, len(s)) if s[i] < s[j])


def bott(w: DoubleWeight) -> BottResult:
    """All cohomology of the irreducible homogeneous bundle labelled by w."""
    n = w.n
    s = tuple(a + b for a, b in zip(w.concat(), rho(n)))
    if len(set(s)) < n:
        return BottResult.acyclic_result()
    degree = _inversions(s)
    weight = tuple(a - b for a, b in zip(sorted(s, reverse=True), rho(n)))
    return BottResult.cohomology(degree, weight, gl_dimension(weight))


def gl_dimension(mu: Weight) -> int:
    """Weyl dimension formula: prod_{i<j} (mu_i - mu_j + j - i)/(j - i), exact."""
    mu = check_dominant(mu)
    n = len(mu)
    num = 1
    den = 1
    for i in range(n):
        for j in range(i + 1, n):
            num *= mu[i] - mu[j] + j - i
            den *= j - i
    q, r = divmod(num, den)
    assert r == 0
    return q


class CohomologyTable:
    """Per-degree multisets of GL(n) highest weights with multiplicities."""

    def __init__(self, n: int):
        self.n = n
        self.by_degree: dict[int, dict[Weight, int]] = {}

    def add(self, degree: int, weight: Weight, mult: int) -> None:
        row = self.by_degree.setdefault(degree, {})
        row[weight] = row.get(weight, 0) + mult

    def degrees(self) -> list[int]:
        return sorted(self.by_degree)

    def dimension(self, degree: int) -> int:
        row = self.by_degree.get(degree, {})
        return sum(m * gl_dimension(w) for w, m in row.items())

    def total_dimensions(self) -> dict[int, int]:
        return {d: self.dimension(d) for d in self.degrees()}

    def euler_characteristic(self) -> int:
        return sum((-1) ** d * self.dimension(d) for d in self.degrees())

    def __eq__(self, other) -> bool:
        return isinstance(other, CohomologyTable) and self.by_degree == other.by_degree


def bundle_cohomology(expr: "BundleExpr") -> CohomologyTable:
    """Evaluate every irreducible summand of a decomposed bundle expression."""
    table = CohomologyTable(expr.n)
    for w, mult in expr.terms:
        res = bott(w)
        if not res.acyclic:
            table.add(res.degree, res.weight, mult)
    return table


def euler_characteristic(expr: "BundleExpr") -> int:
    """Alternating-sign sum of cohomology dimensions, always exact."""
    chi = 0
    for w, mult in expr.terms:
        res = bott(w)
        if not res.acyclic:
            chi += mult * (-1) ** res.degree * res.dimension
    return chi


def serre_dual_weight(w: DoubleWeight) -> DoubleWeight:
    """Label of dual(E) (x) omega with omega = O(-n), for duality checks."""
    from .weights import negate_reverse

    k, n = w.ambient
    up = tuple(e - n for e in negate_reverse(w.upper))
    lo = negate_reverse(w.lower)
    if not (all(a >= b for a, b in zip(up, up[1:])) and all(a >= b for a, b in zip(lo, lo[1:]))):
        raise RankError("dual blocks lost dominance; invalid input")
    return DoubleWeight(up, lo)

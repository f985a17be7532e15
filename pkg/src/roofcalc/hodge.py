"""Hodge diamonds of smooth zero loci of homogeneous bundles on G(k,n).

For X = Z(s) with s a general section of a globally generated, completely
reducible bundle F of rank r, h^{p,q}(X) = h^q(X, Omega^p_X) is computed by
the two-stage chase:

  1. every term (Sym^{p-t} F* (x) Omega^t_G)|_X of the exterior power of the
     conormal sequence is resolved by the Koszul complex of wedge powers of
     F*; the hypercohomology spectral sequence is solved antidiagonal-wise
     (differentials raise total degree by one and vanish outside [0, dim X]);
  2. the conormal complex itself is split into short exact sequences and the
     long exact sequences are chased.

All unknown connecting ranks stay symbolic in one linear system per column,
so forced cancellations propagate exactly; afterwards Hodge symmetry, Serre
duality, ample-class positivity and the exact column Euler sums are iterated
to a fixpoint over the whole table (all theorems for a nonempty smooth
projective variety; they pin down the columns above the middle that
dimension bookkeeping alone leaves open).  Entries that still cannot be
forced are reported as intervals and flagged inexact; no rank is guessed.
Euler characteristics of columns are alternating sums, hence always exact.

Smoothness and generality of the section are recorded assumptions, not
verified.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from . import bundles
from .bundles import BundleExpr
from .bwb import bott, euler_characteristic
from .chase import Form, LinearSystem, les_chain, spectral_flow
from .errors import (
    AmbiguityError,
    InjectivityViolationError,
    RankError,
)


def worker_count() -> int:
    env = os.environ.get("ROOFCALC_THREADS", "")
    if env.strip():
        return max(1, int(env))
    return os.cpu_count() or 1


def parallel_map(fn, items: list) -> list:
    """Order-preserving map over a thread pool; falls back to serial."""
    workers = worker_count()
    if workers <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


class HodgeDiamond:
    """Matrix of h^{p,q} with per-entry exactness and exact Euler columns."""

    def __init__(self, dim: int, meta: dict | None = None):
        self.dim = dim
        self.entries: dict[tuple[int, int], tuple[int, int]] = {}
        self.euler_columns: dict[int, int] = {}
        self.meta = dict(meta or {})

    def set_entry(self, p: int, q: int, lo: int, hi: int | None = None) -> None:
        hi = lo if hi is None else hi
        if lo == hi == 0:
            self.entries.pop((p, q), None)
        else:
            self.entries[(p, q)] = (lo, hi)

    def interval(self, p: int, q: int) -> tuple[int, int]:
        return self.entries.get((p, q), (0, 0))

    def is_exact(self, p: int, q: int) -> bool:
        lo, hi = self.interval(p, q)
        return lo == hi

    def h(self, p: int, q: int) -> int:
        lo, hi = self.interval(p, q)
        if lo != hi:
            raise AmbiguityError(f"h^{{{p},{q}}} only known in [{lo},{hi}]")
        return lo

    def fully_exact(self) -> bool:
        return all(lo == hi for lo, hi in self.entries.values())

    def middle_row(self) -> list[int]:
        d = self.dim
        return [self.h(p, d - p) for p in range(d + 1)]

    def middle_row_exact(self) -> bool:
        return all(self.is_exact(p, self.dim - p) for p in range(self.dim + 1))

    def diagonal(self) -> list[int]:
        return [self.h(p, p) for p in range(self.dim + 1)]

    def euler_characteristic(self) -> int:
        return sum((-1) ** p * chi for p, chi in self.euler_columns.items())

    def matrix(self) -> list[list[int]]:
        return [[self.h(p, q) for q in range(self.dim + 1)] for p in range(self.dim + 1)]

    def check_symmetries(self) -> None:
        """Hodge symmetry and Serre duality on all exact entries."""
        d = self.dim
        for p in range(d + 1):
            for q in range(d + 1):
                if self.is_exact(p, q) and self.is_exact(q, p):
                    if self.h(p, q) != self.h(q, p):
                        raise ArithmeticError(
                            f"Hodge symmetry fails at ({p},{q}): "
                            f"{self.h(p, q)} != {self.h(q, p)}"
                        )
                if self.is_exact(p, q) and self.is_exact(d - p, d - q):
                    if self.h(p, q) != self.h(d - p, d - q):
                        raise ArithmeticError(
                            f"Serre symmetry fails at ({p},{q}): "
                            f"{self.h(p, q)} != {self.h(d - p, d - q)}"
                        )

    def check_euler_columns(self) -> None:
        """The alternating sum of each column must be able to reach its chi."""
        for p, chi in self.euler_columns.items():
            lo = hi = 0
            for q in range(self.dim + 1):
                a, b = self.interval(p, q)
                if q % 2 == 0:
                    lo, hi = lo + a, hi + b
                else:
                    lo, hi = lo - b, hi - a
            if not (lo <= chi <= hi):
                raise ArithmeticError(
                    f"Euler column {p}: chi={chi} outside chase range [{lo},{hi}]"
                )

    def render(self) -> str:
        """Diamond layout: row r holds h^{p,q} with p+q = r, p decreasing."""
        d = self.dim
        rows = []
        for r in range(2 * d + 1):
            row = []
            for p in range(min(r, d), max(0, r - d) - 1, -1):
                lo, hi = self.interval(p, r - p)
                row.append(str(lo) if lo == hi else f"[{lo}..{hi}]")
            rows.append(row)
        width = max(len(c) for row in rows for c in row) + 1
        lines = []
        for row in rows:
            pad = " " * ((2 * d + 1 - len(row)) * width // 2)
            lines.append((pad + "".join(c.center(width) for c in row)).rstrip())
        return "\n".join(lines)

    def to_json_dict(self) -> dict:
        d = self.dim
        h = []
        exact = []
        for p in range(d + 1):
            hrow = []
            erow = []
            for q in range(d + 1):
                lo, hi = self.interval(p, q)
                hrow.append(str(lo) if lo == hi else {"lo": str(lo), "hi": str(hi)})
                erow.append(lo == hi)
            h.append(hrow)
            exact.append(erow)
        return {
            "dim": d,
            "h": h,
            "exact": exact,
            "eulerColumns": {str(p): str(v) for p, v in sorted(self.euler_columns.items())},
            "meta": self.meta,
        }


@dataclass(frozen=True)
class ZeroLocusSpec:
    """Zero locus of a general section of a globally generated bundle."""

    k: int
    n: int
    bundle: BundleExpr

    def __post_init__(self):
        if self.bundle.ambient != (self.k, self.n):
            raise RankError(
                f"bundle on G{self.bundle.ambient}, spec says G({self.k},{self.n})"
            )
        if not bundles.is_globally_generated(self.bundle):
            raise RankError(f"{self.bundle} is not globally generated")
        if self.dim < 0:
            raise RankError(
                f"rank {bundles.rank(self.bundle)} exceeds dim G = {self.ambient_dim}"
            )

    @property
    def ambient_dim(self) -> int:
        return self.k * (self.n - self.k)

    @property
    def dim(self) -> int:
        return self.ambient_dim - bundles.rank(self.bundle)


def _count_box_partitions(p: int, rows: int, cap: int) -> int:
    from .bundles import _box_partitions

    return sum(1 for _ in _box_partitions(p, rows, cap))


def ambient_diamond(k: int, n: int) -> HodgeDiamond:
    """Diamond of G(k,n): h^{p,p} counts partitions of p in the k x (n-k) box."""
    if not (1 <= k < n):
        raise RankError(f"need 1 <= k < n, got ({k},{n})")
    d = k * (n - k)
    out = HodgeDiamond(d, meta={"variety": f"G({k},{n})"})
    for p in range(d + 1):
        c = _count_box_partitions(p, k, n - k)
        out.set_entry(p, p, c)
        out.euler_columns[p] = (-1) ** p * c
    return out


class _Pipeline:
    """One zero-locus computation: term expansion plus the linear chase."""

    def __init__(self, spec: ZeroLocusSpec):
        self.spec = spec
        self.k, self.n = spec.k, spec.n
        self.dim_g = spec.ambient_dim
        self.dim_x = spec.dim
        self.f_dual = bundles.dual(spec.bundle)
        self.r = bundles.rank(spec.bundle)
        self.wedges = [bundles.wedge_power(self.f_dual, s) for s in range(self.r + 1)]

    def conormal_term(self, j: int, t: int) -> BundleExpr:
        sym = bundles.sym_power(self.f_dual, j - t)
        return bundles.tensor(sym, bundles.cotangent_power(self.k, self.n, t))

    def koszul_data(self, j: int, t: int) -> tuple[dict[int, int], int]:
        """Antidiagonal totals and chi of the Koszul resolution of
        (Sym^{j-t}F* (x) Omega^t_G)|_X."""
        base = self.conormal_term(j, t)
        totals: dict[int, int] = {}
        chi = 0
        for s, wedge in enumerate(self.wedges):
            term = bundles.tensor(wedge, base)
            for w, mult in term.terms:
                res = bott(w)
                if not res.acyclic:
                    m = res.degree - s
                    totals[m] = totals.get(m, 0) + mult * res.dimension
                    chi += (-1) ** s * mult * (-1) ** res.degree * res.dimension
        return totals, chi

    def restricted_forms(
        self, system: LinearSystem, totals: dict[int, int]
    ) -> list[Form]:
        flow = spectral_flow(system, totals, low=0, high=self.dim_x)
        return [flow.get(q, Form.of(0)) for q in range(self.dim_x + 1)]

    def column_forms(
        self, system: LinearSystem, per_t: list[tuple[dict[int, int], int]]
    ) -> tuple[list[Form], int]:
        vectors = [self.restricted_forms(system, totals) for totals, _ in per_t]
        j = len(per_t) - 1
        chi = sum((-1) ** (j - t) * c for t, (_, c) in enumerate(per_t))
        if j == 0:
            return vectors[0], chi
        forms = les_chain(system, vectors[0], vectors[1:], top=self.dim_x)
        return forms, chi


def _intersect(a: tuple[int, int], b: tuple[int, int], where: str) -> tuple[int, int]:
    lo, hi = max(a[0], b[0]), min(a[1], b[1])
    if lo > hi:
        raise ArithmeticError(f"inconsistent Hodge data at {where}: {a} vs {b}")
    return lo, hi


def _symmetrise(grid: list[list[tuple[int, int]]], chis: list[int]) -> None:
    """Interval fixpoint over the diamond: Hodge symmetry h^{p,q} = h^{q,p},
    Serre duality h^{p,q} = h^{d-p,d-q}, ample-class positivity h^{p,p} >= 1,
    and the exact column Euler sums.  All are theorems for a nonempty smooth
    projective variety; they pin down exactly the entries that dimension
    bookkeeping leaves open."""
    d = len(grid) - 1
    for _ in range(4 * (d + 2)):
        changed = False

        def refine(p: int, q: int, new: tuple[int, int]) -> None:
            nonlocal changed
            merged = _intersect(grid[p][q], new, f"h^{{{p},{q}}}")
            if merged != grid[p][q]:
                grid[p][q] = merged
                changed = True

        for p in range(d + 1):
            refine(p, p, (1, grid[p][p][1]))
        for p in range(d + 1):
            for q in range(d + 1):
                refine(p, q, grid[q][p])
                refine(p, q, grid[d - p][d - q])
        for p in range(d + 1):
            for q0 in range(d + 1):
                # (-1)^{q0} h_{p,q0} = chi_p - sum_{q != q0} (-1)^q h_{p,q}
                lo = hi = chis[p]
                for q in range(d + 1):
                    if q == q0:
                        continue
                    a, b = grid[p][q]
                    if q % 2 == 0:
                        lo, hi = lo - b, hi - a
                    else:
                        lo, hi = lo + a, hi + b
                bound = (lo, hi) if q0 % 2 == 0 else (-hi, -lo)
                refine(p, q0, (max(bound[0], 0), bound[1]))
        if not changed:
            return


def hodge_numbers(spec: ZeroLocusSpec) -> HodgeDiamond:
    """Full diamond of the zero locus.

    Entries are exact whenever the chase together with Hodge and Serre
    symmetry forces them; everything else is reported as an interval."""
    d = spec.dim
    meta = {
        "ambient": f"G({spec.k},{spec.n})",
        "bundle": str(spec.bundle),
        "assumes": "general section, smooth zero locus",
    }
    if d == 0:
        out = HodgeDiamond(0, meta=meta)
        npts = point_count(spec)
        out.set_entry(0, 0, npts)
        out.euler_columns[0] = npts
        return out

    pipeline = _Pipeline(spec)
    jt = [(j, t) for j in range(d + 1) for t in range(j + 1)]
    data = dict(zip(jt, parallel_map(lambda a: pipeline.koszul_data(*a), jt)))

    def solve_column(j: int) -> tuple[list[tuple[int, int]], int]:
        # one system per column keeps its rank correlations undiluted
        system = LinearSystem()
        forms, chi = pipeline.column_forms(system, [data[(j, t)] for t in range(j + 1)])
        system.propagate()
        row = []
        for f in forms:
            lo, hi = system.bounds(f)
            row.append((max(lo, 0), hi))
        return row, chi

    solved = parallel_map(solve_column, list(range(d + 1)))
    grid = [row for row, _ in solved]
    chis = [chi for _, chi in solved]
    _symmetrise(grid, chis)

    out = HodgeDiamond(d, meta=meta)
    for p in range(d + 1):
        for q in range(d + 1):
            lo, hi = grid[p][q]
            out.set_entry(p, q, lo, hi)
        out.euler_columns[p] = chis[p]
    out.check_euler_columns()
    out.check_symmetries()
    return out


def point_count(spec: ZeroLocusSpec) -> int:
    """Length of a zero-dimensional zero locus: chi(O_X) from the Koszul
    complex of wedge powers of the dual bundle."""
    if spec.dim != 0:
        raise RankError(f"point count needs dim 0, got {spec.dim}")
    f_dual = bundles.dual(spec.bundle)
    r = bundles.rank(spec.bundle)
    return sum(
        (-1) ** s * euler_characteristic(bundles.wedge_power(f_dual, s))
        for s in range(r + 1)
    )


def v_cohomology(y: HodgeDiamond, ambient: HodgeDiamond) -> list[int]:
    """Middle-row dimensions orthogonal to the ambient classes.

    Componentwise h^{p,q}(Y) - h^{p,q}(G) over p+q = dim Y (the ambient has
    no off-diagonal classes, so only a central diagonal entry can shift).
    """
    d = y.dim
    if not y.middle_row_exact():
        raise AmbiguityError("middle row of the zero locus diamond is not exact")
    out = []
    for p in range(d + 1):
        q = d - p
        ambient_part = ambient.h(p, q) if p == q else 0
        v = y.h(p, q) - ambient_part
        if v < 0:
            raise InjectivityViolationError(
                f"h^{{{p},{q}}}(Y)={y.h(p, q)} < ambient {ambient_part}"
            )
        out.append(v)
    return out


@dataclass(frozen=True)
class PairInvariants:
    k: int
    n: int
    d1: int
    d2: int
    canonical_twist_1: int
    canonical_twist_2: int
    cy: bool


def pair_invariants(k: int, n: int) -> PairInvariants:
    """Dimensions and canonical twists of the zero-locus pair on
    G(k,n) / G(k+1,n), by adjunction."""
    if not (1 <= k and n >= 2 * k + 1):
        raise RankError(f"pair needs n >= 2k+1, got (k,n)=({k},{n})")
    d1 = k * n - k * k - n + k
    d2 = k * n + n - k * k - 3 * k - 2
    return PairInvariants(
        k=k,
        n=n,
        d1=d1,
        d2=d2,
        canonical_twist_1=n - 2 * k - 1,
        canonical_twist_2=-(n - 2 * k - 1),
        cy=(n == 2 * k + 1),
    )


def pair_specs(k: int, n: int) -> tuple[ZeroLocusSpec, ZeroLocusSpec]:
    """The two zero loci cut out by the pushforwards of a (1,1) section:
    Z(Q*(2)) in G(k,n) and Z(U(2)) in G(k+1,n)."""
    y1 = ZeroLocusSpec(k, n, bundles.twist(bundles.quotient_dual(k, n), 2))
    y2 = ZeroLocusSpec(k + 1, n, bundles.twist(bundles.tautological(k + 1, n), 2))
    return y1, y2


@dataclass
class PairReport:
    k: int
    n: int
    invariants: PairInvariants
    diamond1: HodgeDiamond
    diamond2: HodgeDiamond
    v1: list[int] = field(default_factory=list)
    v2: list[int] = field(default_factory=list)
    shift: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


def check_pair_theorem(k: int, n: int) -> PairReport:
    """Verify numerically that the two middle v-rows agree after the index
    shift, that the co-level bound holds, and that off-middle rows are
    diagonal.  A verifier: failures are collected, not proved impossible."""
    inv = pair_invariants(k, n)
    spec1, spec2 = pair_specs(k, n)
    d1m, d2m = parallel_map(hodge_numbers, [spec1, spec2])
    report = PairReport(k=k, n=n, invariants=inv, diamond1=d1m, diamond2=d2m)
    fail = report.failures.append

    if (inv.d2 - inv.d1) % 2 != 0:
        fail(f"dimension gap d2-d1={inv.d2 - inv.d1} is odd; no index shift")
        return report
    s = (inv.d2 - inv.d1) // 2
    report.shift = s

    g1 = ambient_diamond(k, n)
    g2 = ambient_diamond(k + 1, n)
    try:
        report.v1 = v_cohomology(d1m, g1)
        report.v2 = v_cohomology(d2m, g2)
    except (AmbiguityError, InjectivityViolationError) as exc:
        fail(str(exc))
        return report

    for p in range(inv.d1 + 1):
        if report.v1[p] != report.v2[p + s]:
            fail(
                f"v-rows differ at p={p}: {report.v1[p]} != {report.v2[p + s]}"
            )
    for p in range(inv.d2 + 1):
        if (p < s or p > inv.d2 - s) and report.v2[p] != 0:
            fail(f"v-cohomology of Y2 nonzero at p={p} outside the shifted band")

    # co-level: middle row of Y2 vanishes below p = n-2k-1 and not at it
    colevel = n - 2 * k - 1
    for p in range(min(colevel, inv.d2 + 1)):
        if d2m.h(p, inv.d2 - p) != 0:
            fail(f"co-level violated: h^{{{p},{inv.d2 - p}}}(Y2) != 0")
    if colevel <= inv.d2 and d2m.h(colevel, inv.d2 - colevel) == 0:
        fail(f"h^{{{colevel},{inv.d2 - colevel}}}(Y2) = 0 at the co-level")

    for dm in (d1m, d2m):
        for (p, q), (lo, hi) in dm.entries.items():
            if p + q != dm.dim and p != q and (lo, hi) != (0, 0):
                fail(f"off-middle non-diagonal entry at ({p},{q}): {lo}..{hi}")
    return report

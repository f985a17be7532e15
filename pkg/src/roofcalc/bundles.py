"""Formal algebra of completely reducible homogeneous bundles on G(k,n).

An expression is a non-negative integer combination of irreducible summands
labelled by double weights.  Line bundles are folded into the upper block
(det of the dual subbundle is O(1)), and every term is normalised so that the
last entry of the lower block is zero; the two conventions
S_d Q* = S_{d-c}Q* (x) O(-c) then never produce duplicate keys.

Sym and wedge powers are only defined for twists of the five atoms
U, U*, Q, Q*, O(t) and direct sums of those; anything else raises
PlethysmRequiredError rather than silently computing a wrong plethysm.
"""

from __future__ import annotations

from dataclasses import dataclass
from .bwb import gl_dimension
from .errors import (
    AmbientMismatchError,
    PlethysmRequiredError,
    RankError,
)
from .lr import lr_double_product
from .weights import DoubleWeight, Weight, negate_reverse


def _normalise(w: DoubleWeight) -> DoubleWeight:
    """Shift so the lower block ends in 0 (fold the residual twist upward)."""
    c = w.lower[-1]
    return w.shift(-c) if c else w


@dataclass(frozen=True)
class BundleExpr:
    """Canonical-form sum of irreducible homogeneous bundles on one G(k,n)."""

    k: int
    n: int
    terms: tuple[tuple[DoubleWeight, int], ...]  # sorted, no dupes, mults >= 1

    def __post_init__(self):
        if not (1 <= self.k < self.n):
            raise RankError(f"need 1 <= k < n, got ({self.k},{self.n})")
        for w, m in self.terms:
            if w.ambient != (self.k, self.n):
                raise AmbientMismatchError(f"term {w} not on G({self.k},{self.n})")
            if m < 1:
                raise ValueError(f"multiplicity {m} < 1 for {w}")

    @property
    def ambient(self) -> tuple[int, int]:
        return (self.k, self.n)

    def is_zero(self) -> bool:
        return not self.terms

    def as_dict(self) -> dict[DoubleWeight, int]:
        return dict(self.terms)

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        return " + ".join(
            (f"{m}*{w}" if m > 1 else str(w)) for w, m in self.terms
        )


def _expr(k: int, n: int, terms: dict[DoubleWeight, int]) -> BundleExpr:
    merged: dict[DoubleWeight, int] = {}
    for w, m in terms.items():
        if m == 0:
            continue
        wn = _normalise(w)
        merged[wn] = merged.get(wn, 0) + m
    ordered = tuple(
        sorted(merged.items(), key=lambda t: (t[0].upper, t[0].lower), reverse=True)
    )
    return BundleExpr(k, n, ordered)


def zero(k: int, n: int) -> BundleExpr:
    return _expr(k, n, {})


def irreducible(k: int, n: int, upper: Weight, lower: Weight, mult: int = 1) -> BundleExpr:
    w = DoubleWeight(tuple(upper), tuple(lower))
    if w.ambient != (k, n):
        raise AmbientMismatchError(f"{w} does not live on G({k},{n})")
    return _expr(k, n, {w: mult})


def line(k: int, n: int, t: int) -> BundleExpr:
    """O(t), i.e. the t-th power of det of the dual subbundle."""
    return irreducible(k, n, (t,) * k, (0,) * (n - k))


def tautological_dual(k: int, n: int) -> BundleExpr:
    """U*, the dual rank-k subbundle."""
    return irreducible(k, n, (1,) + (0,) * (k - 1), (0,) * (n - k))


def tautological(k: int, n: int) -> BundleExpr:
    """U, the rank-k subbundle of the trivial bundle."""
    return irreducible(k, n, (0,) * (k - 1) + (-1,), (0,) * (n - k))


def quotient_dual(k: int, n: int) -> BundleExpr:
    """Q*, the dual rank-(n-k) quotient bundle."""
    return irreducible(k, n, (0,) * k, (1,) + (0,) * (n - k - 1))


def quotient(k: int, n: int) -> BundleExpr:
    """Q, the rank-(n-k) quotient bundle."""
    return irreducible(k, n, (0,) * k, (0,) * (n - k - 1) + (-1,))


def schur(k: int, n: int, block: str, lam: Weight) -> BundleExpr:
    """Schur functor of one of U, U*, Q, Q* (block in {U, UD, Q, QD}).

    lam is padded with zeros to the block rank; functors of the undualised
    bundles are rewritten on the dual by negate-and-reverse.
    """
    r = k if block in ("U", "UD") else n - k
    lam = tuple(lam)
    if len(lam) > r:
        raise RankError(f"label {lam} longer than block rank {r}")
    lam = lam + (0,) * (r - len(lam))
    if block in ("U", "Q"):
        lam = negate_reverse(lam)
    if block in ("U", "UD"):
        return irreducible(k, n, lam, (0,) * (n - k))
    return irreducible(k, n, (0,) * k, lam)


def direct_sum(*exprs: BundleExpr) -> BundleExpr:
    if not exprs:
        raise ValueError("empty direct sum")
    k, n = exprs[0].ambient
    out: dict[DoubleWeight, int] = {}
    for e in exprs:
        if e.ambient != (k, n):
            raise AmbientMismatchError("direct sum across different ambients")
        for w, m in e.terms:
            out[w] = out.get(w, 0) + m
    return _expr(k, n, out)


def tensor(a: BundleExpr, b: BundleExpr) -> BundleExpr:
    """Bilinear extension of the blockwise Littlewood-Richardson product."""
    if a.ambient != b.ambient:
        raise AmbientMismatchError(f"tensor across {a.ambient} and {b.ambient}")
    out: dict[DoubleWeight, int] = {}
    for wa, ma in a.terms:
        for wb, mb in b.terms:
            for w, c in lr_double_product(wa, wb).items():
                out[w] = out.get(w, 0) + ma * mb * c
    return _expr(a.k, a.n, out)


def twist(a: BundleExpr, t: int) -> BundleExpr:
    if t == 0:
        return a
    return tensor(a, line(a.k, a.n, t))


def dual(a: BundleExpr) -> BundleExpr:
    """Termwise dual: negate and reverse each block."""
    out = {
        DoubleWeight(negate_reverse(w.upper), negate_reverse(w.lower)): m
        for w, m in a.terms
    }
    return _expr(a.k, a.n, out)


# -- atoms and their Sym/wedge powers ---------------------------------------

_ATOM_RANKS = {"U": "k", "UD": "k", "Q": "q", "QD": "q", "O": "1"}


def _atom_of(w: DoubleWeight) -> tuple[str, int] | None:
    """Recognise a canonical-form term as a twisted atom: (kind, twist).

    In canonical form the lower block ends with 0, so Q(t) appears as
    ((t+1)^k | 1^{q-1},0).  On blocks of rank 2 the U/UD and Q/QD patterns
    coincide; either name denotes the same bundle and Sym/wedge agree.
    """
    k, n = w.ambient
    up, lo = w.upper, w.lower
    q = n - k
    if all(e == 0 for e in lo):
        t = up[0]
        if all(e == t for e in up):
            return ("O", t)
        if k >= 2 and up == (t,) + (t - 1,) * (k - 1):
            return ("UD", t - 1)
        if k >= 2 and up == (t,) * (k - 1) + (t - 1,):
            return ("U", t)
        return None
    if all(e == up[0] for e in up):
        t = up[0]
        if lo == (1,) + (0,) * (q - 1):
            return ("QD", t)
        if q >= 2 and lo == (1,) * (q - 1) + (0,):
            return ("Q", t - 1)
    return None


def _atom_rank(kind: str, k: int, n: int) -> int:
    if kind == "O":
        return 1
    return k if kind in ("U", "UD") else n - k


def _atom_sym(kind: str, t: int, m: int, k: int, n: int) -> DoubleWeight:
    """Sym^m of the atom `kind` twisted by O(t)."""
    lo0 = (0,) * (n - k)
    if kind == "O":
        return DoubleWeight((m * t,) * k, lo0)
    mt = m * t
    if kind == "UD":
        return DoubleWeight((mt + m,) + (mt,) * (k - 1), lo0)
    if kind == "U":
        return DoubleWeight((mt,) * (k - 1) + (mt - m,), lo0)
    if kind == "QD":
        return DoubleWeight((mt,) * k, (m,) + (0,) * (n - k - 1))
    if kind == "Q":
        return DoubleWeight((mt,) * k, (0,) * (n - k - 1) + (-m,))
    raise AssertionError(kind)


def _atom_wedge(kind: str, t: int, m: int, k: int, n: int) -> DoubleWeight | None:
    """wedge^m of the atom `kind` twisted by O(t); None when it vanishes."""
    r = _atom_rank(kind, k, n)
    if m > r:
        return None
    if m == 0:
        return DoubleWeight((0,) * k, (0,) * (n - k))
    lo0 = (0,) * (n - k)
    mt = m * t
    if kind == "O":
        return DoubleWeight((t,) * k, lo0)
    if kind == "UD":
        return DoubleWeight(tuple(mt + 1 if i < m else mt for i in range(k)), lo0)
    if kind == "U":
        return DoubleWeight(tuple(mt if i < k - m else mt - 1 for i in range(k)), lo0)
    if kind == "QD":
        return DoubleWeight((mt,) * k, tuple(1 if i < m else 0 for i in range(n - k)))
    if kind == "Q":
        return DoubleWeight(
            (mt,) * k, tuple(0 if i < n - k - m else -1 for i in range(n - k))
        )
    raise AssertionError(kind)


def _atom_list(a: BundleExpr) -> list[tuple[str, int]]:
    atoms: list[tuple[str, int]] = []
    for w, mult in a.terms:
        atom = _atom_of(w)
        if atom is None:
            raise PlethysmRequiredError(
                f"Sym/wedge powers need atoms or sums of atoms; {w} is neither"
            )
        atoms.extend([atom] * mult)
    return atoms


def _graded_power(a: BundleExpr, m: int, per_atom) -> BundleExpr:
    """Expand a power of a direct sum of atoms with the binomial rule."""
    if m < 0:
        raise RankError(f"power must be >= 0, got {m}")
    k, n = a.ambient
    if m == 0:
        return line(k, n, 0)
    atoms = _atom_list(a)
    if not atoms:
        return zero(k, n)

    def factor(atom: tuple[str, int], j: int) -> BundleExpr:
        w = per_atom(atom[0], atom[1], j, k, n)
        return zero(k, n) if w is None else _expr(k, n, {w: 1})

    def rec(i: int, budget: int) -> BundleExpr:
        if i == len(atoms) - 1:
            return factor(atoms[i], budget)
        out = zero(k, n)
        for j in range(budget + 1):
            head = factor(atoms[i], j)
            if head.is_zero():
                continue
            tail = rec(i + 1, budget - j)
            if tail.is_zero():
                continue
            out = direct_sum(out, tensor(head, tail))
        return out

    return rec(0, m)


def sym_power(a: BundleExpr, m: int) -> BundleExpr:
    """Sym^m of an atom twist or a direct sum of atom twists."""
    return _graded_power(a, m, _atom_sym)


def wedge_power(a: BundleExpr, m: int) -> BundleExpr:
    """wedge^m of an atom twist or a direct sum of atom twists."""
    return _graded_power(a, m, _atom_wedge)


def _conjugate(lam: tuple[int, ...]) -> tuple[int, ...]:
    if not lam or lam[0] == 0:
        return ()
    return tuple(sum(1 for e in lam if e > j) for j in range(lam[0]))


def _box_partitions(size: int, rows: int, cap: int):
    """Partitions of `size` with at most `rows` parts, each at most `cap`."""

    def rec(remaining: int, maxpart: int, acc: tuple[int, ...]):
        if remaining == 0:
            yield acc
            return
        if len(acc) == rows:
            return
        for p in range(min(maxpart, remaining), 0, -1):
            yield from rec(remaining - p, p, acc + (p,))

    yield from rec(size, cap, ())


def cotangent_power(k: int, n: int, t: int) -> BundleExpr:
    """wedge^t of the cotangent bundle of G(k,n), by the Cauchy formula.

    Omega^1 = U (x) Q*, so Omega^t is the sum of S_mu U (x) S_mu' Q* over
    partitions mu of t inside the k x (n-k) box.
    """
    if t < 0 or t > k * (n - k):
        return zero(k, n)
    out: dict[DoubleWeight, int] = {}
    for mu in _box_partitions(t, k, n - k):
        upper = negate_reverse(mu + (0,) * (k - len(mu)))
        conj = _conjugate(mu)
        lower = conj + (0,) * (n - k - len(conj))
        out[DoubleWeight(upper, lower)] = 1
    return _expr(k, n, out)


def rank(a: BundleExpr) -> int:
    """Exact rank: blockwise Weyl dimensions, summed with multiplicities."""
    return sum(
        m * gl_dimension(w.upper) * gl_dimension(w.lower) for w, m in a.terms
    )


def is_globally_generated(a: BundleExpr) -> bool:
    """Every irreducible summand has a fully ordered total sequence."""
    return all(w.is_fully_ordered() for w, _ in a.terms)

"""GL(r) weights, double weights on G(k,n), box sets, bar moving and duality.

A weight is a dense tuple of integers of fixed length (trailing zeros kept
explicit).  Weights labelling Schur functors must be non-increasing; negative
entries are allowed, so twists like O(2m + lambda_1) can be absorbed without a
separate normalisation step.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement
from math import comb

from .errors import DominanceError, NotGloballyGeneratedError, RankError

Weight = tuple[int, ...]


def is_dominant(entries: Weight) -> bool:
    """True when the sequence is non-increasing."""
    return all(a >= b for a, b in zip(entries, entries[1:]))


def check_dominant(entries: Weight, what: str = "weight") -> Weight:
    entries = tuple(int(e) for e in entries)
    if len(entries) < 1:
        raise RankError(f"{what} must have length >= 1")
    if not is_dominant(entries):
        raise DominanceError(f"{what} {entries} is not non-increasing")
    return entries


def negate_reverse(entries: Weight) -> Weight:
    """Dual weight (-a_r, ..., -a_1); non-increasing iff the input is."""
    return tuple(-e for e in reversed(entries))


@dataclass(frozen=True)
class DoubleWeight:
    """Label (upper|lower) of an irreducible homogeneous bundle on G(k,n).

    The upper block (length k) labels the Schur functor applied to the dual
    tautological subbundle, the lower block (length n-k) the one applied to
    the dual quotient bundle.  Both blocks are non-increasing.
    """

    upper: Weight
    lower: Weight

    def __post_init__(self):
        object.__setattr__(self, "upper", check_dominant(self.upper, "upper block"))
        object.__setattr__(self, "lower", check_dominant(self.lower, "lower block"))

    @property
    def k(self) -> int:
        return len(self.upper)

    @property
    def n(self) -> int:
        return len(self.upper) + len(self.lower)

    @property
    def ambient(self) -> tuple[int, int]:
        return (self.k, self.n)

    def concat(self) -> Weight:
        return self.upper + self.lower

    def is_fully_ordered(self) -> bool:
        """True when the total sequence (upper, lower) is non-increasing."""
        return is_dominant(self.concat())

    def shift(self, c: int) -> "DoubleWeight":
        """Add c to every entry of both blocks (same bundle up to a twist of
        the equivariant structure; cohomology dimensions are unchanged)."""
        return DoubleWeight(
            tuple(e + c for e in self.upper), tuple(e + c for e in self.lower)
        )

    def __str__(self) -> str:
        up = ",".join(str(e) for e in self.upper)
        lo = ",".join(str(e) for e in self.lower)
        return f"({up}|{lo})"


@dataclass(frozen=True)
class BoxSet:
    """All weights of length `rows` with entries in [0, cap], cap at the top."""

    rows: int
    cap: int
    members: tuple[Weight, ...]

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, w: Weight) -> bool:
        return tuple(w) in self.members


def enumerate_box(a: int, b: int) -> BoxSet:
    """Non-increasing weights of length a with entries in [0, b].

    Sorted lexicographically descending; the count is C(a+b, b).
    """
    if a < 1:
        raise RankError(f"box needs at least one row, got a={a}")
    if b < 0:
        raise RankError(f"box cap must be >= 0, got b={b}")
    members = tuple(combinations_with_replacement(range(b, -1, -1), a))
    assert len(members) == comb(a + b, b)
    return BoxSet(rows=a, cap=b, members=members)


def bar_move(w: DoubleWeight) -> DoubleWeight:
    """Move the top entry of the lower block across the bar.

    (l_1,...,l_k | d_1,...,d_{n-k}) becomes (l_1,...,l_k,d_1 | d_2,...,d_{n-k})
    on G(k+1, n).  Defined exactly when the total sequence is non-increasing
    (the globally generated case); preserves all cohomology since the total
    sequence is unchanged.
    """
    if w.k >= w.n - 1:
        raise RankError(f"bar move needs k < n-1, got (k,n)={w.ambient}")
    if not w.is_fully_ordered():
        raise NotGloballyGeneratedError(
            f"{w} is not fully ordered; bar moving is undefined"
        )
    return DoubleWeight(w.upper + (w.lower[0],), w.lower[1:])


def dual_schur_q(lam: Weight) -> tuple[Weight, int]:
    """Dual of a Schur functor of the quotient bundle, as (weight, twist).

    The dual of the functor labelled by lam is the functor labelled by
    lam_bar = (lam_1 - lam_r, ..., lam_1 - lam_2, 0) twisted by O(lam_1).
    """
    lam = check_dominant(lam)
    top = lam[0]
    bar = tuple(top - e for e in reversed(lam[1:])) + (0,)
    return bar, top


def render_diagram(w: DoubleWeight) -> str:
    """ASCII double Young diagram: two stacked box blocks separated by a bar.

    Weights with a negative entry have no diagram; the numeric form is
    returned instead.
    """
    if any(e < 0 for e in w.concat()):
        return str(w)
    width = max(max(w.upper, default=0), max(w.lower, default=0), 1)

    def block(rows: Weight) -> list[str]:
        out = [("[]" * r) for r in rows if r > 0]
        return out if out else ["(empty)"]

    bar = "-" * (2 * width)
    return "\n".join(block(w.upper) + [bar] + block(w.lower))

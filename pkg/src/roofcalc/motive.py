"""Hodge-Deligne E-polynomial arithmetic and Grothendieck-ring checks.

Classes of smooth projective varieties are represented by their
E-polynomials E(u,v) = sum (-1)^{p+q} h^{p,q} u^p v^q, the shadow that the
numeric identities actually consume; the affine line maps to the monomial uv.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .errors import AmbiguityError, ExcludedCaseError, RankError
from .hodge import HodgeDiamond


@dataclass(frozen=True)
class EPoly:
    """Finitely supported integer coefficients in two variables u, v."""

    coeffs: tuple[tuple[tuple[int, int], int], ...]

    @staticmethod
    def from_dict(d: dict[tuple[int, int], int]) -> "EPoly":
        return EPoly(tuple(sorted((pq, c) for pq, c in d.items() if c)))

    def as_dict(self) -> dict[tuple[int, int], int]:
        return dict(self.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "EPoly") -> "EPoly":
        out = self.as_dict()
        for pq, c in other.coeffs:
            out[pq] = out.get(pq, 0) + c
        return EPoly.from_dict(out)

    def __sub__(self, other: "EPoly") -> "EPoly":
        return self + other.scale(-1)

    def scale(self, c: int) -> "EPoly":
        return EPoly.from_dict({pq: c * v for pq, v in self.coeffs})

    def __mul__(self, other: "EPoly") -> "EPoly":
        out: dict[tuple[int, int], int] = {}
        for (p1, q1), c1 in self.coeffs:
            for (p2, q2), c2 in other.coeffs:
                key = (p1 + p2, q1 + q2)
                out[key] = out.get(key, 0) + c1 * c2
        return EPoly.from_dict(out)

    def evaluate_one(self) -> int:
        """E(1,1), the topological Euler characteristic."""
        return sum(c for _, c in self.coeffs)

    def uv_swap(self) -> "EPoly":
        return EPoly.from_dict({(q, p): c for (p, q), c in self.coeffs})

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for (p, q), c in self.coeffs:
            mono = f"u^{p}v^{q}" if (p, q) != (0, 0) else "1"
            parts.append(f"{c}*{mono}")
        return " + ".join(parts)


def lefschetz_power(k: int) -> EPoly:
    """[L]^k, i.e. (uv)^k."""
    return EPoly.from_dict({(k, k): 1})


def gaussian_binomial_coeffs(n: int, k: int) -> list[int]:
    """Coefficients of the Gaussian binomial [n choose k]_q via the
    q-Pascal recursion; coefficient i counts partitions of i in k x (n-k)."""
    if not 0 <= k <= n:
        raise RankError(f"Gaussian binomial needs 0 <= k <= n, got ({n},{k})")
    table: dict[tuple[int, int], list[int]] = {}

    def gb(nn: int, kk: int) -> list[int]:
        if kk == 0 or kk == nn:
            return [1]
        if (nn, kk) in table:
            return table[(nn, kk)]
        a = gb(nn - 1, kk - 1)
        b = gb(nn - 1, kk)  # times q^k
        size = kk * (nn - kk) + 1
        out = [0] * size
        for i, c in enumerate(a):
            out[i] += c
        for i, c in enumerate(b):
            out[i + kk] += c
        table[(nn, kk)] = out
        return out

    result = gb(n, k)
    assert sum(result) == comb(n, k)
    return result


def epoly_grassmannian(k: int, n: int) -> EPoly:
    """E(G(k,n)): diagonal with Gaussian binomial coefficients."""
    coeffs = gaussian_binomial_coeffs(n, k)
    return EPoly.from_dict({(i, i): c for i, c in enumerate(coeffs)})


def epoly_projective(m: int) -> EPoly:
    """E(P^m) = 1 + uv + ... + (uv)^m; E(P^{-1}) = 0 for the empty space."""
    if m < -1:
        raise RankError(f"projective space needs m >= -1, got {m}")
    return EPoly.from_dict({(i, i): 1 for i in range(m + 1)})


def epoly_flag(k: int, n: int) -> EPoly:
    """E(F(k,k+1,n)) via the projective bundle structure over G(k+1,n)."""
    if not (1 <= k and k + 1 < n):
        raise RankError(f"flag F(k,k+1,n) needs 1 <= k < k+1 < n, got ({k},{n})")
    return epoly_grassmannian(k + 1, n) * epoly_projective(k)


def epoly_of_diamond(d: HodgeDiamond) -> EPoly:
    """E-polynomial of a smooth projective variety from its exact diamond."""
    if not d.fully_exact():
        raise AmbiguityError("diamond has inexact entries; no E-polynomial")
    out: dict[tuple[int, int], int] = {}
    for (p, q), (lo, _) in d.entries.items():
        out[(p, q)] = out.get((p, q), 0) + (-1) ** (p + q) * lo
    return EPoly.from_dict(out)


def verify_lemma_leq(
    k: int, n: int, y1: HodgeDiamond, y2: HodgeDiamond
) -> tuple[bool, EPoly]:
    """Check the stratified-projective-bundle identity

        (uv)^k E(Y2) - (uv)^{n-k-1} E(Y1)
            + E(G(k+1,n)) E(P^{k-1}) - E(G(k,n)) E(P^{n-k-2}) = 0.

    Returns (holds, residual)."""
    residual = (
        lefschetz_power(k) * epoly_of_diamond(y2)
        - lefschetz_power(n - k - 1) * epoly_of_diamond(y1)
        + epoly_grassmannian(k + 1, n) * epoly_projective(k - 1)
        - epoly_grassmannian(k, n) * epoly_projective(n - k - 2)
    )
    return residual.is_zero(), residual


def betti_even(poly: EPoly, i: int) -> int:
    """b_{2i} read off a diagonal E-polynomial."""
    return poly.as_dict().get((i, i), 0)


def derive_b2(k: int, n: int) -> int:
    """Second Betti number of Y2 from the degree-(k+1) part of the
    projective-bundle identity:

        b_2(Y_2) = b_{2(k+1)}(F(k,k+1,n)) - sum_{i=2}^{k+1} b_{2i}(G(k+1,n)).

    Valid when dim Y2 = (k+1)(n-k-2) > 2; the excluded surface case raises.
    """
    if not (1 <= k and k + 1 < n):
        raise RankError(f"need 1 <= k < k+1 < n, got ({k},{n})")
    if (k + 1) * (n - k - 2) <= 2:
        raise ExcludedCaseError(
            f"(k+1)(n-k-2) = {(k + 1) * (n - k - 2)} <= 2: "
            f"Y2 is at most a surface, the Lefschetz argument does not apply"
        )
    flag = epoly_flag(k, n)
    grass = epoly_grassmannian(k + 1, n)
    gamma = betti_even(flag, k + 1)
    return gamma - sum(betti_even(grass, i) for i in range(2, k + 2))

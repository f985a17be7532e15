"""Marked Dynkin diagrams and the classification of homogeneous roofs.

A rational homogeneous variety of Picard rank two is a diagram with two
marked nodes; its two contractions have fibers given by erasing one marked
node and keeping the component of the other.  The variety is a roof of
projective bundles exactly when both fibers are projective spaces, which at
the diagram level means each contraction lands in one of two patterns: a
type A chain with an end node marked, or a type C chain with the end node of
the single-edge chain marked.

Bourbaki numbering throughout.  Double edges carry their arrow (head = the
short root); erased subdiagrams keep it, which is what separates the B- and
C-type rank-2 contractions.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import MalformedContractionError, RankError


@dataclass(frozen=True)
class MarkedDynkin:
    """Dynkin diagram (possibly a product of two type-A factors) with marks.

    edges: tuples (u, v, multiplicity, head) with u < v; head is the node the
    arrow points to (the short root) or None for a single bond.
    """

    label: str
    nodes: tuple[int, ...]
    edges: tuple[tuple[int, int, int, int | None], ...]
    marked: frozenset[int] = frozenset()

    def neighbours(self, u: int) -> list[int]:
        out = []
        for a, b, _, _ in self.edges:
            if a == u:
                out.append(b)
            elif b == u:
                out.append(a)
        return sorted(out)

    def with_marks(self, marks) -> "MarkedDynkin":
        marks = frozenset(marks)
        if not marks <= set(self.nodes):
            raise RankError(f"marks {set(marks)} not among nodes of {self.label}")
        return MarkedDynkin(self.label, self.nodes, self.edges, marks)


def _chain_edges(nodes: list[int]) -> list[tuple[int, int, int, int | None]]:
    return [(a, b, 1, None) for a, b in zip(nodes, nodes[1:])]


def simple_diagram(family: str, rank: int) -> MarkedDynkin:
    """Bourbaki diagram of a simple type: A(r>=1), B(r>=2), C(r>=3),
    D(r>=4), E6..E8, F4, G2."""
    nodes = list(range(1, rank + 1))
    if family == "A":
        if rank < 1:
            raise RankError("A needs rank >= 1")
        edges = _chain_edges(nodes)
    elif family == "B":
        if rank < 2:
            raise RankError("B needs rank >= 2")
        edges = _chain_edges(nodes[:-1]) + [(rank - 1, rank, 2, rank)]
    elif family == "C":
        if rank < 3:
            raise RankError("C needs rank >= 3 (B2 covers the rank-2 diagram)")
        edges = _chain_edges(nodes[:-1]) + [(rank - 1, rank, 2, rank - 1)]
    elif family == "D":
        if rank < 4:
            raise RankError("D needs rank >= 4")
        edges = _chain_edges(nodes[:-2]) + [(rank - 2, rank - 1, 1, None), (rank - 2, rank, 1, None)]
    elif family == "E":
        if rank not in (6, 7, 8):
            raise RankError("E needs rank in {6,7,8}")
        # Bourbaki: node 2 hangs off node 4 of the chain 1-3-4-5-...
        chain = [1, 3] + list(range(4, rank + 1))
        edges = _chain_edges(chain) + [(2, 4, 1, None)]
    elif family == "F":
        if rank != 4:
            raise RankError("F needs rank 4")
        edges = [(1, 2, 1, None), (2, 3, 2, 3), (3, 4, 1, None)]
    elif family == "G":
        if rank != 2:
            raise RankError("G needs rank 2")
        edges = [(1, 2, 3, 1)]
    else:
        raise RankError(f"unknown family {family!r}")
    return MarkedDynkin(f"{family}{rank}", tuple(nodes), tuple(edges))


def product_aa(a: int, b: int) -> MarkedDynkin:
    """A_a x A_b as one disconnected diagram; factor 2 nodes are a+1..a+b."""
    if a < 1 or b < 1:
        raise RankError("product factors need rank >= 1")
    nodes = tuple(range(1, a + b + 1))
    edges = tuple(_chain_edges(list(range(1, a + 1)))) + tuple(
        _chain_edges(list(range(a + 1, a + b + 1)))
    )
    return MarkedDynkin(f"A{a}xA{b}", nodes, edges)


def erase_and_component(
    d: MarkedDynkin, erased, keep
) -> MarkedDynkin:
    """Erase the given nodes, take the component containing `keep`, and mark
    the kept nodes there."""
    erased = frozenset(erased)
    keep = frozenset(keep)
    if erased & keep:
        raise MalformedContractionError("erased and kept nodes overlap")
    if not keep:
        raise MalformedContractionError("need at least one kept node")
    remaining = [u for u in d.nodes if u not in erased]
    adj: dict[int, set[int]] = {u: set() for u in remaining}
    for a, b, _, _ in d.edges:
        if a in adj and b in adj:
            adj[a].add(b)
            adj[b].add(a)
    start = min(keep)
    if start not in adj:
        raise MalformedContractionError(f"kept node {start} was erased")
    seen = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        for v in adj[u]:
            if v not in seen:
                seen.add(v)
                stack.append(v)
    if not keep <= seen:
        raise MalformedContractionError(
            f"kept nodes {set(keep)} span several components after erasing {set(erased)}"
        )
    nodes = tuple(sorted(seen))
    edges = tuple(e for e in d.edges if e[0] in seen and e[1] in seen)
    return MarkedDynkin(d.label + "'", nodes, edges, frozenset(keep))


def is_projective_space_fiber(d: MarkedDynkin) -> int | None:
    """Dimension of the projective space d represents, or None.

    Recognised patterns for a single marked node: a single node (P^1); a
    simply laced chain with an end marked (A_r, P^r); a chain with one double
    edge at an end whose arrow points inward -- the long root sits at the end
    (C_r) -- with the opposite end marked (P^{2r-1}).
    """
    if len(d.marked) != 1:
        return None
    (m,) = d.marked
    r = len(d.nodes)
    if r == 1:
        return 1
    degs = {u: len(d.neighbours(u)) for u in d.nodes}
    if any(deg > 2 for deg in degs.values()):
        return None  # branch node: types D/E have no projective-space marks
    ends = [u for u, deg in degs.items() if deg == 1]
    if len(ends) != 2:
        return None
    doubles = [e for e in d.edges if e[2] == 2]
    if any(e[2] >= 3 for e in d.edges):
        return None  # G2
    if not doubles:
        return r if m in ends else None
    if len(doubles) > 1:
        return None
    a, b, _, head = doubles[0]
    if r == 2:
        # rank-2 doubly laced: the quotient at the short root is P^3
        return 3 if m == head else None
    end_of_double = a if a in ends else (b if b in ends else None)
    if end_of_double is None:
        return None  # double edge in the middle: F4 shape
    if head == end_of_double:
        return None  # short root at the end: type B, a quadric not P
    far_end = next(u for u in ends if u != end_of_double)
    return 2 * r - 1 if m == far_end else None


@dataclass(frozen=True)
class RoofRecord:
    """One Picard-rank-two diagram whose two contractions are P-bundles."""

    group: str
    family: str
    type_label: str
    roof: str
    marks: tuple[int, int]
    base1: str
    base2: str
    fiber_dim1: int
    fiber_dim2: int

    @property
    def equal_rank(self) -> bool:
        return self.fiber_dim1 == self.fiber_dim2

    def sort_key(self):
        return (self.group, self.marks)


def _grassmannian_label(i: int, n: int) -> str:
    if i == 1:
        return f"P^{n - 1}"
    if i == n - 1:
        return f"P^{n - 1}"
    return f"G({i},{n})"


def _label_simple(family: str, rank: int, marks: tuple[int, int]) -> dict:
    """Pattern-match a qualifying marking to its family/type/base labels."""
    x, y = marks
    if family == "A":
        n = rank + 1
        if y == x + 1:
            return {
                "family": "A^G",
                "type_label": f"A^G_{{{x},{n - 1}}}",
                "roof": f"F({x},{x + 1},{n})",
                "base1": _grassmannian_label(x, n),
                "base2": _grassmannian_label(x + 1, n),
            }
        if (x, y) == (1, rank):
            return {
                "family": "A^M",
                "type_label": f"A^M_{{{n - 1}}}",
                "roof": f"F(1,{n - 1},{n})",
                "base1": f"P^{n - 1}",
                "base2": f"P^{n - 1}",
            }
    if family == "B" and (x, y) == (rank - 1, rank):
        n = 2 * rank + 1
        return {
            "family": "B",
            "type_label": f"B_{{{rank}}}",
            "roof": f"OF({rank - 1},{rank},{n})",
            "base1": f"OG({rank - 1},{n})",
            "base2": f"OG({rank},{n})",
        }
    if family == "B" and rank == 3 and (x, y) == (1, 3):
        # rank-2 coincidence: erasing node 1 leaves the doubly laced diagram
        # marked at its short root, whose quotient is P^3; the roof is the
        # projectivised spinor bundle over the 5-dimensional quadric
        return {
            "family": "B^s",
            "type_label": "B_3^s",
            "roof": "OF(1,3,7)",
            "base1": "OG(1,7)",
            "base2": "OG(3,7)",
        }
    if family == "D" and y in (rank - 1, rank) and x == 1 and rank == 4:
        # triality images of the {rank-1, rank} marking
        sign = "-" if y == rank - 1 else "+"
        return {
            "family": "D^t",
            "type_label": "D_4^t",
            "roof": f"D4/P{{1,{y}}}",
            "base1": "OG(1,8)",
            "base2": f"OG(4,8){sign}",
        }
    if family == "C" and y == x + 1:
        n = 2 * rank
        return {
            "family": "C",
            "type_label": f"C_{{{x + 1},{rank - 1}}}",
            "roof": f"IF({x},{x + 1},{n})",
            "base1": f"IG({x},{n})",
            "base2": f"IG({x + 1},{n})",
        }
    if family == "D" and (x, y) == (rank - 1, rank):
        n = 2 * rank
        return {
            "family": "D",
            "type_label": f"D_{{{rank}}}",
            "roof": f"OG({rank - 1},{n})",
            "base1": f"OG({rank},{n})-",
            "base2": f"OG({rank},{n})+",
        }
    if family == "F" and (x, y) == (2, 3):
        return {
            "family": "F4",
            "type_label": "F_4",
            "roof": "F4/P{2,3}",
            "base1": "F4/P2",
            "base2": "F4/P3",
        }
    if family == "G" and (x, y) == (1, 2):
        return {
            "family": "G2",
            "type_label": "G_2",
            "roof": "G2/P{1,2}",
            "base1": "G2/P1",
            "base2": "G2/P2",
        }
    return {
        "family": "UNKNOWN",
        "type_label": f"{family}{rank}?{marks}",
        "roof": "?",
        "base1": "?",
        "base2": "?",
    }


def _simple_families(max_rank: int):
    for r in range(2, max_rank + 1):
        yield ("A", r)
    for r in range(2, max_rank + 1):
        yield ("B", r)
    for r in range(3, max_rank + 1):
        yield ("C", r)
    for r in range(4, max_rank + 1):
        yield ("D", r)
    for r in (6, 7, 8):
        if r <= max_rank:
            yield ("E", r)
    if max_rank >= 4:
        yield ("F", 4)
    if max_rank >= 2:
        yield ("G", 2)


def classify(max_rank: int) -> list[RoofRecord]:
    """All Picard-rank-two markings of simple diagrams of rank <= max_rank
    (plus products of two type-A factors) whose two contractions are
    projective bundles.

    Simple diagrams are enumerated once per isomorphism class (B from rank 2,
    C from rank 3, D from rank 4).  For products every choice of an end node
    per factor gives the same roof, so marks are canonicalised to the first
    node of each factor with the smaller factor first.
    """
    if max_rank < 2:
        raise RankError(f"max_rank must be >= 2, got {max_rank}")
    records: list[RoofRecord] = []
    for family, rank in _simple_families(max_rank):
        diagram = simple_diagram(family, rank)
        for marks in combinations(diagram.nodes, 2):
            fibers = _both_fibers(diagram, marks)
            if fibers is None:
                continue
            labels = _label_simple(family, rank, marks)
            records.append(
                RoofRecord(
                    group=diagram.label,
                    marks=marks,
                    fiber_dim1=fibers[0],
                    fiber_dim2=fibers[1],
                    **labels,
                )
            )
    for a in range(1, max_rank):
        for b in range(a, max_rank - a + 1):
            diagram = product_aa(a, b)
            marks = (1, a + 1)
            fibers = _both_fibers(diagram, marks)
            assert fibers == (b, a)
            records.append(
                RoofRecord(
                    group=diagram.label,
                    family="AxA",
                    type_label=f"A_{{{a}}}xA_{{{b}}}",
                    roof=f"P^{a}xP^{b}",
                    marks=marks,
                    base1=f"P^{a}",
                    base2=f"P^{b}",
                    fiber_dim1=b,
                    fiber_dim2=a,
                )
            )
    records.sort(key=RoofRecord.sort_key)
    return records


def _both_fibers(diagram: MarkedDynkin, marks: tuple[int, int]) -> tuple[int, int] | None:
    x, y = marks
    f1 = is_projective_space_fiber(erase_and_component(diagram, {x}, {y}))
    if f1 is None:
        return None
    f2 = is_projective_space_fiber(erase_and_component(diagram, {y}, {x}))
    if f2 is None:
        return None
    return (f1, f2)

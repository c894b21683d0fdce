"""Bitmask hypergraphs doubling as positive DNFs.

A hypergraph over vertices 0..n-1 is stored as a universe size ``n`` plus a
tuple of integer edge masks (bit i set iff vertex i is in the edge).  The same
object represents the term set of a positive DNF: evaluating the DNF at a
point x asks whether some edge mask is contained in the support of x.

Conventions
- vertex ids are 0-based everywhere, including files and CLI output;
- n is capped at 62 so every count (at most 2^n) stays comfortably exact;
- edges are deduplicated on construction, order of first appearance is kept;
- empty edge masks are legal (they arise mid-recursion) and mean
  "unhittable": any hypergraph containing one has zero hitting sets.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

MAX_VERTICES = 62


class PreconditionError(ValueError):
    """An operation was called outside its contract (distinct from a 0 result)."""


class SizeLimitError(ValueError):
    """A brute-force operation was asked to exceed its configured size cap."""


class ParseError(ValueError):
    """An instance file violates the text format."""


def mask_from_vertices(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def vertices_from_mask(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def format_mask(mask: int) -> str:
    return "{" + ",".join(str(v) for v in vertices_from_mask(mask)) + "}"


def complement(x: int, n: int) -> int:
    """Bitwise complement of x inside an n-bit universe: 2^n - x - 1."""
    return ((1 << n) - 1) ^ x


def weight(x: int) -> int:
    """Hamming weight (popcount)."""
    return x.bit_count()


@dataclass(frozen=True)
class Hypergraph:
    """Immutable hypergraph / positive-DNF term set.

    ``edges`` holds bit masks; duplicates are dropped on construction while
    keeping first-appearance order, so value equality is order-sensitive but
    multiplicity-free.
    """

    n: int
    edges: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_VERTICES:
            raise ValueError(f"universe size must be in [1, {MAX_VERTICES}], got {self.n}")
        full = (1 << self.n) - 1
        for e in self.edges:
            if not isinstance(e, int) or e < 0 or e & ~full:
                raise ValueError(f"edge mask {e!r} out of range for n={self.n}")
        object.__setattr__(self, "edges", tuple(dict.fromkeys(self.edges)))

    @classmethod
    def from_edge_sets(cls, n: int, edge_sets: Iterable[Iterable[int]]) -> "Hypergraph":
        return cls(n, tuple(mask_from_vertices(e) for e in edge_sets))

    def edge_sets(self) -> list[list[int]]:
        return [vertices_from_mask(e) for e in self.edges]

    def __len__(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class SelfDualVerdict:
    """Outcome of a self-duality test.

    A witness, when present, is a point x with f(x) = 0 and f(x-bar) = 0.
    ``count`` carries the adjusted zero-point count when the verdict came
    from a counting algorithm.
    """

    self_dual: bool
    witness: Optional[int] = None
    count: Optional[int] = None


@dataclass(frozen=True)
class DualVerdict:
    """Outcome of a mutual-duality test.

    A witness, when present, is a point x with f(x) = g(x-bar), which for a
    truly dual pair is impossible.
    """

    dual: bool
    witness: Optional[int] = None


def evaluate(h: Hypergraph, x: int) -> int:
    """Value of the positive DNF at point x (1 iff some edge is inside supp x)."""
    return 1 if any(e & x == e for e in h.edges) else 0


def find_disjoint_pair(h: Hypergraph) -> Optional[tuple[int, int]]:
    """First pair of edges with empty intersection, or None.

    Self-pairs count: a hypergraph containing an empty edge is not
    intersecting.
    """
    edges = h.edges
    for i, e in enumerate(edges):
        for t in edges[i:]:
            if e & t == 0:
                return (e, t)
    return None


def is_intersecting(h: Hypergraph) -> bool:
    return find_disjoint_pair(h) is None


def find_containment_pair(h: Hypergraph) -> Optional[tuple[int, int]]:
    """First (small, large) pair of distinct edges with small inside large."""
    edges = h.edges
    for i, e in enumerate(edges):
        for t in edges[i + 1:]:
            if e & t == e:
                return (e, t)
            if e & t == t:
                return (t, e)
    return None


def is_sperner(h: Hypergraph) -> bool:
    return find_containment_pair(h) is None


def validate_pidnf(h: Hypergraph) -> None:
    """Raise PreconditionError unless h is Sperner and pairwise intersecting."""
    pair = find_containment_pair(h)
    if pair is not None:
        raise PreconditionError(
            f"not Sperner: edge {format_mask(pair[0])} is contained in {format_mask(pair[1])}"
        )
    pair = find_disjoint_pair(h)
    if pair is not None:
        raise PreconditionError(
            f"not intersecting: edges {format_mask(pair[0])} and {format_mask(pair[1])} are disjoint"
        )


def remove_vertices(h: Hypergraph, p: int) -> Hypergraph:
    """Clear the bits of p from every edge; merged duplicates collapse to one.

    Edges that become empty are kept (downstream counting treats them as
    unhittable).
    """
    return Hypergraph(h.n, tuple(e & ~p for e in h.edges))


def neighbourhood(h: Hypergraph, s: int) -> tuple[int, ...]:
    """Edges whose mask intersects s."""
    return tuple(e for e in h.edges if e & s)


def occupied_vertices(h: Hypergraph) -> int:
    m = 0
    for e in h.edges:
        m |= e
    return m


def connected_components(h: Hypergraph) -> list[Hypergraph]:
    """Split edges into maximal vertex-sharing groups.

    Equivalent to connected components of the bipartite incidence graph.
    Each empty edge is its own component.  Components are ordered by the
    first appearance of one of their edges.
    """
    return [Hypergraph(h.n, grp) for grp in component_edge_groups(h.edges)]


def component_edge_groups(edges: tuple[int, ...]) -> list[tuple[int, ...]]:
    """Connected components as raw edge tuples (assumes edges pre-deduped)."""
    parent: dict[int, int] = {}

    def find(v: int) -> int:
        root = v
        while parent[root] != root:
            root = parent[root]
        while parent[v] != root:
            parent[v], v = root, parent[v]
        return root

    def union(a: int, b: int) -> None:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[rb] = ra

    for e in edges:
        vs = vertices_from_mask(e)
        for v in vs:
            parent.setdefault(v, v)
        for v in vs[1:]:
            union(vs[0], v)

    groups: dict[int, list[int]] = {}
    order: list[int] = []
    empty_key = -1
    for e in edges:
        if e == 0:
            # unique key per empty edge: dedup already removed repeats
            key = empty_key
            empty_key -= 1
        else:
            key = find(vertices_from_mask(e)[0])
        if key not in groups:
            groups[key] = []
            order.append(key)
        groups[key].append(e)
    return [tuple(groups[k]) for k in order]


def iter_submasks(mask: int) -> Iterator[int]:
    """All non-empty submasks of mask in ascending numeric order."""
    s = (-mask) & mask
    while s:
        yield s
        s = (s - mask) & mask

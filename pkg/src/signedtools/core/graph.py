"""
Immutable signed-graph model.

A signed graph is a simple undirected graph on the vertices ``0..n-1`` together
with a sign on every edge. Every other module consumes this type; all
operations here are pure and return new graphs.
"""

from enum import IntEnum
from typing import Dict, Iterable, Iterator, List, Mapping, NamedTuple, Optional, Sequence, Tuple

from ..exceptions import GraphInputError

Edge = Tuple[int, int]
VertexSet = Tuple[int, ...]


class Sign(IntEnum):
    """Edge or cycle sign."""

    PLUS = 1
    MINUS = -1

    def __mul__(self, other: "Sign") -> "Sign":  # type: ignore[override]
        return Sign(int(self) * int(other))

    __rmul__ = __mul__

    @property
    def token(self) -> str:
        """Single-character file token."""
        return "+" if self is Sign.PLUS else "-"

    @classmethod
    def from_token(cls, token: str) -> "Sign":
        if token == "+":
            return cls.PLUS
        if token == "-":
            return cls.MINUS
        raise GraphInputError(f"invalid sign token {token!r}, expected '+' or '-'")

    @classmethod
    def product(cls, signs: Iterable["Sign"]) -> "Sign":
        result = cls.PLUS
        for sign in signs:
            result = result * sign
        return result


def normalize_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class SignedGraph:
    """
    Simple undirected graph with a sign on every edge.

    Instances are immutable and hashable; equality compares the vertex count
    and the signed edge set.
    """

    __slots__ = ("_n", "_signs", "_edges", "_neighbors", "_masks")

    def __init__(self, n: int, signed_edges: Iterable[Tuple[int, int, Sign]] = ()):
        """
        Build a signed graph.

        Args:
            n: Number of vertices (vertices are 0..n-1)
            signed_edges: Triples (u, v, sign); each unordered pair at most once

        Raises:
            GraphInputError: negative n, loops, out-of-range ids or repeated edges
        """
        if n < 0:
            raise GraphInputError(f"vertex count must be non-negative, got {n}")

        signs: Dict[Edge, Sign] = {}
        for u, v, sign in signed_edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphInputError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphInputError(f"loop at vertex {u}")
            edge = normalize_edge(u, v)
            if edge in signs:
                raise GraphInputError(f"repeated edge {edge}")
            signs[edge] = Sign(sign)

        neighbors: List[List[int]] = [[] for _ in range(n)]
        for u, v in signs:
            neighbors[u].append(v)
            neighbors[v].append(u)

        self._n = n
        self._signs = signs
        self._edges = tuple(sorted(signs))
        self._neighbors = tuple(tuple(sorted(adj)) for adj in neighbors)
        self._masks: Optional[Tuple[int, ...]] = None

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[Edge],
        signs: Optional[Mapping[Edge, Sign]] = None,
    ) -> "SignedGraph":
        """Build from unsigned edges; edges missing from ``signs`` are Plus."""
        signs = signs or {}
        triples = []
        for u, v in edges:
            sign = signs.get((u, v), signs.get((v, u), Sign.PLUS))
            triples.append((u, v, sign))
        return cls(n, triples)

    @property
    def n(self) -> int:
        return self._n

    @property
    def edges(self) -> Tuple[Edge, ...]:
        """Edges as sorted pairs (u, v) with u < v, in lexicographic order."""
        return self._edges

    @property
    def edge_count(self) -> int:
        return len(self._edges)

    def sign(self, u: int, v: int) -> Sign:
        try:
            return self._signs[normalize_edge(u, v)]
        except KeyError:
            raise GraphInputError(f"({u}, {v}) is not an edge") from None

    def signed_edges(self) -> Iterator[Tuple[int, int, Sign]]:
        for u, v in self._edges:
            yield u, v, self._signs[(u, v)]

    def has_edge(self, u: int, v: int) -> bool:
        return normalize_edge(u, v) in self._signs

    def neighbors(self, v: int) -> Tuple[int, ...]:
        return self._neighbors[v]

    def adjacency_masks(self) -> Tuple[int, ...]:
        """Neighbourhood of every vertex as an integer bitmask."""
        if self._masks is None:
            self._masks = tuple(
                sum(1 << w for w in adj) for adj in self._neighbors
            )
        return self._masks

    def negative_edges(self) -> Tuple[Edge, ...]:
        return tuple(e for e in self._edges if self._signs[e] is Sign.MINUS)

    def underlying(self) -> "SignedGraph":
        """The same graph with every edge Plus."""
        return SignedGraph(self._n, ((u, v, Sign.PLUS) for u, v in self._edges))

    def with_signs(self, signs: Mapping[Edge, Sign]) -> "SignedGraph":
        """Copy with the given edges re-signed; other edges keep their sign."""
        return SignedGraph(
            self._n,
            ((u, v, signs.get((u, v), s)) for u, v, s in self.signed_edges()),
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SignedGraph):
            return NotImplemented
        return self._n == other._n and self._signs == other._signs

    def __hash__(self) -> int:
        return hash((self._n, tuple(self.signed_edges())))

    def __repr__(self) -> str:
        body = " ".join(f"{u}{s.token}{v}" for u, v, s in self.signed_edges())
        return f"SignedGraph(n={self._n}, [{body}])"


class Deletion(NamedTuple):
    """Result of deleting vertices: the graph and old-id -> new-id map."""

    graph: SignedGraph
    relabel: Dict[int, int]


class Component(NamedTuple):
    """A connected component with the original id of each of its vertices."""

    graph: SignedGraph
    vertex_map: Tuple[int, ...]


def vertex_set(g: SignedGraph, xs: Iterable[int]) -> VertexSet:
    """Validate and normalize a vertex collection to a sorted tuple."""
    result = tuple(sorted(set(xs)))
    for x in result:
        if not 0 <= x < g.n:
            raise GraphInputError(f"vertex {x} out of range for n={g.n}")
    return result


def delete_vertices(g: SignedGraph, xs: Iterable[int]) -> Deletion:
    """
    Delete vertices and their incident edges.

    Surviving vertices are relabeled contiguously in increasing order of their
    old ids; signs are preserved.

    Raises:
        GraphInputError: if any id is out of range
    """
    removed = set(vertex_set(g, xs))
    relabel: Dict[int, int] = {}
    for v in range(g.n):
        if v not in removed:
            relabel[v] = len(relabel)
    triples = (
        (relabel[u], relabel[v], s)
        for u, v, s in g.signed_edges()
        if u in relabel and v in relabel
    )
    return Deletion(SignedGraph(len(relabel), triples), relabel)


def induced_subgraph(g: SignedGraph, keep: Iterable[int]) -> Deletion:
    """Subgraph induced by ``keep`` (deletes the complement)."""
    kept = set(vertex_set(g, keep))
    return delete_vertices(g, (v for v in range(g.n) if v not in kept))


def delete_edges(g: SignedGraph, edges: Iterable[Edge]) -> SignedGraph:
    """Remove edges, keeping every vertex."""
    dropped = set()
    for u, v in edges:
        if not g.has_edge(u, v):
            raise GraphInputError(f"({u}, {v}) is not an edge")
        dropped.add(normalize_edge(u, v))
    return SignedGraph(
        g.n, ((u, v, s) for u, v, s in g.signed_edges() if (u, v) not in dropped)
    )


def add_vertex(g: SignedGraph, attachments: Iterable[Tuple[int, Sign]] = ()) -> SignedGraph:
    """Append vertex ``g.n`` joined to the given vertices with the given signs."""
    new = g.n
    triples = list(g.signed_edges())
    triples.extend((u, new, s) for u, s in attachments)
    return SignedGraph(g.n + 1, triples)


def components(g: SignedGraph) -> List[Component]:
    """
    Connected components ordered by their smallest vertex.

    Each component carries its induced signed edges, relabeled so that
    ``vertex_map[i]`` is the original id of component vertex ``i``.
    """
    seen = [False] * g.n
    result = []
    for root in range(g.n):
        if seen[root]:
            continue
        seen[root] = True
        stack = [root]
        members = []
        while stack:
            v = stack.pop()
            members.append(v)
            for w in g.neighbors(v):
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        deletion = induced_subgraph(g, members)
        result.append(Component(deletion.graph, tuple(sorted(members))))
    return result


def component_count(g: SignedGraph) -> int:
    """Number of connected components, omega(G)."""
    parent = list(range(g.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    count = g.n
    for u, v in g.edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            count -= 1
    return count


def is_connected(g: SignedGraph) -> bool:
    return component_count(g) <= 1


def degree(g: SignedGraph, v: int) -> int:
    if not 0 <= v < g.n:
        raise GraphInputError(f"vertex {v} out of range for n={g.n}")
    return len(g.neighbors(v))


def pendant_vertices(g: SignedGraph) -> VertexSet:
    """Vertices of degree exactly one."""
    return tuple(v for v in range(g.n) if len(g.neighbors(v)) == 1)


def quasi_pendant_vertices(g: SignedGraph) -> VertexSet:
    """Vertices adjacent to a pendant vertex that are not pendant themselves."""
    pendant = set(pendant_vertices(g))
    return tuple(
        v
        for v in range(g.n)
        if v not in pendant and any(w in pendant for w in g.neighbors(v))
    )


def disjoint_union(*graphs: SignedGraph) -> SignedGraph:
    """Union with the vertices of each graph shifted past the previous ones."""
    offset = 0
    triples = []
    for h in graphs:
        triples.extend((u + offset, v + offset, s) for u, v, s in h.signed_edges())
        offset += h.n
    return SignedGraph(offset, triples)


def from_signed_edges(n: int, triples: Sequence[Tuple[int, int, str]]) -> SignedGraph:
    """Build from (u, v, '+'/'-') triples."""
    return SignedGraph(n, ((u, v, Sign.from_token(t)) for u, v, t in triples))


# Standard graphs


def empty_graph(n: int) -> SignedGraph:
    if n < 0:
        raise GraphInputError(f"vertex count must be non-negative, got {n}")
    return SignedGraph(n)


def path(n: int) -> SignedGraph:
    """P_n with edges (i, i+1)."""
    if n < 1:
        raise GraphInputError(f"path needs n >= 1, got {n}")
    return SignedGraph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle(n: int, signs: Optional[Sequence[Sign]] = None) -> SignedGraph:
    """
    C_n with edges (i, i+1 mod n).

    Args:
        n: Cycle length, at least 3
        signs: Optional sign per edge, ``signs[i]`` for edge (i, i+1 mod n)
    """
    if n < 3:
        raise GraphInputError(f"cycle needs n >= 3, got {n}")
    if signs is None:
        signs = [Sign.PLUS] * n
    if len(signs) != n:
        raise GraphInputError(f"cycle of length {n} needs {n} signs, got {len(signs)}")
    return SignedGraph(n, ((i, (i + 1) % n, signs[i]) for i in range(n)))


def star(n: int) -> SignedGraph:
    """S_n with center 0."""
    if n < 1:
        raise GraphInputError(f"star needs n >= 1, got {n}")
    return SignedGraph.from_edges(n, ((0, i) for i in range(1, n)))


def complete(n: int) -> SignedGraph:
    if n < 1:
        raise GraphInputError(f"complete graph needs n >= 1, got {n}")
    return SignedGraph.from_edges(n, ((i, j) for i in range(n) for j in range(i + 1, n)))


def petersen() -> SignedGraph:
    """Petersen graph: outer 5-cycle 0..4, inner pentagram 5..9, spokes i--i+5."""
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    return SignedGraph.from_edges(10, outer + inner + spokes)

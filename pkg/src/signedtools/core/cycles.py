"""
Cycle structure of signed graphs.

Cycles are inventoried through the block decomposition rather than by
enumerating cycles: when the cycles of a graph are pairwise vertex-disjoint,
every cycle is exactly one block. This module also builds the forest T_G
obtained by contracting each cycle to a single cyclic vertex, the forest
[T_G] = T_G minus the cyclic vertices, and implements switching.
"""

from typing import Dict, Iterable, List, NamedTuple, Optional, Sequence, Set, Tuple

from ..exceptions import PreconditionError
from .graph import (
    Edge,
    Sign,
    SignedGraph,
    VertexSet,
    delete_vertices,
    normalize_edge,
    vertex_set,
)

Cycle = Tuple[int, ...]


class Block(NamedTuple):
    """A maximal 2-connected subgraph, or a bridge edge."""

    vertices: VertexSet
    edges: Tuple[Edge, ...]

    @property
    def is_bridge(self) -> bool:
        return len(self.edges) == 1

    @property
    def is_cycle(self) -> bool:
        if len(self.edges) < 3 or len(self.edges) != len(self.vertices):
            return False
        degree: Dict[int, int] = {}
        for u, v in self.edges:
            degree[u] = degree.get(u, 0) + 1
            degree[v] = degree.get(v, 0) + 1
        return all(d == 2 for d in degree.values())


class DisjointnessVerdict(NamedTuple):
    """
    Whether the cycles of a graph are pairwise vertex-disjoint.

    ``witness_kind`` is ``"non_cycle_block"`` (witness = vertices of a block
    that is neither an edge nor a cycle), ``"shared_vertex"`` (witness = a
    vertex lying in two cycle blocks) or ``None`` when disjoint.
    """

    disjoint: bool
    cycles: Tuple[Cycle, ...]
    witness_kind: Optional[str] = None
    witness: VertexSet = ()


class CycleStructure(NamedTuple):
    """Cycles of a graph with vertex-disjoint cycles and its contractions."""

    cycles: Tuple[Cycle, ...]
    signs: Tuple[Sign, ...]
    disjoint: bool
    cyclic_vertices: VertexSet
    t_g: SignedGraph
    t_g_bracket: SignedGraph
    contraction_map: Tuple[int, ...]


def blocks(g: SignedGraph) -> List[Block]:
    """
    Block decomposition by an iterative low-link depth-first search.

    Every edge lies in exactly one block; isolated vertices lie in none.
    Blocks are returned sorted by their edge lists.
    """
    disc = [-1] * g.n
    low = [0] * g.n
    clock = 0
    result: List[Block] = []

    for root in range(g.n):
        if disc[root] != -1 or not g.neighbors(root):
            continue
        disc[root] = low[root] = clock
        clock += 1
        stack = [(root, -1, iter(g.neighbors(root)))]
        edge_stack: List[Edge] = []

        while stack:
            v, parent, neighbors = stack[-1]
            descended = False
            for w in neighbors:
                if disc[w] == -1:
                    edge_stack.append((v, w))
                    disc[w] = low[w] = clock
                    clock += 1
                    stack.append((w, v, iter(g.neighbors(w))))
                    descended = True
                    break
                if w != parent and disc[w] < disc[v]:
                    edge_stack.append((v, w))
                    low[v] = min(low[v], disc[w])
            if descended:
                continue

            stack.pop()
            if not stack:
                continue
            u = stack[-1][0]
            low[u] = min(low[u], low[v])
            if low[v] >= disc[u]:
                block_edges = []
                while True:
                    a, b = edge_stack.pop()
                    block_edges.append(normalize_edge(a, b))
                    if (a, b) == (u, v):
                        break
                members = {x for edge in block_edges for x in edge}
                result.append(Block(tuple(sorted(members)), tuple(sorted(block_edges))))

    result.sort(key=lambda block: block.edges)
    return result


def _cycle_from_block(block: Block) -> Cycle:
    """Cyclic vertex sequence from the lowest vertex towards its lower neighbour."""
    adjacent: Dict[int, List[int]] = {}
    for u, v in block.edges:
        adjacent.setdefault(u, []).append(v)
        adjacent.setdefault(v, []).append(u)
    start = block.vertices[0]
    sequence = [start]
    previous, current = start, min(adjacent[start])
    while current != start:
        sequence.append(current)
        a, b = adjacent[current]
        previous, current = current, (b if a == previous else a)
    return tuple(sequence)


def cycles_vertex_disjoint(g: SignedGraph) -> DisjointnessVerdict:
    """
    Decide whether the cycles of g are pairwise vertex-disjoint.

    True iff every block is an edge or a cycle and no vertex lies in two cycle
    blocks; the cycles are then exactly the c(G) cycle blocks.
    """
    cycle_blocks = []
    for block in blocks(g):
        if block.is_bridge:
            continue
        if not block.is_cycle:
            return DisjointnessVerdict(False, (), "non_cycle_block", block.vertices)
        cycle_blocks.append(block)

    owner: Dict[int, int] = {}
    shared: Set[int] = set()
    for index, block in enumerate(cycle_blocks):
        for v in block.vertices:
            if v in owner:
                shared.add(v)
            owner[v] = index
    if shared:
        return DisjointnessVerdict(False, (), "shared_vertex", (min(shared),))

    cycles = tuple(sorted(_cycle_from_block(block) for block in cycle_blocks))
    return DisjointnessVerdict(True, cycles)


def cycle_sign(g: SignedGraph, cycle: Sequence[int]) -> Sign:
    """
    Product of the edge signs along a cycle.

    Raises:
        PreconditionError: if the vertex sequence is not a cycle of g
    """
    vertices = list(cycle)
    if len(vertices) < 3 or len(set(vertices)) != len(vertices):
        raise PreconditionError(f"{tuple(vertices)} is not a cycle")
    signs = []
    for i, u in enumerate(vertices):
        v = vertices[(i + 1) % len(vertices)]
        if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
            raise PreconditionError(f"{tuple(vertices)} is not a cycle: ({u}, {v}) missing")
        signs.append(g.sign(u, v))
    return Sign.product(signs)


def contract(g: SignedGraph) -> CycleStructure:
    """
    Contract every cycle of g to one cyclic vertex.

    T_G keeps all edges from cycle vertices to the rest of the graph; its
    vertices are numbered in order of first appearance when scanning the
    vertices of g in increasing order. All signs of T_G are Plus.

    Raises:
        PreconditionError: if the cycles of g are not pairwise vertex-disjoint
    """
    verdict = cycles_vertex_disjoint(g)
    if not verdict.disjoint:
        raise PreconditionError(
            f"cycles are not pairwise vertex-disjoint ({verdict.witness_kind}: "
            f"{list(verdict.witness)})"
        )

    cycle_of: Dict[int, int] = {}
    for index, cyc in enumerate(verdict.cycles):
        for v in cyc:
            cycle_of[v] = index

    contraction: List[int] = [-1] * g.n
    cyclic_label: Dict[int, int] = {}
    next_label = 0
    for v in range(g.n):
        if v in cycle_of:
            index = cycle_of[v]
            if index not in cyclic_label:
                cyclic_label[index] = next_label
                next_label += 1
            contraction[v] = cyclic_label[index]
        else:
            contraction[v] = next_label
            next_label += 1

    contracted: Set[Edge] = set()
    for u, v in g.edges:
        a, b = contraction[u], contraction[v]
        if a == b:
            continue
        edge = normalize_edge(a, b)
        if edge in contracted:
            # two edges between the same pieces would close an extra cycle
            raise PreconditionError(f"contraction creates a parallel edge {edge}")
        contracted.add(edge)

    t_g = SignedGraph.from_edges(next_label, sorted(contracted))
    cyclic_vertices = tuple(sorted(cyclic_label.values()))
    t_g_bracket = delete_vertices(t_g, cyclic_vertices).graph

    return CycleStructure(
        cycles=verdict.cycles,
        signs=tuple(cycle_sign(g, cyc) for cyc in verdict.cycles),
        disjoint=True,
        cyclic_vertices=cyclic_vertices,
        t_g=t_g,
        t_g_bracket=t_g_bracket,
        contraction_map=tuple(contraction),
    )


def cycle_vertices(g: SignedGraph) -> VertexSet:
    """Vertices lying on at least one cycle (vertices of non-bridge blocks)."""
    return tuple(sorted({v for b in blocks(g) if not b.is_bridge for v in b.vertices}))


def cycle_multiplicity(g: SignedGraph, x: int) -> int:
    """
    0 if x lies on no cycle, 1 if on exactly one, 2 if on two or more.

    Every vertex of a 2-connected block that is not a cycle lies on at least
    two distinct cycles.
    """
    count = 0
    for block in blocks(g):
        if block.is_bridge or x not in block.vertices:
            continue
        if not block.is_cycle:
            return 2
        count += 1
    return min(count, 2)


def cyclomatic_drop(g: SignedGraph, x: int) -> int:
    """
    c(G) - c(G - x): the sum over the blocks B containing x of deg_B(x) - 1.

    Bridges contribute nothing. The drop is at least 2 exactly when x has
    degree 3 or more inside one block, or lies in two or more cyclic blocks.
    """
    drop = 0
    for block in blocks(g):
        if x in block.vertices:
            drop += sum(x in edge for edge in block.edges) - 1
    return drop


def pendant_cycles(g: SignedGraph) -> List[Tuple[Cycle, int]]:
    """
    Cycles with exactly one vertex of degree 3 and all others of degree 2.

    Returns:
        (cycle, attachment vertex) pairs
    """
    result = []
    for block in blocks(g):
        if not block.is_cycle:
            continue
        degrees = {v: len(g.neighbors(v)) for v in block.vertices}
        attached = [v for v, d in degrees.items() if d != 2]
        if len(attached) == 1 and degrees[attached[0]] == 3:
            result.append((_cycle_from_block(block), attached[0]))
    return result


# Switching


def switch(g: SignedGraph, switched: Iterable[int]) -> SignedGraph:
    """Negate every edge with exactly one end in the switched set."""
    members = set(vertex_set(g, switched))
    return SignedGraph(
        g.n,
        (
            (u, v, s * Sign.MINUS if (u in members) != (v in members) else s)
            for u, v, s in g.signed_edges()
        ),
    )


def _dfs_forest(g: SignedGraph) -> List[Edge]:
    """Tree edges (parent, child) of the depth-first forest rooted at lowest ids."""
    visited = [False] * g.n
    tree: List[Edge] = []
    for root in range(g.n):
        if visited[root]:
            continue
        visited[root] = True
        stack = [(root, iter(g.neighbors(root)))]
        while stack:
            v, neighbors = stack[-1]
            for w in neighbors:
                if not visited[w]:
                    visited[w] = True
                    tree.append((v, w))
                    stack.append((w, iter(g.neighbors(w))))
                    break
            else:
                stack.pop()
    return tree


def spanning_forest_edges(g: SignedGraph) -> Tuple[Edge, ...]:
    """Edges of the lowest-id depth-first spanning forest, as sorted pairs."""
    return tuple(sorted(normalize_edge(u, v) for u, v in _dfs_forest(g)))


def normalize_signs(g: SignedGraph) -> SignedGraph:
    """
    Canonical representative of the switching class of g.

    Switches so that every edge of the lowest-id DFS spanning forest is Plus.
    """
    potential = [Sign.PLUS] * g.n
    for parent, child in _dfs_forest(g):
        potential[child] = potential[parent] * g.sign(parent, child)
    return switch(g, (v for v in range(g.n) if potential[v] is Sign.MINUS))


def cycle_signature(g: SignedGraph) -> List[Tuple[int, int, str]]:
    """(length, length mod 4, sign token) per cycle of a graph with disjoint cycles."""
    verdict = cycles_vertex_disjoint(g)
    if not verdict.disjoint:
        raise PreconditionError("cycle signature needs pairwise vertex-disjoint cycles")
    return [(len(cyc), len(cyc) % 4, cycle_sign(g, cyc).token) for cyc in verdict.cycles]

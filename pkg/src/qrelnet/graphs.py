"""Finite multigraphs with a stable edge order and their connectivity queries.

Edge ``i`` of a graph owns bit ``i`` of every edge-state bitmask, so a state
is just an integer in ``range(2 ** num_edges)``.  The text form of a state
writes edge 0 leftmost: ``"10"`` activates edge 0 and deactivates edge 1.
Self-loops and parallel edges are allowed everywhere; a graph with no
vertices, or a single vertex, counts as connected.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import CapacityError, QrelnetError, WidthMismatchError
from .partitions import Partition

# 2**24 basis states is the largest dense vector this package will touch.
MAX_EDGES = 24


@dataclass(frozen=True)
class Graph:
    """Multigraph with named vertices and an ordered edge list."""

    vertices: tuple[str, ...]
    edges: tuple[tuple[str, str], ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "edges", tuple((a, b) for a, b in self.edges))
        if len(set(self.vertices)) != len(self.vertices):
            raise QrelnetError("duplicate vertex names", code="invalid_graph")
        if len(self.edges) > MAX_EDGES:
            raise CapacityError(f"graph has {len(self.edges)} edges, cap is {MAX_EDGES}")
        known = set(self.vertices)
        for a, b in self.edges:
            if a not in known or b not in known:
                raise QrelnetError(f"edge ({a!r}, {b!r}) references an unknown vertex", code="invalid_graph")

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @property
    def num_states(self) -> int:
        return 1 << len(self.edges)


@dataclass(frozen=True)
class VertexPartitionMap:
    """Assignment of every vertex to a block index, contiguous from zero.

    Block indices follow first appearance in the graph's vertex order, which
    keeps quotients deterministic.
    """

    assignment: dict[str, int]

    def __post_init__(self):
        blocks = set(self.assignment.values())
        if blocks and blocks != set(range(len(blocks))):
            raise QrelnetError("block indices must be contiguous from 0", code="invalid_partition")


def check_state(g: Graph, state: int) -> None:
    """Reject a bitmask that does not fit the graph's edge count."""
    if not isinstance(state, int) or isinstance(state, bool):
        raise QrelnetError("edge state must be an integer bitmask", code="invalid_state")
    if not 0 <= state < g.num_states:
        raise WidthMismatchError(f"state {state} out of range for {g.num_edges} edges")


def edge_state_to_text(state: int, num_edges: int) -> str:
    """Render a bitmask with edge 0 leftmost."""
    if not 0 <= state < (1 << num_edges):
        raise WidthMismatchError(f"state {state} out of range for {num_edges} edges")
    return "".join("1" if state >> i & 1 else "0" for i in range(num_edges))


def edge_state_from_text(text: str) -> int:
    """Parse the text form of a state; width is the string length."""
    bits = 0
    for i, c in enumerate(text):
        if c == "1":
            bits |= 1 << i
        elif c != "0":
            raise QrelnetError(f"edge state strings are over '0'/'1', got {c!r}", code="invalid_state")
    return bits


def _check_edge_index(g: Graph, e: int) -> None:
    if not 0 <= e < g.num_edges:
        raise QrelnetError(f"edge index {e} out of range", code="invalid_edge")


def merged_name(names) -> str:
    """Deterministic name for a merged vertex set."""
    return "+".join(sorted(names))


def delete_edge(g: Graph, e: int) -> Graph:
    """Remove edge ``e``; later edges shift down by one, vertices unchanged."""
    _check_edge_index(g, e)
    return Graph(g.vertices, g.edges[:e] + g.edges[e + 1 :])


def vertex_partition_map(g: Graph, u, gamma: Partition) -> VertexPartitionMap:
    """Block assignment induced by a partition of the vertex subset ``u``.

    Vertices outside ``u`` stay in singleton blocks.  ``gamma`` must partition
    exactly the set ``u``.
    """
    uset = set(u)
    if not uset <= set(g.vertices):
        raise QrelnetError("subset mentions a vertex not in the graph", code="invalid_partition")
    if gamma.ground_set() != uset:
        raise QrelnetError("partition does not cover exactly the given subset", code="invalid_partition")
    block_of = {}
    for i, block in enumerate(gamma.blocks):
        for v in block:
            block_of[v] = i
    assignment: dict[str, int] = {}
    fresh: dict[object, int] = {}
    for v in g.vertices:
        key = ("b", block_of[v]) if v in block_of else ("v", v)
        if key not in fresh:
            fresh[key] = len(fresh)
        assignment[v] = fresh[key]
    return VertexPartitionMap(assignment)


def quotient(g: Graph, u, gamma: Partition) -> Graph:
    """Merge the vertices of each block of ``gamma``; edges keep their order.

    Edges inside a block become self-loops.  A merged vertex is named by
    joining its members with ``+``; quotient by all-singletons is the
    identity.
    """
    vpm = vertex_partition_map(g, u, gamma)
    members: dict[int, list[str]] = {}
    for v in g.vertices:
        members.setdefault(vpm.assignment[v], []).append(v)
    names = {i: merged_name(vs) for i, vs in members.items()}
    vertices = tuple(names[i] for i in range(len(names)))
    edges = tuple((names[vpm.assignment[a]], names[vpm.assignment[b]]) for a, b in g.edges)
    return Graph(vertices, edges)


def contract_edge(g: Graph, e: int) -> Graph:
    """Remove edge ``e`` and merge its endpoints (a no-op merge for a loop)."""
    _check_edge_index(g, e)
    a, b = g.edges[e]
    rest = g.edges[:e] + g.edges[e + 1 :]
    if a == b:
        return Graph(g.vertices, rest)
    new = merged_name((a, b))
    relabel = {a: new, b: new}
    vertices = []
    for v in g.vertices:
        w = relabel.get(v, v)
        if w not in vertices:
            vertices.append(w)
    edges = tuple((relabel.get(x, x), relabel.get(y, y)) for x, y in rest)
    return Graph(tuple(vertices), edges)


def active_subgraph(g: Graph, state: int) -> Graph:
    """Subgraph keeping all vertices and exactly the active edges."""
    check_state(g, state)
    return Graph(g.vertices, tuple(e for i, e in enumerate(g.edges) if state >> i & 1))


def _vertex_index(g: Graph) -> dict[str, int]:
    return {v: i for i, v in enumerate(g.vertices)}


def _edge_index_pairs(g: Graph) -> list[tuple[int, int]]:
    vi = _vertex_index(g)
    return [(vi[a], vi[b]) for a, b in g.edges]


def _find(parent: list[int], x: int) -> int:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def _connected(num_vertices: int, pairs, state: int) -> bool:
    if num_vertices <= 1:
        return True
    parent = list(range(num_vertices))
    for i, (a, b) in enumerate(pairs):
        if state >> i & 1:
            ra, rb = _find(parent, a), _find(parent, b)
            if ra != rb:
                parent[rb] = ra
    root = _find(parent, 0)
    return all(_find(parent, x) == root for x in range(1, num_vertices))


def _components(num_vertices: int, pairs, state: int) -> list[list[int]]:
    parent = list(range(num_vertices))
    for i, (a, b) in enumerate(pairs):
        if state >> i & 1:
            ra, rb = _find(parent, a), _find(parent, b)
            if ra != rb:
                parent[rb] = ra
    groups: dict[int, list[int]] = {}
    for x in range(num_vertices):
        groups.setdefault(_find(parent, x), []).append(x)
    return list(groups.values())


def is_connected(g: Graph, state: int) -> bool:
    """Whether the active subgraph joins every vertex (loops never help)."""
    check_state(g, state)
    return _connected(len(g.vertices), _edge_index_pairs(g), state)


def component_partition(h: Graph, u, state: int) -> Partition | None:
    """Trace of the active components on the subset ``u``.

    Returns the partition of ``u`` whose blocks are the intersections of the
    connected components with ``u``, or ``None`` when some component misses
    ``u`` entirely (an island, which no vertex merge can ever reconnect).
    """
    check_state(h, state)
    uset = set(u)
    if not uset <= set(h.vertices):
        raise QrelnetError("subset mentions a vertex not in the graph", code="invalid_partition")
    blocks = []
    for comp in _components(len(h.vertices), _edge_index_pairs(h), state):
        inter = [h.vertices[x] for x in comp if h.vertices[x] in uset]
        if not inter:
            return None
        blocks.append(tuple(inter))
    return Partition(tuple(blocks))


def canonical_form(g: Graph, max_vertices: int = 8):
    """Isomorphism key for small graphs: brute force over vertex relabelings."""
    nv = len(g.vertices)
    if nv > max_vertices:
        raise CapacityError(f"canonical form capped at {max_vertices} vertices, got {nv}")
    pairs = _edge_index_pairs(g)
    best = None
    for perm in itertools.permutations(range(nv)):
        key = tuple(sorted((min(perm[a], perm[b]), max(perm[a], perm[b])) for a, b in pairs))
        if best is None or key < best:
            best = key
    return (nv, best)

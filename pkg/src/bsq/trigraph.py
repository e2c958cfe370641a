"""Connected trivalent multigraphs (trinion gluing patterns) up to isomorphism.

A genus-g pattern has 2g-2 vertices and 3g-3 edges, every vertex trivalent
with loops counting twice.  Graphs are represented by an explicit edge list;
each edge keeps a stable index given by its position in the list.  Isomorphism
and deduplication go through a canonical form: the minimum over vertex
permutations of the (loop-count, adjacency-multiplicity) matrix encoding.
Exactness over speed; intended for desk scale (g <= 5).
"""

from __future__ import annotations

from dataclasses import dataclass

# An edge set is a set of stable edge indices.
EdgeSet = frozenset


@dataclass(frozen=True)
class TrivalentGraph:
    """Multigraph with all vertices of degree 3 (a loop adds 2)."""

    vertex_count: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        edges = tuple((a, b) if a <= b else (b, a) for a, b in self.edges)
        object.__setattr__(self, "edges", edges)
        if self.vertex_count < 2:
            raise ValueError("need at least 2 vertices")
        deg = [0] * self.vertex_count
        for a, b in edges:
            if not (0 <= a < self.vertex_count and 0 <= b < self.vertex_count):
                raise ValueError(f"edge ({a}, {b}) out of range")
            deg[a] += 1
            deg[b] += 1
        bad = [v for v, d in enumerate(deg) if d != 3]
        if bad:
            raise ValueError(f"vertices {bad} are not trivalent")
        if not _connected(self.vertex_count, edges):
            raise ValueError("graph is not connected")

    @property
    def genus(self) -> int:
        """First Betti number, g = |E| - |V| + 1."""
        return len(self.edges) - self.vertex_count + 1

    def multiplicity(self, a: int, b: int) -> int:
        a, b = min(a, b), max(a, b)
        return sum(1 for e in self.edges if e == (a, b))


def _connected(n, edges):
    adj = [set() for _ in range(n)]
    for a, b in edges:
        if a != b:
            adj[a].add(b)
            adj[b].add(a)
    seen = {0}
    stack = [0]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == n


def _matrix(graph: TrivalentGraph):
    """Loop counts on the diagonal, multiplicities off it."""
    n = graph.vertex_count
    mat = [[0] * n for _ in range(n)]
    for a, b in graph.edges:
        if a == b:
            mat[a][a] += 1
        else:
            mat[a][b] += 1
            mat[b][a] += 1
    return mat


def _canonical_key(mat, n):
    """Minimum over vertex permutations of the bordered matrix encoding.

    The permutation p is built one vertex at a time; placing p[r] appends
    the border (loops[p_r], mat[p_r][p_0], ..., mat[p_r][p_{r-1}]), so the
    key is decided prefix by prefix and dominated branches are cut early.
    """
    best = None

    def extend(perm, used, key):
        nonlocal best
        r = len(perm)
        if r == n:
            if best is None or key < best:
                best = key
            return
        for v in range(n):
            if used & (1 << v):
                continue
            border = (mat[v][v],) + tuple(mat[v][p] for p in perm)
            cand = key + border
            if best is not None and cand > best[: len(cand)]:
                continue
            extend(perm + [v], used | (1 << v), cand)

    extend([], 0, ())
    return best


def canonical_key(graph: TrivalentGraph) -> tuple:
    return _canonical_key(_matrix(graph), graph.vertex_count)


def _graph_from_key(key, n) -> TrivalentGraph:
    mat = [[0] * n for _ in range(n)]
    pos = 0
    for r in range(n):
        mat[r][r] = key[pos]
        pos += 1
        for j in range(r):
            mat[r][j] = mat[j][r] = key[pos]
            pos += 1
    edges = []
    for i in range(n):
        edges.extend([(i, i)] * mat[i][i])
        for j in range(i + 1, n):
            edges.extend([(i, j)] * mat[i][j])
    return TrivalentGraph(n, tuple(sorted(edges)))


def generate_trivalent(g: int) -> list[TrivalentGraph]:
    """All connected trivalent multigraphs on 2g-2 vertices, one per class.

    Deterministic: returned in lexicographic canonical-key order.
    """
    if not isinstance(g, int) or g < 2:
        raise ValueError(f"genus must be an integer >= 2, got {g!r}")
    n = 2 * g - 2
    keys = set()
    mat = [[0] * n for _ in range(n)]
    deg = [0] * n

    def place(v, w):
        # fill cells of row v from column w upward; diagonal cell = loops
        if v == n:
            if _connected_mat(mat, n):
                keys.add(_canonical_key(mat, n))
            return
        if w == n:
            if deg[v] == 3:
                place(v + 1, v + 1)
            return
        room_here = 3 - deg[v]
        if w == v:
            # a loop eats 2 of the 3 slots, so at most one
            for loops in range(0, room_here // 2 + 1):
                mat[v][v] = loops
                deg[v] += 2 * loops
                place(v, w + 1)
                deg[v] -= 2 * loops
            mat[v][v] = 0
        else:
            top = min(room_here, 3 - deg[w])
            for m in range(0, top + 1):
                mat[v][w] = mat[w][v] = m
                deg[v] += m
                deg[w] += m
                place(v, w + 1)
                deg[v] -= m
                deg[w] -= m
            mat[v][w] = mat[w][v] = 0

    place(0, 0)
    return [_graph_from_key(key, n) for key in sorted(keys)]


def _connected_mat(mat, n):
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for w in range(n):
            if w != v and mat[v][w] and w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == n


def is_isomorphic(g1: TrivalentGraph, g2: TrivalentGraph) -> bool:
    """Exact isomorphism test via the canonical forms (brute force inside)."""
    if g1.vertex_count != g2.vertex_count:
        return False
    return canonical_key(g1) == canonical_key(g2)


def bridges(graph: TrivalentGraph) -> EdgeSet:
    """Indices of edges whose removal disconnects the graph.

    A loop is never a bridge, nor is any edge with a parallel copy.
    """
    out = set()
    for idx, (a, b) in enumerate(graph.edges):
        if a == b:
            continue
        if graph.multiplicity(a, b) >= 2:
            continue
        rest = graph.edges[:idx] + graph.edges[idx + 1:]
        if not _connected(graph.vertex_count, rest):
            out.add(idx)
    return frozenset(out)


def graph_to_text(graph: TrivalentGraph) -> str:
    """Serialize to the line format 'v <count>' then one 'e <i> <j>' per edge."""
    lines = [f"v {graph.vertex_count}"]
    lines.extend(f"e {a} {b}" for a, b in graph.edges)
    return "\n".join(lines) + "\n"


def parse_graph_text(text: str) -> TrivalentGraph:
    """Parse the 'v'/'e' line format; '#' starts a comment, blanks ignored.

    Edge indices follow file order.
    """
    vertex_count = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "v" and len(parts) == 2:
            if vertex_count is not None:
                raise ValueError(f"line {lineno}: duplicate vertex count")
            vertex_count = int(parts[1])
        elif parts[0] == "e" and len(parts) == 3:
            if vertex_count is None:
                raise ValueError(f"line {lineno}: edge before vertex count")
            edges.append((int(parts[1]), int(parts[2])))
        else:
            raise ValueError(f"line {lineno}: cannot parse {raw!r}")
    if vertex_count is None:
        raise ValueError("missing 'v <count>' line")
    return TrivalentGraph(vertex_count, tuple(edges))


# Built-in genus-2 patterns: three parallel edges, and two loops over a bridge.
THETA_GRAPH = TrivalentGraph(2, ((0, 1), (0, 1), (0, 1)))
DUMBBELL_GRAPH = TrivalentGraph(2, ((0, 0), (0, 1), (1, 1)))

# Names accepted by the command line in place of a graph file.
BUILTIN_GRAPHS = {
    "theta2": THETA_GRAPH,
    "dumbbell2": DUMBBELL_GRAPH,
}

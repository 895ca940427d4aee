"""Small labelled undirected graphs: parsing, invariants, enumeration.

Vertices are stored 0-indexed internally; the text formats (edge lists,
reports) use 1-indexed labels.  Adjacency is kept as one Python-int bitmask
per vertex, which makes subset scans and neighbourhood intersections cheap
for the small patterns this library analyses and still scales to host
graphs with a couple of thousand vertices.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

MAX_SUBSET_SCAN = 16      # 2^v subset scans stay <= 65536
MAX_AUT_SCAN = 10         # factorial permutation scan is fine up to here
MAX_CANONICAL = 8         # full-permutation canonical forms
MAX_ENUMERATION = 7       # graph classes on <= 7 vertices


class Graph:
    """Simple undirected graph on vertices 0..n-1."""

    __slots__ = ("n", "_adj", "_edges", "_edge_count")

    def __init__(self, n, edges=()):
        if n < 1:
            raise ValueError("graph needs at least one vertex")
        adj = [0] * n
        seen = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            e = (u, v) if u < v else (v, u)
            if e in seen:
                raise ValueError(f"duplicate edge {e}")
            seen.add(e)
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self._adj = tuple(adj)
        self._edges = tuple(sorted(seen))
        self._edge_count = len(seen)

    @classmethod
    def _from_adjacency(cls, n, adj):
        # Trusted constructor for programmatically built (symmetric, loop-free)
        # adjacency; skips edge materialisation so big hosts stay cheap.
        g = object.__new__(cls)
        g.n = n
        g._adj = tuple(adj)
        g._edges = None
        g._edge_count = None
        return g

    @property
    def adj(self):
        return self._adj

    @property
    def edges(self):
        if self._edges is None:
            out = []
            for u in range(self.n):
                m = self._adj[u] >> (u + 1)
                base = u + 1
                while m:
                    low = m & -m
                    out.append((u, base + low.bit_length() - 1))
                    m ^= low
            self._edges = tuple(out)
        return self._edges

    @property
    def edge_count(self):
        if self._edge_count is None:
            self._edge_count = sum(a.bit_count() for a in self._adj) // 2
        return self._edge_count

    def degree(self, u):
        return self._adj[u].bit_count()

    def has_edge(self, u, v):
        return bool(self._adj[u] >> v & 1)

    @property
    def has_isolated_vertices(self):
        return any(a == 0 for a in self._adj)

    def relabel(self, perm):
        """Graph with vertex u renamed to perm[u]."""
        return Graph(self.n, [(perm[u], perm[v]) for u, v in self.edges])

    def edge_list_text(self):
        """1-indexed edge dump in the parse_edge_list format."""
        body = ",".join(f"{u + 1}-{v + 1}" for u, v in self.edges)
        return f"n={self.n};{body}" if self.has_isolated_vertices or not body else body

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self._adj == other._adj

    def __hash__(self):
        return hash((self.n, self._adj))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={list(self.edges)})"


@dataclass(frozen=True)
class IndependenceCensus:
    """Counts of independent sets by size, from an exhaustive subset scan."""

    counts: tuple          # i_0 .. i_n
    alpha: int             # largest size with a nonzero count
    max_sets: int          # number of independent sets of size alpha


@dataclass(frozen=True)
class GraphInvariants:
    alpha: int
    max_independent_set_count: int
    independent_counts: tuple
    automorphism_count: int


# ---------------------------------------------------------------------------
# parsing / formatting

_TOKEN = re.compile(r"^(\d+)-(\d+)$")


def parse_edge_list(text: str) -> Graph:
    """Parse comma-separated 1-indexed "a-b" pairs, optional "n=k;" prefix."""
    text = text.strip()
    declared = None
    if text.startswith("n="):
        head, sep, rest = text.partition(";")
        if not sep:
            raise ValueError("missing ';' after n= prefix")
        try:
            declared = int(head[2:])
        except ValueError:
            raise ValueError(f"bad vertex count {head!r}") from None
        if declared < 1:
            raise ValueError("declared vertex count must be positive")
        text = rest.strip()
    edges = []
    if text:
        for token in text.split(","):
            token = token.strip()
            m = _TOKEN.match(token)
            if not m:
                raise ValueError(f"malformed edge token {token!r}")
            u, v = int(m.group(1)), int(m.group(2))
            if u < 1 or v < 1:
                raise ValueError(f"vertex labels are 1-indexed, got {token!r}")
            if u == v:
                raise ValueError(f"self-loop {token!r}")
            if declared is not None and max(u, v) > declared:
                raise ValueError(f"label in {token!r} exceeds declared n={declared}")
            edges.append((u - 1, v - 1))
    elif declared is None:
        raise ValueError("empty edge list without declared vertex count")
    n = declared if declared is not None else max(max(e) for e in edges) + 1
    return Graph(n, edges)


def parse_graph6(text: str) -> Graph:
    """Decode a graph6 string (single-byte size form, v <= 62)."""
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise ValueError("empty graph6 string")
    data = [ord(c) - 63 for c in s]
    if any(d < 0 or d > 63 for d in data):
        raise ValueError("graph6 byte out of range")
    n = data[0]
    if n > 62:
        raise ValueError("multi-byte graph6 sizes are not supported")
    if n == 0:
        raise ValueError("graph6 string encodes an empty graph")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(data) - 1 != need:
        raise ValueError(f"graph6 bit field has {len(data) - 1} bytes, expected {need}")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = data[1 + k // 6]
            if byte >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    return Graph(n, edges)


def write_graph6(g: Graph) -> str:
    """Encode in graph6 (column-major upper-triangle bits, 6 per byte)."""
    if g.n > 62:
        raise ValueError("graph6 single-byte form needs v <= 62")
    bits = []
    for j in range(1, g.n):
        for i in range(j):
            bits.append(1 if g.has_edge(i, j) else 0)
    out = [chr(g.n + 63)]
    for k in range(0, len(bits), 6):
        chunk = bits[k:k + 6] + [0] * (6 - len(bits[k:k + 6]))
        val = 0
        for b in chunk:
            val = val << 1 | b
        out.append(chr(val + 63))
    return "".join(out)


# ---------------------------------------------------------------------------
# constructors

def empty_graph(n: int) -> Graph:
    return Graph(n)


def complete_graph(k: int) -> Graph:
    return Graph(k, list(itertools.combinations(range(k), 2)))


def path_graph(edges: int) -> Graph:
    """Path with the given number of edges (so edges+1 vertices)."""
    if edges < 1:
        raise ValueError("path needs at least one edge")
    return Graph(edges + 1, [(i, i + 1) for i in range(edges)])


def cycle_graph(k: int) -> Graph:
    if k < 3:
        raise ValueError("cycle needs at least three vertices")
    return Graph(k, [(i, (i + 1) % k) for i in range(k)])


def star_graph(leaves: int) -> Graph:
    if leaves < 1:
        raise ValueError("star needs at least one leaf")
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def disjoint_union(a: Graph, b: Graph) -> Graph:
    edges = list(a.edges) + [(u + a.n, v + a.n) for u, v in b.edges]
    return Graph(a.n + b.n, edges)


def clique_with_pendant_star(a: int, b: int) -> Graph:
    """Clique K_a, a bridge vertex tied to one clique vertex, and b leaves
    hanging off the bridge.

    These are the graphs whose fractional independence number b + a/2
    strictly exceeds both the independence number b + 1 and half the vertex
    count; the smallest, at a=3 and b=2, is the 6-vertex builtin ``G6``.
    """
    if a < 3:
        raise ValueError("clique size must be at least 3")
    if b < 2:
        raise ValueError("need at least 2 pendant leaves")
    edges = list(itertools.combinations(range(a), 2))
    u = a
    edges.append((a - 1, u))
    edges.extend((u, u + 1 + i) for i in range(b))
    return Graph(a + b + 1, edges)


_BUILTIN = re.compile(r"^(P|K|C|star)(\d+)$", re.IGNORECASE)


def builtin_graph(name: str) -> Graph:
    """Named graphs for the CLI: P<l>, K<k>, C<k>, star<k>, G6."""
    if name.upper() == "G6":
        return parse_edge_list("1-2,1-3,2-3,3-4,4-5,4-6")
    m = _BUILTIN.match(name.strip())
    if not m:
        raise ValueError(f"unknown builtin graph {name!r}")
    kind, k = m.group(1).lower(), int(m.group(2))
    if kind == "p":
        return path_graph(k)
    if kind == "k":
        return complete_graph(k)
    if kind == "c":
        return cycle_graph(k)
    return star_graph(k)


# ---------------------------------------------------------------------------
# invariants

def is_connected(g: Graph) -> bool:
    if g.n == 1:
        return True
    seen = 1
    frontier = 1
    while frontier:
        grow = 0
        m = frontier
        while m:
            low = m & -m
            grow |= g.adj[low.bit_length() - 1]
            m ^= low
        frontier = grow & ~seen
        seen |= frontier
    return seen == (1 << g.n) - 1


def independent_set_census(g: Graph) -> IndependenceCensus:
    """Exact i_0..i_n by scanning all 2^n vertex subsets."""
    n = g.n
    if n > MAX_SUBSET_SCAN:
        raise ValueError(f"subset scan limited to {MAX_SUBSET_SCAN} vertices")
    adj = g.adj
    ind = bytearray(1 << n)
    ind[0] = 1
    counts = [0] * (n + 1)
    counts[0] = 1
    for mask in range(1, 1 << n):
        low = mask & -mask
        rest = mask ^ low
        if ind[rest] and not (adj[low.bit_length() - 1] & rest):
            ind[mask] = 1
            counts[mask.bit_count()] += 1
    alpha = max(k for k in range(n + 1) if counts[k])
    return IndependenceCensus(tuple(counts), alpha, counts[alpha])


def independence_number(g: Graph) -> int:
    return independent_set_census(g).alpha


def automorphism_count(g: Graph) -> int:
    """Number of adjacency-preserving permutations, by direct scan.

    Only permutations respecting the degree partition are tried; within a
    degree class the scan is exhaustive.
    """
    if g.n > MAX_AUT_SCAN:
        raise ValueError(f"automorphism scan limited to {MAX_AUT_SCAN} vertices")
    by_deg = {}
    for u in range(g.n):
        by_deg.setdefault(g.degree(u), []).append(u)
    classes = list(by_deg.values())
    edges = g.edges
    adj = g.adj
    count = 0
    perm = [0] * g.n
    for images in itertools.product(*(itertools.permutations(c) for c in classes)):
        for cls, img in zip(classes, images):
            for u, pu in zip(cls, img):
                perm[u] = pu
        if all(adj[perm[u]] >> perm[v] & 1 for u, v in edges):
            count += 1
    return count


def graph_invariants(g: Graph) -> GraphInvariants:
    census = independent_set_census(g)
    return GraphInvariants(
        alpha=census.alpha,
        max_independent_set_count=census.max_sets,
        independent_counts=census.counts,
        automorphism_count=automorphism_count(g),
    )


# ---------------------------------------------------------------------------
# canonical forms and enumeration up to isomorphism
#
# The canonical form of a graph on n <= 8 vertices is the minimum, over all
# vertex permutations, of the edge-set bitmask (bit j(j-1)/2 + i set when
# permuted vertices i < j are adjacent).  A batched numpy scan over the whole
# symmetric group is plenty fast at this size and trivially correct.

@lru_cache(maxsize=None)
def _all_perms(n):
    return np.array(list(itertools.permutations(range(n))), dtype=np.int64)


@lru_cache(maxsize=None)
def _pair_bit(n):
    idx = np.zeros((n, n), dtype=np.int64)
    for j in range(n):
        for i in range(j):
            idx[i, j] = idx[j, i] = j * (j - 1) // 2 + i
    return idx


def _canonical_mask(n, edges):
    if not edges:
        return 0
    perms = _all_perms(n)
    pair = _pair_bit(n)
    masks = np.zeros(len(perms), dtype=np.int64)
    one = np.int64(1)
    for u, v in edges:
        masks |= one << pair[perms[:, u], perms[:, v]]
    return int(masks.min())


def canonical_form(g: Graph):
    """(n, minimum edge bitmask); equal exactly for isomorphic graphs."""
    if g.n > MAX_CANONICAL:
        raise ValueError(f"canonical form limited to {MAX_CANONICAL} vertices")
    return (g.n, _canonical_mask(g.n, g.edges))


def graph_from_edge_mask(n: int, mask: int) -> Graph:
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if mask >> k & 1:
                edges.append((i, j))
            k += 1
    return Graph(n, edges)


def are_isomorphic(a: Graph, b: Graph) -> bool:
    if a.n != b.n or a.edge_count != b.edge_count:
        return False
    return canonical_form(a) == canonical_form(b)


@lru_cache(maxsize=None)
def _graph_classes(n):
    """Canonical masks of every isomorphism class on n vertices, grouped by
    edge count (built level by level: every class with k+1 edges arises from
    one with k edges by adding a single edge)."""
    pairs = [(i, j) for j in range(n) for i in range(j)]  # bit k <-> pairs[k]
    levels = [(0,)]
    current = {0}
    for _ in range(len(pairs)):
        nxt = set()
        for mask in current:
            edges = list(graph_from_edge_mask(n, mask).edges)
            for bit, pair in enumerate(pairs):
                if mask >> bit & 1:
                    continue
                nxt.add(_canonical_mask(n, edges + [pair]))
        current = nxt
        levels.append(tuple(sorted(nxt)))
    return levels


def enumerate_graph_classes(n: int, max_edges=None):
    """All isomorphism classes on exactly n labelled vertices (includes
    graphs with isolated vertices), ordered by edge count then mask."""
    if n > MAX_ENUMERATION:
        raise ValueError(f"enumeration limited to {MAX_ENUMERATION} vertices")
    levels = _graph_classes(n)
    if max_edges is not None:
        levels = levels[: max_edges + 1]
    for level in levels:
        for mask in level:
            yield graph_from_edge_mask(n, mask)


def enumerate_connected_graphs(max_v: int):
    """One representative per connected isomorphism class on 2..max_v
    vertices, in deterministic (n, edge count, mask) order."""
    if max_v > MAX_ENUMERATION:
        raise ValueError(f"enumeration limited to {MAX_ENUMERATION} vertices")
    for n in range(2, max_v + 1):
        for g in enumerate_graph_classes(n):
            if is_connected(g):
                yield g

"""Graphs, capacitated instances, domination predicates, and the file format.

Vertices are 0-based ids ``0..n-1`` in the library and 1-based in instance
files (DIMACS habit).  Vertex sets cross the public API as iterables of ids
and come back as frozensets; internally everything is an int bitmask.
"""

from __future__ import annotations

import io
from collections.abc import Iterable, Mapping
from dataclasses import dataclass

import numpy as np

from .bitsets import from_mask, iter_bits, to_mask


class ParseError(ValueError):
    """Malformed instance text; ``line`` is the 1-based offending line."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


class Graph:
    """Immutable undirected simple graph on vertices ``0..n-1``."""

    __slots__ = ("n", "_adj", "_m", "_csr")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        adj = [0] * n
        m = 0
        for u, v in edges:
            u, v = int(u), int(v)
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if (adj[u] >> v) & 1:
                raise ValueError(f"duplicate edge ({u},{v})")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
            m += 1
        self.n = n
        self._adj = tuple(adj)
        self._m = m
        self._csr = None

    # -- basic accessors ---------------------------------------------------

    @property
    def m(self) -> int:
        return self._m

    @property
    def adj_masks(self) -> tuple[int, ...]:
        """Per-vertex neighbour bitmasks."""
        return self._adj

    def neighbors(self, v: int) -> frozenset[int]:
        return from_mask(self._adj[v])

    def degree(self, v: int) -> int:
        return self._adj[v].bit_count()

    def closed_mask(self, v: int) -> int:
        return self._adj[v] | (1 << v)

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u in range(self.n):
            for v in iter_bits(self._adj[u]):
                if v > u:
                    out.append((u, v))
        return out

    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self._adj[u] >> v) & 1)

    def csr(self) -> tuple[np.ndarray, np.ndarray]:
        """Adjacency in CSR form (neighbour lists ascending), cached."""
        if self._csr is None:
            indptr = np.zeros(self.n + 1, dtype=np.int64)
            for v in range(self.n):
                indptr[v + 1] = indptr[v] + self.degree(v)
            flat = np.zeros(2 * self._m, dtype=np.int64)
            pos = indptr[:-1].copy()
            for u in range(self.n):
                for v in iter_bits(self._adj[u]):
                    flat[pos[u]] = v
                    pos[u] += 1
            self._csr = (indptr, flat)
        return self._csr

    def __eq__(self, other) -> bool:
        return (isinstance(other, Graph) and other.n == self.n
                and other._adj == self._adj)

    def __hash__(self) -> int:
        return hash((self.n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self._m})"


@dataclass(frozen=True)
class CapacitatedInstance:
    """A graph plus a non-negative capacity per vertex."""

    graph: Graph
    capacity: tuple[int, ...]

    def __post_init__(self):
        caps = tuple(int(c) for c in self.capacity)
        if len(caps) != self.graph.n:
            raise ValueError("capacity must be defined for every vertex")
        if any(c < 0 for c in caps):
            raise ValueError("capacities must be non-negative")
        object.__setattr__(self, "capacity", caps)

    @property
    def n(self) -> int:
        return self.graph.n


@dataclass(frozen=True)
class DominationWitness:
    """Assignment of every non-member to the member that dominates it."""

    assignment: Mapping[int, int]

    def domain(self) -> frozenset[int]:
        return frozenset(self.assignment)

    def loads(self) -> dict[int, int]:
        """How many vertices each member absorbs."""
        out: dict[int, int] = {}
        for w in self.assignment.values():
            out[w] = out.get(w, 0) + 1
        return out

    def is_valid_for(self, inst: CapacitatedInstance,
                     members: Iterable[int]) -> bool:
        s_mask = to_mask(members, inst.n)
        g = inst.graph
        dom = 0
        for v, w in self.assignment.items():
            if (s_mask >> v) & 1:
                return False
            if ((s_mask >> w) & 1) == 0:
                return False
            if not g.has_edge(v, w):
                return False
            dom |= 1 << v
        if dom | s_mask != g.full_mask() or dom & s_mask:
            return False
        for w, load in self.loads().items():
            if load > inst.capacity[w]:
                return False
        return True


# --------------------------------------------------------------------------
# predicates
# --------------------------------------------------------------------------

def closed_neighborhood(g: Graph, vertices: Iterable[int]) -> frozenset[int]:
    """The given vertices together with every neighbour of one of them."""
    mask = to_mask(vertices, g.n)
    out = mask
    for v in iter_bits(mask):
        out |= g.adj_masks[v]
    return from_mask(out)


def is_dominating(g: Graph, vertices: Iterable[int]) -> bool:
    mask = to_mask(vertices, g.n)
    out = mask
    for v in iter_bits(mask):
        out |= g.adj_masks[v]
    return out == g.full_mask()


# --------------------------------------------------------------------------
# instance file format
#
#   c <comment>
#   p cds <n> <m>
#   w <v> <cap>        optional; capacity defaults to 0, clamped to n-1
#   e <u> <v>          1-based endpoints
# --------------------------------------------------------------------------

def parse_instance(text: str | bytes) -> CapacitatedInstance:
    """Parse instance text; raises :class:`ParseError` naming the bad line."""
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    n = -1
    m_declared = -1
    caps: list[int] = []
    cap_seen: set[int] = set()
    edges: list[tuple[int, int]] = []
    edge_seen: set[tuple[int, int]] = set()
    last_line = 0
    for lineno, raw in enumerate(io.StringIO(text), 1):
        last_line = lineno
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        kind = parts[0]
        if kind == "p":
            if n >= 0:
                raise ParseError(lineno, "duplicate problem line")
            if len(parts) != 4 or parts[1] != "cds":
                raise ParseError(lineno, "expected 'p cds <n> <m>'")
            try:
                n, m_declared = int(parts[2]), int(parts[3])
            except ValueError:
                raise ParseError(lineno, "n and m must be integers") from None
            if n < 0 or m_declared < 0:
                raise ParseError(lineno, "n and m must be non-negative")
            caps = [0] * n
        elif kind == "w":
            if n < 0:
                raise ParseError(lineno, "capacity line before problem line")
            if len(parts) != 3:
                raise ParseError(lineno, "expected 'w <v> <cap>'")
            try:
                v, cap = int(parts[1]), int(parts[2])
            except ValueError:
                raise ParseError(lineno, "vertex and capacity must be integers") from None
            if not 1 <= v <= n:
                raise ParseError(lineno, f"vertex {v} out of range 1..{n}")
            if cap < 0:
                raise ParseError(lineno, "capacity must be non-negative")
            if v - 1 in cap_seen:
                raise ParseError(lineno, f"duplicate capacity for vertex {v}")
            cap_seen.add(v - 1)
            caps[v - 1] = min(cap, max(n - 1, 0))
        elif kind == "e":
            if n < 0:
                raise ParseError(lineno, "edge line before problem line")
            if len(parts) != 3:
                raise ParseError(lineno, "expected 'e <u> <v>'")
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise ParseError(lineno, "endpoints must be integers") from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise ParseError(lineno, f"edge ({u},{v}) out of range 1..{n}")
            if u == v:
                raise ParseError(lineno, f"self-loop at vertex {u}")
            key = (min(u, v) - 1, max(u, v) - 1)
            if key in edge_seen:
                raise ParseError(lineno, f"duplicate edge ({u},{v})")
            edge_seen.add(key)
            edges.append(key)
        else:
            raise ParseError(lineno, f"unrecognized line type {kind!r}")
    if n < 0:
        raise ParseError(last_line or 1, "missing problem line")
    if len(edges) != m_declared:
        raise ParseError(last_line or 1,
                         f"declared m={m_declared} but found {len(edges)} edges")
    return CapacitatedInstance(Graph(n, edges), tuple(caps))


def serialize_instance(inst: CapacitatedInstance) -> str:
    """Canonical text form; ``parse_instance`` round-trips it exactly."""
    out = [f"p cds {inst.n} {inst.graph.m}"]
    for v, cap in enumerate(inst.capacity):
        if cap > 0:
            out.append(f"w {v + 1} {cap}")
    for u, v in inst.graph.edges():
        out.append(f"e {u + 1} {v + 1}")
    return "\n".join(out) + "\n"


def load_instance(path) -> CapacitatedInstance:
    with open(path, "rb") as fh:
        return parse_instance(fh.read())

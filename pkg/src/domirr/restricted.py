"""Restricted capacitated domination, solved exactly via maximum matching.

The restriction: a *forced core* of vertices must belong to the solution, and
every member outside the core may absorb at most one dominated vertex.  This
variant collapses to maximum matching in a *copy graph* that expands each
core vertex into one node per unit of capacity; the optimum size is
``n - (maximum matching cardinality)``, and the two translations below map
solutions to matchings and back, preserving that identity in both directions.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass

from .bitsets import to_mask
from .graph import CapacitatedInstance, DominationWitness, Graph
from .matching import Matching, max_matching


@dataclass(frozen=True)
class RestrictedInstance:
    inst: CapacitatedInstance
    forced: frozenset[int]

    def __post_init__(self):
        forced = frozenset(int(v) for v in self.forced)
        to_mask(forced, self.inst.n)  # range check
        object.__setattr__(self, "forced", forced)

    @property
    def n(self) -> int:
        return self.inst.n


@dataclass(frozen=True)
class CopyGraph:
    """The expansion of an instance around its forced core.

    Node ids: every non-core vertex keeps one *plain* node (ascending vertex
    order), then each core vertex u contributes exactly c(u) *copy* nodes.
    Edges: plain-plain where the original edge survives a positive combined
    capacity; plain-copy wherever the original vertices are adjacent; never
    copy-copy.
    """

    graph: Graph
    origin: tuple[int, ...]       # node -> original vertex
    copy_index: tuple[int, ...]   # node -> copy number, -1 for plain nodes
    plain_node: dict[int, int]    # vertex outside the core -> node id
    copy_nodes: dict[int, tuple[int, ...]]  # core vertex -> its node ids

    def describe(self, node: int) -> str:
        v = self.origin[node]
        i = self.copy_index[node]
        return f"v{v}" if i < 0 else f"v{v}#{i}"


@dataclass(frozen=True)
class RestrictedSolution:
    members: frozenset[int]
    witness: DominationWitness


def validate_solution(ri: RestrictedInstance, sol: RestrictedSolution) -> None:
    """Raise ValueError unless ``sol`` satisfies every restricted invariant."""
    if not ri.forced <= sol.members:
        raise ValueError("solution must contain the forced core")
    if not sol.witness.is_valid_for(ri.inst, sol.members):
        raise ValueError("witness is not a valid domination assignment")
    for w, load in sol.witness.loads().items():
        if w not in ri.forced and load > 1:
            raise ValueError(
                f"non-core member {w} absorbs {load} vertices (limit 1)")


def build_copy_graph(ri: RestrictedInstance) -> CopyGraph:
    inst, forced = ri.inst, ri.forced
    g, caps = inst.graph, inst.capacity
    origin: list[int] = []
    copy_index: list[int] = []
    plain_node: dict[int, int] = {}
    copy_nodes: dict[int, tuple[int, ...]] = {}
    for v in range(g.n):
        if v not in forced:
            plain_node[v] = len(origin)
            origin.append(v)
            copy_index.append(-1)
    for u in sorted(forced):
        ids = []
        for i in range(caps[u]):
            ids.append(len(origin))
            origin.append(u)
            copy_index.append(i)
        copy_nodes[u] = tuple(ids)
    edges = []
    for u, v in g.edges():
        u_in, v_in = u in forced, v in forced
        if u_in and v_in:
            continue
        if not u_in and not v_in:
            if caps[u] + caps[v] > 0:
                edges.append((plain_node[u], plain_node[v]))
        else:
            core, plain = (u, v) if u_in else (v, u)
            for node in copy_nodes[core]:
                edges.append((plain_node[plain], node))
    return CopyGraph(Graph(len(origin), edges), tuple(origin),
                     tuple(copy_index), plain_node, copy_nodes)


def solution_to_matching(ri: RestrictedInstance,
                         sol: RestrictedSolution) -> Matching:
    """Translate a feasible solution into a copy-graph matching.

    Every dominated vertex contributes the edge to its dominator (to a fresh
    copy when the dominator is in the core, copies handed out in increasing
    dominated-vertex order), so the matching has exactly n - |members| edges.
    """
    validate_solution(ri, sol)
    cg = build_copy_graph(ri)
    cursor = {u: 0 for u in ri.forced}
    pairs = []
    for v in sorted(sol.witness.assignment):
        w = sol.witness.assignment[v]
        if w in ri.forced:
            node = cg.copy_nodes[w][cursor[w]]
            cursor[w] += 1
        else:
            node = cg.plain_node[w]
        pairs.append((cg.plain_node[v], node))
    return Matching.from_pairs(pairs)


def matching_to_solution(ri: RestrictedInstance, m: Matching,
                         cg: CopyGraph | None = None) -> RestrictedSolution:
    """Translate a copy-graph matching into a feasible solution.

    The core is always in; a copy-plain edge assigns the plain vertex to the
    copy's owner; a plain-plain edge puts one positive-capacity endpoint
    (lowest id on ties) into the solution dominating the other; unmatched
    plain vertices join the solution.  |members| = n - |m| exactly.
    """
    if cg is None:
        cg = build_copy_graph(ri)
    if not m.is_matching_of(cg.graph):
        raise ValueError("not a matching of the copy graph")
    caps = ri.inst.capacity
    members = set(ri.forced)
    assignment: dict[int, int] = {}
    matched_plains: set[int] = set()
    for a, b in sorted(m.edges):
        va, vb = cg.origin[a], cg.origin[b]
        a_copy, b_copy = cg.copy_index[a] >= 0, cg.copy_index[b] >= 0
        if a_copy or b_copy:
            core, plain = (va, vb) if a_copy else (vb, va)
            assignment[plain] = core
            matched_plains.add(plain)
        else:
            if caps[va] > 0 and (caps[vb] == 0 or va < vb):
                dominator, dominated = va, vb
            else:
                dominator, dominated = vb, va
            members.add(dominator)
            assignment[dominated] = dominator
            matched_plains.update((va, vb))
    for v in range(ri.n):
        if v not in ri.forced and v not in matched_plains:
            members.add(v)
    sol = RestrictedSolution(frozenset(members), DominationWitness(assignment))
    validate_solution(ri, sol)
    return sol


def solve_restricted(ri: RestrictedInstance) -> RestrictedSolution:
    """Minimum-size feasible solution (optimal by the matching identity)."""
    cg = build_copy_graph(ri)
    return matching_to_solution(ri, max_matching(cg.graph), cg)


def restricted_minimum_size(ri: RestrictedInstance) -> int:
    return len(solve_restricted(ri).members)


def forced_set(inst: CapacitatedInstance,
               vertices: Iterable[int]) -> RestrictedInstance:
    return RestrictedInstance(inst, frozenset(vertices))

"""Transposition families, per-vertex auxiliary graphs, and cycle lifting.

For a base vertex x and a family index i in {0..n}, the auxiliary graph
lives on the translates {t*x : t in family(n, i)}.  Two translates u, z
are adjacent when the supports of the edges {x,u} and {x,z} overlap in
exactly delta(i) points (0 for i = 0, 1 otherwise) and some vertex
w != x makes (u, w, z) a 2-path of the masked subgraph.  Adjacency is
established by an explicit scan over common neighbors, and every valid
connecting vertex w is stored with the edge, so a cycle found in the
auxiliary graph can be expanded into a genuine cycle of twice the
length in the mask (lift_cycle), with cheap validation.

The "nonedge" kind keeps only translates u with {u,x} absent from the
mask; it is the induced restriction of the "all" kind, built by the same
code path with a vertex filter.

Three counting checks over the full (x, i) sweep are packaged as
verify_identities:

- vertex_total (id "1"):   sum of aux vertex counts == 3 * n! * C(n,2),
  an equality independent of the mask.
- two_path_bound (id "2"): sum of aux edge counts >= number of 2-paths
  in the mask, i.e. sum over w of C(deg(w), 2).
- filtered_two_path_bound (id "8"): the "nonedge" variant plus the
  correction 4*(full squares) + 2*(three-edge squares) from the 4-cycle
  classification; asserted only for C_6-free masks.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import comb, factorial
from typing import Iterator

from .cycles import CycleWitness, _iter_cycles_raw
from .graph import SubgraphMask, degree_sequence, mask_neighbor_tables, transposition_graph
from .perms import Permutation, Transposition, all_transpositions
from .stats import four_cycle_class_counts

# delta(i): required support overlap of the two base edges, per family.
_DELTA = {0: 0}

KIND_ALL = "all"
KIND_NONEDGE = "nonedge"


@dataclass(frozen=True)
class TranspositionFamily:
    """Family index i and its transpositions in a fixed order."""

    i: int
    members: tuple[Transposition, ...]


def family(n: int, i: int) -> TranspositionFamily:
    """Family 0 is every transposition; family i >= 1 those moving point i."""
    if not 0 <= i <= n:
        raise ValueError(f"family index {i} out of range 0..{n}")
    if i == 0:
        return TranspositionFamily(0, tuple(all_transpositions(n)))
    members = tuple(Transposition(i, j) for j in range(1, n + 1) if j != i)
    return TranspositionFamily(i, members)


@dataclass(frozen=True, eq=False)
class AuxGraph:
    """Small explicit graph on the family translates of a base vertex."""

    n: int
    base_rank: int
    family_index: int
    kind: str
    vertex_ranks: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]
    connectors: dict[tuple[int, int], tuple[int, ...]] = field(repr=False)
    source: SubgraphMask = field(repr=False)

    @property
    def vertex_count(self) -> int:
        return len(self.vertex_ranks)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def base(self) -> Permutation:
        return transposition_graph(self.n).perm(self.base_rank)

    def adjacent(self, j: int, k: int) -> bool:
        return (min(j, k), max(j, k)) in self.connectors

    def neighbor_lists(self) -> list[tuple[int, ...]]:
        rows: list[list[int]] = [[] for _ in self.vertex_ranks]
        for j, k in self.edges:
            rows[j].append(k)
            rows[k].append(j)
        return [tuple(sorted(r)) for r in rows]


def build_aux(mask: SubgraphMask, x: Permutation, i: int, kind: str = KIND_ALL) -> AuxGraph:
    """Construct the auxiliary graph for base vertex x and family i."""
    g = transposition_graph(mask.n)
    _, madj = mask_neighbor_tables(mask)
    return _build_aux(g, mask, madj, g.rank(x), i, kind)


def iter_aux_graphs(mask: SubgraphMask, kind: str = KIND_ALL) -> Iterator[AuxGraph]:
    """All (n+1) * n! auxiliary graphs of the mask, base-major order."""
    g = transposition_graph(mask.n)
    _, madj = mask_neighbor_tables(mask)
    for xr in range(g.vertex_count):
        for i in range(mask.n + 1):
            yield _build_aux(g, mask, madj, xr, i, kind)


def _build_aux(g, mask: SubgraphMask, madj: list[int], xr: int, i: int, kind: str) -> AuxGraph:
    if kind not in (KIND_ALL, KIND_NONEDGE):
        raise ValueError(f"unknown aux kind {kind!r}")
    n = g.n
    fam = family(n, i)
    x = g.perm(xr)
    rank_of = g.rank_of
    verts: list[tuple[int, frozenset[int]]] = []
    for t in fam.members:
        u = rank_of[(t.as_permutation(n) * x).image]
        if kind == KIND_NONEDGE and (madj[xr] >> u) & 1:
            continue
        # supp({x, t*x}) equals supp(t), so the overlap test below runs
        # on the family members directly.
        verts.append((u, t.support()))
    delta = _DELTA.get(i, 1)
    full_adj = g.adjacency_bits
    full_neigh = g.neighbor_ranks
    edges: list[tuple[int, int]] = []
    connectors: dict[tuple[int, int], tuple[int, ...]] = {}
    for j in range(len(verts)):
        uj, sj = verts[j]
        for k in range(j + 1, len(verts)):
            uk, sk = verts[k]
            if len(sj & sk) != delta:
                continue
            ws = [
                w
                for w in full_neigh[uj]
                if w != xr
                and (full_adj[uk] >> w) & 1
                and (madj[uj] >> w) & 1
                and (madj[uk] >> w) & 1
            ]
            if ws:
                edges.append((j, k))
                connectors[(j, k)] = tuple(ws)
    return AuxGraph(
        n=n,
        base_rank=xr,
        family_index=i,
        kind=kind,
        vertex_ranks=tuple(u for u, _ in verts),
        edges=tuple(edges),
        connectors=connectors,
        source=mask,
    )


def cycles_in_aux(aux: AuxGraph, length: int) -> list[tuple[int, ...]]:
    """All cycles of the given length in the aux graph, as index tuples.

    Odd lengths are legitimate here (auxiliary graphs are not bipartite);
    length >= 3 required.
    """
    if length < 3:
        raise ValueError(f"aux cycles need length >= 3, got {length}")
    if aux.vertex_count < length:
        return []
    neigh = aux.neighbor_lists()
    adj = [0] * aux.vertex_count
    for j, k in aux.edges:
        adj[j] |= 1 << k
        adj[k] |= 1 << j
    return list(_iter_cycles_raw(neigh, adj, length))


def lift_cycle(mask: SubgraphMask, aux: AuxGraph, cycle: tuple[int, ...]) -> CycleWitness:
    """Expand an aux-graph cycle of length l into a 2l-cycle of the mask.

    Between consecutive translates the stored connecting vertices are
    assigned by depth-first choice with backtracking so that all of them
    are distinct; the assembled witness is validated against the mask
    before it is returned.  Failure to assemble or validate means the aux
    graph does not describe the mask it claims to come from.
    """
    if aux.source.n != mask.n or aux.source.bits != mask.bits:
        raise ValueError("aux graph was built from a different mask")
    l = len(cycle)
    if l < 3:
        raise ValueError(f"lift needs an aux cycle of length >= 3, got {l}")
    if len(set(cycle)) != l:
        raise ValueError("aux cycle vertices must be distinct")
    options: list[tuple[int, ...]] = []
    for j in range(l):
        a, b = cycle[j], cycle[(j + 1) % l]
        key = (min(a, b), max(a, b))
        if key not in aux.connectors:
            raise ValueError(f"aux vertices {a},{b} are not adjacent")
        options.append(aux.connectors[key])

    chosen: list[int] = []
    used: set[int] = set()

    def assign(j: int) -> bool:
        if j == l:
            return True
        for w in options[j]:
            if w not in used:
                used.add(w)
                chosen.append(w)
                if assign(j + 1):
                    return True
                used.remove(w)
                chosen.pop()
        return False

    if not assign(0):
        raise ValueError("aux graph inconsistent with mask: no distinct connector assignment")
    seq: list[int] = []
    for j in range(l):
        seq.append(aux.vertex_ranks[cycle[j]])
        seq.append(chosen[j])
    try:
        witness = CycleWitness.from_ranks(mask.n, seq)
        witness.validate(mask)
    except ValueError as exc:
        raise ValueError(f"aux graph inconsistent with mask: lifted witness invalid ({exc})") from exc
    return witness


# -- counting identities ---------------------------------------------------


@dataclass(frozen=True)
class IdentityReport:
    """Both sides of the three aux-graph counting checks."""

    n: int
    vertex_total: tuple[int, int]
    two_path_bound: tuple[int, int]
    filtered_two_path_bound: tuple[int, int]

    KEYS = {"1": "vertex_total", "2": "two_path_bound", "8": "filtered_two_path_bound"}

    @property
    def vertex_total_holds(self) -> bool:
        return self.vertex_total[0] == self.vertex_total[1]

    @property
    def two_path_bound_holds(self) -> bool:
        return self.two_path_bound[0] >= self.two_path_bound[1]

    @property
    def filtered_two_path_bound_holds(self) -> bool:
        return self.filtered_two_path_bound[0] >= self.filtered_two_path_bound[1]

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "vertex_total": {
                "lhs": self.vertex_total[0],
                "rhs": self.vertex_total[1],
                "holds": self.vertex_total_holds,
            },
            "two_path_bound": {
                "lhs": self.two_path_bound[0],
                "rhs": self.two_path_bound[1],
                "holds": self.two_path_bound_holds,
            },
            "filtered_two_path_bound": {
                "lhs": self.filtered_two_path_bound[0],
                "rhs": self.filtered_two_path_bound[1],
                "holds": self.filtered_two_path_bound_holds,
            },
        }


def verify_identities(mask: SubgraphMask) -> IdentityReport:
    """Run the three counting checks over every (x, i) auxiliary graph.

    Builds all (n+1) * n! aux graphs, so capped at n <= 4.
    """
    n = mask.n
    if n > 4:
        raise ValueError(f"identity sweep builds (n+1)*n! aux graphs; capped at n<=4, got {n}")
    g = transposition_graph(n)
    _, madj = mask_neighbor_tables(mask)
    vertex_lhs = 0
    edge_lhs = 0
    filtered_edge_lhs = 0
    for xr in range(g.vertex_count):
        for i in range(n + 1):
            aux = _build_aux(g, mask, madj, xr, i, KIND_ALL)
            vertex_lhs += aux.vertex_count
            edge_lhs += aux.edge_count
            # The nonedge kind is the induced restriction: count surviving edges.
            keep = [(madj[xr] >> u) & 1 == 0 for u in aux.vertex_ranks]
            filtered_edge_lhs += sum(1 for j, k in aux.edges if keep[j] and keep[k])
    vertex_rhs = 3 * factorial(n) * comb(n, 2)
    two_path_rhs = sum(comb(d, 2) for d in degree_sequence(mask))
    classes = four_cycle_class_counts(mask)
    correction = 4 * classes["full"] + 2 * classes["three_path"]
    return IdentityReport(
        n=n,
        vertex_total=(vertex_lhs, vertex_rhs),
        two_path_bound=(edge_lhs, two_path_rhs),
        filtered_two_path_bound=(filtered_edge_lhs + correction, two_path_rhs),
    )

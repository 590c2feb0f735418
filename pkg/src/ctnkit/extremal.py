"""Search for dense even-cycle-free spanning subgraphs of CT_n.

Two engines:

- exact_max_cycle_free: branch and bound over edge inclusion, n = 3 only
  (9 edges).  Edges are ordered by how many forbidden cycles they sit on,
  the bound is current + remaining, and the tree is exhausted, so the
  returned edge count is the true maximum.  Larger n is refused rather
  than silently approximated.
- local_search_max: seeded randomized greedy insertion followed by
  budgeted local moves (insert a random absent edge when that keeps the
  subgraph cycle-free, otherwise attempt a one-out/one-in swap).  The
  edge count never decreases, and identical (n, length, seed, budget)
  runs produce identical reports.

Every report is re-verified against the cycle search before it is
returned; heuristic results are lower bounds and say so via method.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .cycles import CycleWitness, _bfs_dist, cycles_of_length, find_cycle_of_length
from .graph import SubgraphMask, mask_neighbor_tables, transposition_graph

MAX_LOCAL_LENGTH = 10


@dataclass(frozen=True)
class SearchReport:
    n: int
    forbidden_length: int
    mask: SubgraphMask
    edges: int
    pi: Fraction
    method: str  # "exact" | "greedy" | "local"
    seed: int
    iterations: int
    verified: bool

    def to_dict(self) -> dict:
        from .graph import mask_to_dict

        return {
            "n": self.n,
            "forbidden_length": self.forbidden_length,
            "edges": self.edges,
            "pi": str(self.pi),
            "method": self.method,
            "seed": self.seed,
            "iterations": self.iterations,
            "verified": self.verified,
            "subgraph": mask_to_dict(self.mask),
        }


def verify_cycle_free(mask: SubgraphMask, length: int) -> tuple[bool, CycleWitness | None]:
    """True iff the mask has no cycle of the given length; witness otherwise."""
    found = find_cycle_of_length(mask, length)
    return found is None, found


def exact_max_cycle_free(n: int, length: int) -> SearchReport:
    """Certified maximum edge count over all cycle-free masks; n = 3 only."""
    if n != 3:
        raise ValueError(f"exact search is capped at n=3 (9 edges); got n={n}")
    g = transposition_graph(n)
    full = SubgraphMask.full(n)
    cycles = [frozenset(w.edge_ids()) for w in cycles_of_length(full, length)]
    e_total = g.edge_count

    per_edge = [0] * e_total
    for cyc in cycles:
        for e in cyc:
            per_edge[e] += 1
    order = sorted(range(e_total), key=lambda e: (-per_edge[e], e))
    cycles_by_edge: list[list[int]] = [[] for _ in range(e_total)]
    cycle_bits = [sum(1 << e for e in cyc) for cyc in cycles]
    for ci, cyc in enumerate(cycles):
        for e in cyc:
            cycles_by_edge[e].append(ci)

    best_bits = 0
    best_count = 0
    nodes = 0

    def descend(pos: int, bits: int, count: int) -> None:
        nonlocal best_bits, best_count, nodes
        nodes += 1
        if count + (e_total - pos) <= best_count:
            return
        if pos == e_total:
            best_bits, best_count = bits, count
            return
        e = order[pos]
        new_bits = bits | (1 << e)
        if all((cycle_bits[ci] & new_bits) != cycle_bits[ci] for ci in cycles_by_edge[e]):
            descend(pos + 1, new_bits, count + 1)
        descend(pos + 1, bits, count)

    descend(0, 0, 0)
    mask = SubgraphMask(n, best_bits)
    free, _ = verify_cycle_free(mask, length)
    return SearchReport(
        n=n,
        forbidden_length=length,
        mask=mask,
        edges=best_count,
        pi=Fraction(best_count, e_total),
        method="exact",
        seed=0,
        iterations=nodes,
        verified=free,
    )


def _insertion_closes_cycle(
    neigh: list[list[int]], adj: list[int], u: int, z: int, length: int
) -> bool:
    """Would adding edge {u,z} create a cycle of exactly this length?

    Looks only for simple paths of length-1 edges from u to z in the
    current subgraph (bounded DFS anchored at the new edge), so the check
    is local to the insertion.
    """
    steps = length - 1
    dist = _bfs_dist(neigh, z, steps)
    if dist[u] > steps:
        return False
    target_bit = 1 << z
    stack = [(u, 1 << u, steps)]
    while stack:
        v, visited, rem = stack.pop()
        for w in neigh[v]:
            if rem == 1:
                if w == z:
                    return True
                continue
            if (visited >> w) & 1 or w == z or dist[w] > rem - 1:
                continue
            stack.append((w, visited | (1 << w), rem - 1))
    return False


class _MaskBuilder:
    """Mutable adjacency state for the local search."""

    def __init__(self, n: int):
        g = transposition_graph(n)
        self.g = g
        self.bits = 0
        self.count = 0
        self.neigh: list[list[int]] = [[] for _ in range(g.vertex_count)]
        self.adj = [0] * g.vertex_count

    def has(self, e: int) -> bool:
        return (self.bits >> e) & 1 == 1

    def add(self, e: int) -> None:
        u, z = self.g.edge_endpoint_ranks[e]
        self.bits |= 1 << e
        self.count += 1
        self.neigh[u].append(z)
        self.neigh[z].append(u)
        self.adj[u] |= 1 << z
        self.adj[z] |= 1 << u

    def remove(self, e: int) -> None:
        u, z = self.g.edge_endpoint_ranks[e]
        self.bits &= ~(1 << e)
        self.count -= 1
        self.neigh[u].remove(z)
        self.neigh[z].remove(u)
        self.adj[u] &= ~(1 << z)
        self.adj[z] &= ~(1 << u)

    def insertable(self, e: int, length: int) -> bool:
        u, z = self.g.edge_endpoint_ranks[e]
        return not _insertion_closes_cycle(self.neigh, self.adj, u, z, length)


def local_search_max(n: int, length: int, seed: int, budget: int) -> SearchReport:
    """Seeded heuristic lower bound on the cycle-free maximum edge count."""
    if n > 5:
        raise ValueError(f"local search capped at n<=5, got {n}")
    if length > MAX_LOCAL_LENGTH:
        raise ValueError(f"local search capped at forbidden length {MAX_LOCAL_LENGTH}, got {length}")
    if budget < 0:
        raise ValueError("budget must be >= 0")
    g = transposition_graph(n)
    rng = random.Random(seed)
    state = _MaskBuilder(n)
    e_total = g.edge_count

    order = list(range(e_total))
    rng.shuffle(order)
    for e in order:
        if state.insertable(e, length):
            state.add(e)

    performed = 0
    for _ in range(budget):
        if state.count == e_total:
            break
        performed += 1
        # Draw an absent edge by rejection; deterministic under the seed.
        e_in = rng.randrange(e_total)
        while state.has(e_in):
            e_in = rng.randrange(e_total)
        if state.insertable(e_in, length):
            state.add(e_in)
            continue
        e_out = rng.randrange(e_total)
        while not state.has(e_out):
            e_out = rng.randrange(e_total)
        state.remove(e_out)
        if state.insertable(e_in, length):
            state.add(e_in)
        else:
            state.add(e_out)

    mask = SubgraphMask(n, state.bits)
    free, _ = verify_cycle_free(mask, length)
    return SearchReport(
        n=n,
        forbidden_length=length,
        mask=mask,
        edges=state.count,
        pi=Fraction(state.count, e_total),
        method="local" if budget > 0 else "greedy",
        seed=seed,
        iterations=performed,
        verified=free,
    )


def best_local_search(n: int, length: int, seeds: list[int], budget: int) -> SearchReport:
    """Run independent seeds and keep the winner by (edges desc, seed asc).

    The selection rule is deterministic, so running seeds in any order or
    concurrently yields the same report.
    """
    if not seeds:
        raise ValueError("need at least one seed")
    reports = [local_search_max(n, length, s, budget) for s in seeds]
    return min(reports, key=lambda r: (-r.edges, r.seed))


@dataclass(frozen=True)
class RamseyReport:
    n: int
    colors: int
    forbidden_length: int
    seed: int
    coloring: tuple[int, ...]
    monochromatic: tuple[int, CycleWitness] | None

    def to_dict(self) -> dict:
        mono = None
        if self.monochromatic is not None:
            color, witness = self.monochromatic
            mono = {"color": color, "witness": witness.to_one_line()}
        return {
            "n": self.n,
            "colors": self.colors,
            "forbidden_length": self.forbidden_length,
            "seed": self.seed,
            "coloring": list(self.coloring),
            "monochromatic": mono,
        }


def ramsey_experiment(
    n: int,
    colors: int,
    length: int,
    seed: int,
    coloring: list[int] | None = None,
) -> RamseyReport:
    """Color the edges and search each color class for a forbidden cycle.

    The coloring is uniform at random under the seed unless supplied;
    classes are scanned in ascending color order and the first
    monochromatic cycle found is reported.
    """
    if colors < 1:
        raise ValueError(f"need at least one color, got {colors}")
    g = transposition_graph(n)
    if coloring is None:
        rng = random.Random(seed)
        coloring = [rng.randrange(colors) for _ in range(g.edge_count)]
    else:
        coloring = list(coloring)
        if len(coloring) != g.edge_count:
            raise ValueError(f"coloring must assign all {g.edge_count} edges, got {len(coloring)}")
        if any(not 0 <= c < colors for c in coloring):
            raise ValueError(f"colors must lie in [0, {colors})")
    mono: tuple[int, CycleWitness] | None = None
    for color in range(colors):
        bits = 0
        for e, c in enumerate(coloring):
            if c == color:
                bits |= 1 << e
        witness = find_cycle_of_length(SubgraphMask(n, bits), length)
        if witness is not None:
            mono = (color, witness)
            break
    return RamseyReport(
        n=n,
        colors=colors,
        forbidden_length=length,
        seed=seed,
        coloring=tuple(coloring),
        monochromatic=mono,
    )

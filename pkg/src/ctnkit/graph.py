"""The complete transposition graph CT_n and its spanning-subgraph masks.

Vertices are the n! permutations of degree n, identified with their
Lehmer ranks (see perms.rank); x and y are adjacent iff y = t*x for a
transposition t, i.e. iff their one-line words differ by swapping the
entries at exactly two positions.  The graph is C(n,2)-regular and
bipartite with the parity classes as parts.

Edges get a canonical index: every edge has exactly one even-parity
endpoint u (parity flips across each edge), and the edge {u, t*u} is
numbered ``even_position(u) * C(n,2) + index(t)`` with transpositions
in lexicographic order.  A spanning subgraph is then just a bitset over
[0, e(CT_n)), the SubgraphMask.
"""
from __future__ import annotations

import csv
import itertools
import json
from dataclasses import dataclass
from functools import lru_cache
from math import comb, factorial
from typing import Iterable, Iterator, TextIO

from .perms import Permutation, Transposition, all_transpositions


class TranspositionGraph:
    """Immutable view of CT_n; all tables are built lazily and cached."""

    def __init__(self, n: int):
        if not 3 <= n <= 8:
            raise ValueError(f"CT_n supported for 3 <= n <= 8, got {n}")
        self.n = n
        self.vertex_count = factorial(n)
        self.transposition_count = comb(n, 2)
        self.edge_count = self.vertex_count * self.transposition_count // 2
        # 0-based position pairs, lexicographic; pair k is the support of
        # the k-th transposition and the two one-line positions it swaps.
        self.position_pairs: tuple[tuple[int, int], ...] = tuple(
            (a, b) for a in range(n) for b in range(a + 1, n)
        )
        self._perms: tuple[tuple[int, ...], ...] | None = None
        self._rank_of: dict[tuple[int, ...], int] | None = None
        self._parity: tuple[bool, ...] | None = None
        self._even_pos: tuple[int, ...] | None = None
        self._even_ranks: tuple[int, ...] | None = None
        self._neighbors: tuple[tuple[int, ...], ...] | None = None
        self._adjacency_bits: tuple[int, ...] | None = None
        self._edge_ends: tuple[tuple[int, int], ...] | None = None
        self._pair_index = {pair: k for k, pair in enumerate(self.position_pairs)}

    # -- vertex tables -------------------------------------------------

    @property
    def perms(self) -> tuple[tuple[int, ...], ...]:
        if self._perms is None:
            # itertools emits in lexicographic order, which is exactly the
            # Lehmer rank order used by Permutation.rank/unrank.
            self._perms = tuple(itertools.permutations(range(self.n)))
        return self._perms

    @property
    def rank_of(self) -> dict[tuple[int, ...], int]:
        if self._rank_of is None:
            self._rank_of = {p: i for i, p in enumerate(self.perms)}
        return self._rank_of

    def perm(self, rank: int) -> Permutation:
        return Permutation(self.perms[rank])

    def rank(self, p: Permutation) -> int:
        if p.n != self.n:
            raise ValueError(f"degree mismatch: vertex has degree {p.n}, graph is CT_{self.n}")
        return self.rank_of[p.image]

    @property
    def parity_by_rank(self) -> tuple[bool, ...]:
        """True entries mark even permutations."""
        if self._parity is None:
            self._parity = tuple(Permutation(p).is_even for p in self.perms)
        return self._parity

    @property
    def even_ranks(self) -> tuple[int, ...]:
        if self._even_ranks is None:
            self._even_ranks = tuple(r for r, e in enumerate(self.parity_by_rank) if e)
        return self._even_ranks

    @property
    def even_position(self) -> tuple[int, ...]:
        """Rank -> position among even ranks (-1 for odd ranks)."""
        if self._even_pos is None:
            pos = [-1] * self.vertex_count
            for i, r in enumerate(self.even_ranks):
                pos[r] = i
            self._even_pos = tuple(pos)
        return self._even_pos

    # -- adjacency -----------------------------------------------------

    @property
    def transposition_list(self) -> list[Transposition]:
        return all_transpositions(self.n)

    def neighbors(self, x: Permutation) -> list[Permutation]:
        """The C(n,2) vertices t*x over all transpositions t."""
        if x.n != self.n:
            raise ValueError(f"degree mismatch: vertex has degree {x.n}, graph is CT_{self.n}")
        out = []
        img = x.image
        for a, b in self.position_pairs:
            q = list(img)
            q[a], q[b] = q[b], q[a]
            out.append(Permutation(tuple(q)))
        return out

    @property
    def neighbor_ranks(self) -> tuple[tuple[int, ...], ...]:
        """Rank -> sorted tuple of neighbor ranks (full graph)."""
        if self._neighbors is None:
            rank_of = self.rank_of
            table = []
            for p in self.perms:
                row = []
                for a, b in self.position_pairs:
                    q = list(p)
                    q[a], q[b] = q[b], q[a]
                    row.append(rank_of[tuple(q)])
                row.sort()
                table.append(tuple(row))
            self._neighbors = tuple(table)
        return self._neighbors

    @property
    def adjacency_bits(self) -> tuple[int, ...]:
        """Rank -> bitmask of neighbor ranks (full graph)."""
        if self._adjacency_bits is None:
            bits = []
            for row in self.neighbor_ranks:
                b = 0
                for w in row:
                    b |= 1 << w
                bits.append(b)
            self._adjacency_bits = tuple(bits)
        return self._adjacency_bits

    def adjacent(self, u: Permutation, z: Permutation) -> bool:
        if u.n != z.n:
            raise ValueError(f"degree mismatch: {u.n} vs {z.n}")
        return sum(1 for i, j in zip(u.image, z.image) if i != j) == 2

    def edge_support(self, u: Permutation, z: Permutation) -> frozenset[int]:
        """Support of the transposition carrying u to z, as 1-based points.

        Equals the support of z*u^{-1}: the two one-line positions where
        the endpoints differ.
        """
        if u.n != z.n:
            raise ValueError(f"degree mismatch: {u.n} vs {z.n}")
        diff = [i + 1 for i, (a, b) in enumerate(zip(u.image, z.image)) if a != b]
        if len(diff) != 2:
            raise ValueError(f"{u.one_line()} and {z.one_line()} are not adjacent in CT_{self.n}")
        return frozenset(diff)

    def bipartition_class(self, x: Permutation) -> int:
        """0 for even parity, 1 for odd; every edge crosses the classes."""
        return 0 if x.is_even else 1

    # -- canonical edge indexing ----------------------------------------

    def edge_id(self, u: Permutation | int, z: Permutation | int) -> int:
        """Canonical index of the edge {u, z}; raises if not adjacent."""
        ur = u if isinstance(u, int) else self.rank(u)
        zr = z if isinstance(z, int) else self.rank(z)
        pu, pz = self.perms[ur], self.perms[zr]
        diff = [i for i in range(self.n) if pu[i] != pz[i]]
        if len(diff) != 2:
            raise ValueError(f"ranks {ur},{zr} are not adjacent in CT_{self.n}")
        even = ur if self.parity_by_rank[ur] else zr
        t_index = self._pair_index[(diff[0], diff[1])]
        return self.even_position[even] * self.transposition_count + t_index

    def edge_ends(self, edge_id: int) -> tuple[int, int]:
        """Decode to (even endpoint rank, odd endpoint rank)."""
        if not 0 <= edge_id < self.edge_count:
            raise ValueError(f"edge id {edge_id} out of range [0, {self.edge_count})")
        return self.edge_endpoint_ranks[edge_id]

    @property
    def edge_endpoint_ranks(self) -> tuple[tuple[int, int], ...]:
        if self._edge_ends is None:
            rank_of = self.rank_of
            ends = []
            for er in self.even_ranks:
                p = self.perms[er]
                for a, b in self.position_pairs:
                    q = list(p)
                    q[a], q[b] = q[b], q[a]
                    ends.append((er, rank_of[tuple(q)]))
            self._edge_ends = tuple(ends)
        return self._edge_ends

    def edge_support_by_id(self, edge_id: int) -> frozenset[int]:
        if not 0 <= edge_id < self.edge_count:
            raise ValueError(f"edge id {edge_id} out of range [0, {self.edge_count})")
        a, b = self.position_pairs[edge_id % self.transposition_count]
        return frozenset((a + 1, b + 1))


@lru_cache(maxsize=None)
def transposition_graph(n: int) -> TranspositionGraph:
    return TranspositionGraph(n)


@dataclass(frozen=True, slots=True)
class SubgraphMask:
    """A spanning subgraph of CT_n as a bitset over canonical edge ids."""

    n: int
    bits: int

    @staticmethod
    def empty(n: int) -> SubgraphMask:
        transposition_graph(n)  # validates n
        return SubgraphMask(n, 0)

    @staticmethod
    def full(n: int) -> SubgraphMask:
        g = transposition_graph(n)
        return SubgraphMask(n, (1 << g.edge_count) - 1)

    @staticmethod
    def from_edge_ids(n: int, edge_ids: Iterable[int]) -> SubgraphMask:
        g = transposition_graph(n)
        bits = 0
        for e in edge_ids:
            if not 0 <= e < g.edge_count:
                raise ValueError(f"edge id {e} out of range [0, {g.edge_count})")
            bits |= 1 << e
        return SubgraphMask(n, bits)

    @property
    def edge_total(self) -> int:
        return self.bits.bit_count()

    def has_edge(self, edge_id: int) -> bool:
        return (self.bits >> edge_id) & 1 == 1

    def with_edge(self, edge_id: int) -> SubgraphMask:
        return SubgraphMask(self.n, self.bits | (1 << edge_id))

    def without_edge(self, edge_id: int) -> SubgraphMask:
        return SubgraphMask(self.n, self.bits & ~(1 << edge_id))

    def edge_ids(self) -> Iterator[int]:
        bits = self.bits
        while bits:
            low = bits & -bits
            yield low.bit_length() - 1
            bits ^= low


def mask_neighbor_tables(mask: SubgraphMask) -> tuple[list[tuple[int, ...]], list[int]]:
    """Per-vertex neighbor lists and adjacency bitmasks restricted to the mask.

    Returns (neighbors, adjacency) where neighbors[r] is the sorted tuple of
    ranks adjacent to r inside the mask and adjacency[r] has bit w set iff
    {r, w} is a mask edge.
    """
    g = transposition_graph(mask.n)
    lists: list[list[int]] = [[] for _ in range(g.vertex_count)]
    adj = [0] * g.vertex_count
    ends = g.edge_endpoint_ranks
    for e in mask.edge_ids():
        u, z = ends[e]
        lists[u].append(z)
        lists[z].append(u)
        adj[u] |= 1 << z
        adj[z] |= 1 << u
    return [tuple(sorted(row)) for row in lists], adj


def degree_sequence(mask: SubgraphMask) -> list[int]:
    """Per-vertex degree inside the mask, indexed by vertex rank."""
    g = transposition_graph(mask.n)
    deg = [0] * g.vertex_count
    ends = g.edge_endpoint_ranks
    for e in mask.edge_ids():
        u, z = ends[e]
        deg[u] += 1
        deg[z] += 1
    return deg


def subgraph_support(mask: SubgraphMask) -> frozenset[int]:
    """Union of the edge supports over all mask edges (1-based points)."""
    g = transposition_graph(mask.n)
    m = g.transposition_count
    pts: set[int] = set()
    for e in mask.edge_ids():
        a, b = g.position_pairs[e % m]
        pts.add(a + 1)
        pts.add(b + 1)
        if len(pts) == g.n:
            break
    return frozenset(pts)


# -- persistence -------------------------------------------------------


def mask_to_dict(mask: SubgraphMask) -> dict:
    """JSON-ready form: {"n": n, "edges": [[even_one_line, odd_one_line], ...]}."""
    g = transposition_graph(mask.n)
    edges = []
    for e in mask.edge_ids():
        u, z = g.edge_endpoint_ranks[e]
        edges.append([g.perm(u).one_line(), g.perm(z).one_line()])
    return {"n": mask.n, "edges": edges}


def mask_from_dict(data: dict) -> SubgraphMask:
    """Parse and validate the JSON subgraph form; every pair must be adjacent."""
    try:
        n = int(data["n"])
        raw_edges = data["edges"]
    except (KeyError, TypeError) as exc:
        raise ValueError(f"subgraph JSON needs 'n' and 'edges': {exc}") from exc
    g = transposition_graph(n)
    bits = 0
    for pair in raw_edges:
        if len(pair) != 2:
            raise ValueError(f"edge entry {pair!r} is not a pair")
        u = Permutation.parse(str(pair[0]), n)
        z = Permutation.parse(str(pair[1]), n)
        bits |= 1 << g.edge_id(u, z)  # edge_id validates adjacency
    return SubgraphMask(n, bits)


def save_mask(mask: SubgraphMask, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(mask_to_dict(mask), fh, sort_keys=True, indent=2)
        fh.write("\n")


def load_mask(path: str) -> SubgraphMask:
    with open(path, encoding="utf-8") as fh:
        return mask_from_dict(json.load(fh))


def write_degree_csv(mask: SubgraphMask, out: TextIO) -> None:
    g = transposition_graph(mask.n)
    writer = csv.writer(out)
    writer.writerow(["rank", "permutation", "degree"])
    for r, d in enumerate(degree_sequence(mask)):
        writer.writerow([r, g.perm(r).one_line(), d])

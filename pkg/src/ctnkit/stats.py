"""Classification of mask intersections with 4-cycles, and density bounds.

Every 4-cycle H of CT_n meets a spanning subgraph G in one of six shapes:
no edge, one edge, two edges sharing a vertex, two vertex-disjoint edges,
a three-edge path, or all of H.  The chi vector is the distribution of
those shapes over the full (measured) 4-cycle census, as exact rationals.
Two identities hold with zero residual and are rechecked on every call:
the six ratios sum to 1, and the incidence-weighted combination

    chi1 + 2*(chi2_adj + chi2_opp) + 3*chi3 + 4*chi4 == 4 * pi

where pi = e(G)/e(CT_n).  The second identity only needs the per-edge
4-cycle count to be constant over edges (arc-transitivity), so it is
immune to the documented census-formula mismatch.

Which of the two two-edge shapes is "first" is not observable in any
identity (only their sum ever enters); this module fixes chi2_adj =
sharing a vertex, chi2_opp = vertex-disjoint, and reports say so.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import sqrt

from .cycles import CycleWitness, cycles_of_length
from .graph import SubgraphMask, transposition_graph

CLASS_NAMES = ("empty", "one_edge", "two_adjacent", "two_opposite", "three_path", "full")

CHI2_MAPPING = "chi2_adj counts two edges sharing a vertex; chi2_opp two vertex-disjoint edges"


@lru_cache(maxsize=None)
def _census_edge_ids(n: int) -> tuple[tuple[int, int, int, int], ...]:
    """Edge-id quadruples of every 4-cycle of CT_n, cached per degree."""
    full = SubgraphMask.full(n)
    return tuple(tuple(w.edge_ids()) for w in cycles_of_length(full, 4))


def _pattern_class(present: tuple[bool, bool, bool, bool]) -> str:
    count = sum(present)
    if count == 0:
        return "empty"
    if count == 1:
        return "one_edge"
    if count == 3:
        return "three_path"
    if count == 4:
        return "full"
    # Two edges: consecutive positions around the square share a vertex.
    first = present.index(True)
    return "two_opposite" if present[(first + 2) % 4] else "two_adjacent"


def classify_intersection(mask: SubgraphMask, square: CycleWitness) -> str:
    """Shape of the mask's intersection with one 4-cycle of CT_n."""
    if square.length != 4:
        raise ValueError(f"classification needs a 4-cycle, got length {square.length}")
    if square.n != mask.n:
        raise ValueError(f"degree mismatch: witness {square.n}, mask {mask.n}")
    present = tuple(mask.has_edge(e) for e in square.edge_ids())
    return _pattern_class(present)


def four_cycle_class_counts(mask: SubgraphMask) -> dict[str, int]:
    """Counts of the six intersection shapes over the full 4-cycle census."""
    if mask.n > 5:
        raise ValueError(f"classification sweeps the full census; capped at n<=5, got {mask.n}")
    counts = dict.fromkeys(CLASS_NAMES, 0)
    bits = mask.bits
    for eids in _census_edge_ids(mask.n):
        present = tuple(bool((bits >> e) & 1) for e in eids)
        counts[_pattern_class(present)] += 1
    return counts


@dataclass(frozen=True)
class ChiVector:
    """Exact intersection-shape ratios over the measured 4-cycle count."""

    chi0: Fraction
    chi1: Fraction
    chi2_adj: Fraction
    chi2_opp: Fraction
    chi3: Fraction
    chi4: Fraction
    pi: Fraction
    n4: int

    @property
    def sum_residual(self) -> Fraction:
        """Deviation of the six ratios from summing to 1; must be 0."""
        return self.chi0 + self.chi1 + self.chi2_adj + self.chi2_opp + self.chi3 + self.chi4 - 1

    @property
    def density_residual(self) -> Fraction:
        """Deviation of the incidence combination from 4*pi; must be 0."""
        combo = self.chi1 + 2 * (self.chi2_adj + self.chi2_opp) + 3 * self.chi3 + 4 * self.chi4
        return combo - 4 * self.pi

    def to_dict(self) -> dict:
        return {
            "chi0": str(self.chi0),
            "chi1": str(self.chi1),
            "chi2_adj": str(self.chi2_adj),
            "chi2_opp": str(self.chi2_opp),
            "chi3": str(self.chi3),
            "chi4": str(self.chi4),
            "pi": str(self.pi),
            "n4": self.n4,
            "sum_residual": str(self.sum_residual),
            "density_residual": str(self.density_residual),
            "chi2_mapping": CHI2_MAPPING,
        }


def chi_vector(mask: SubgraphMask) -> ChiVector:
    """Classify all 4-cycles against the mask; exact rational ratios."""
    if mask.n > 4:
        raise ValueError(f"chi vector enumerates the full census; capped at n<=4, got {mask.n}")
    g = transposition_graph(mask.n)
    counts = four_cycle_class_counts(mask)
    n4 = sum(counts.values())
    vec = ChiVector(
        chi0=Fraction(counts["empty"], n4),
        chi1=Fraction(counts["one_edge"], n4),
        chi2_adj=Fraction(counts["two_adjacent"], n4),
        chi2_opp=Fraction(counts["two_opposite"], n4),
        chi3=Fraction(counts["three_path"], n4),
        chi4=Fraction(counts["full"], n4),
        pi=Fraction(mask.edge_total, g.edge_count),
        n4=n4,
    )
    if vec.sum_residual != 0 or vec.density_residual != 0:
        raise AssertionError(f"chi identities violated: {vec.to_dict()}")
    return vec


# -- near-full squares per edge ---------------------------------------------


@dataclass(frozen=True)
class PathCompletionReport:
    """Per edge of CT_n: 4-cycles whose other three edges all lie in the mask.

    Equivalently, 4-cycles H through the edge with (H ∩ G) - e a
    three-edge path.  For a C_6-free mask this count never exceeds two
    on any edge; the check is informational otherwise.
    """

    n: int
    max_per_edge: int
    offending_edges: tuple[int, ...]  # edges with count > 2
    per_edge: tuple[int, ...]

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "max_per_edge": self.max_per_edge,
            "offending_edges": list(self.offending_edges),
            "cap_holds": self.max_per_edge <= 2,
        }


def path_completion_stats(mask: SubgraphMask) -> PathCompletionReport:
    g = transposition_graph(mask.n)
    if mask.n > 5:
        raise ValueError(f"sweeps the full census; capped at n<=5, got {mask.n}")
    per_edge = [0] * g.edge_count
    bits = mask.bits
    for eids in _census_edge_ids(mask.n):
        present = [bool((bits >> e) & 1) for e in eids]
        missing = present.count(False)
        if missing == 0:
            for e in eids:
                per_edge[e] += 1
        elif missing == 1:
            per_edge[eids[present.index(False)]] += 1
    top = max(per_edge) if per_edge else 0
    return PathCompletionReport(
        n=mask.n,
        max_per_edge=top,
        offending_edges=tuple(e for e, c in enumerate(per_edge) if c > 2),
        per_edge=tuple(per_edge),
    )


# -- density bound envelope ---------------------------------------------------


@dataclass(frozen=True)
class BoundReport:
    """One entry of the even-cycle-free density bound table.

    kind "exact_ratio" bounds hold at every n; "asymptotic_ratio" and
    "exponent_only" entries describe large-n behavior and are never
    asserted against finite data.
    """

    n: int | None
    l: int
    part: str
    kind: str
    value: Fraction | None
    display: str

    def csv_row(self) -> list[str]:
        short = {"exact_ratio": "exact", "asymptotic_ratio": "asymptotic", "exponent_only": "exponent"}
        return [str(self.l), short[self.kind], self.display]

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "l": self.l,
            "part": self.part,
            "kind": self.kind,
            "value": None if self.value is None else str(self.value),
            "display": self.display,
            "float": float(self.value) if self.value is not None else sqrt(2) - 1,
        }


def bound_envelope(n: int | None, l: int) -> BoundReport:
    """Density bound entry for forbidding cycles of length 2l.

    l=2: exact ratio 3/4.  l=3: asymptotic ratio sqrt(2)-1.  Even l>=4:
    density O(n^(-1+2/l)), reported as the exponent.  Odd l>=4: exponent
    -1/l for l=7, else -1/8 + 1/(4(l-3)).
    """
    if l < 2:
        raise ValueError(f"forbidden cycle length 2l needs l >= 2, got l={l}")
    if l == 2:
        return BoundReport(n, l, "iv", "exact_ratio", Fraction(3, 4), "3/4")
    if l == 3:
        return BoundReport(n, l, "iii", "asymptotic_ratio", None, "sqrt(2)-1")
    if l % 2 == 0:
        exp = Fraction(2 - l, l)
        return BoundReport(n, l, "i", "exponent_only", exp, str(exp))
    exp = Fraction(-1, 7) if l == 7 else Fraction(-1, 8) + Fraction(1, 4 * (l - 3))
    return BoundReport(n, l, "ii", "exponent_only", exp, str(exp))

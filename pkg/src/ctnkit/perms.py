"""Exact arithmetic on permutations of {1..n}.

Conventions used throughout the package:

- A permutation is stored as a tuple ``image`` of 0-based images, so
  ``image[i]`` is where point ``i`` goes.  Points are 1-based in every
  textual format and in every public point-set (supports); the 0-based
  view never leaks past the parser/formatter boundary.
- Products act on the right: ``a * b`` applies ``a`` first, then ``b``.
  This is pinned by the worked product (1,2)(1,3) = (1,2,3), which only
  comes out right under this convention (see test_perms).
- Degrees up to 8 are supported (8! = 40320); binary operations demand
  equal degree.

Two textual formats are parsed and emitted: one-line notation ("2134",
single digits, valid for all supported degrees) and cycle notation
("(1,2)(3,4)"); the identity prints as "id".
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from math import factorial

MAX_DEGREE = 8

_CYCLE_RE = re.compile(r"\(([0-9, ]+)\)")


@dataclass(frozen=True, slots=True)
class Permutation:
    """A permutation of {1..n}, stored as a 0-based image tuple."""

    image: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.image)

    # -- constructors ------------------------------------------------

    @staticmethod
    def identity(n: int) -> Permutation:
        _check_degree(n)
        return Permutation(tuple(range(n)))

    @staticmethod
    def from_image(points: list[int] | tuple[int, ...], *, one_based: bool = True) -> Permutation:
        """Build from an explicit image array, validating bijectivity."""
        img = tuple(p - 1 for p in points) if one_based else tuple(points)
        _check_degree(len(img))
        if sorted(img) != list(range(len(img))):
            raise ValueError(f"not a bijection on 1..{len(img)}: {points}")
        return Permutation(img)

    @staticmethod
    def transposition(n: int, a: int, b: int) -> Permutation:
        """The transposition swapping 1-based points a and b."""
        _check_degree(n)
        if a == b:
            raise ValueError("transposition needs two distinct points")
        if not (1 <= a <= n and 1 <= b <= n):
            raise ValueError(f"points {a},{b} out of range 1..{n}")
        img = list(range(n))
        img[a - 1], img[b - 1] = img[b - 1], img[a - 1]
        return Permutation(tuple(img))

    @staticmethod
    def unrank(n: int, rank: int) -> Permutation:
        """Inverse of :meth:`rank`; Lehmer decoding of ``rank`` in [0, n!).

        Rank 0 is the identity, rank n!-1 the reversal [n, n-1, ..., 1].
        """
        _check_degree(n)
        if not 0 <= rank < factorial(n):
            raise ValueError(f"rank {rank} out of range [0, {n}!)")
        avail = list(range(n))
        img = []
        r = rank
        for i in range(n, 0, -1):
            f = factorial(i - 1)
            img.append(avail.pop(r // f))
            r %= f
        return Permutation(tuple(img))

    @staticmethod
    def parse(text: str, n: int | None = None) -> Permutation:
        """Parse one-line ("2134") or cycle ("(1,2)(3,4)", "id") notation.

        One-line text fixes the degree by its length.  Cycle notation and
        "id" take the degree from ``n``, falling back to the largest moved
        point for cycles.
        """
        text = text.strip()
        if text.isdigit():
            p = Permutation.from_image([int(c) for c in text])
            if n is not None and p.n != n:
                raise ValueError(f"one-line text {text!r} has degree {p.n}, expected {n}")
            return p
        if n is None:
            if not _CYCLE_RE.search(text):
                raise ValueError(f"degree required to parse {text!r}")
            n = max(int(p) for grp in _CYCLE_RE.findall(text) for p in grp.replace(",", " ").split())
        return Permutation.parse_cycles(text, n)

    @staticmethod
    def parse_cycles(text: str, n: int) -> Permutation:
        """Parse cycle notation like "(1,2)(3,4)" as a degree-n permutation."""
        _check_degree(n)
        text = text.strip()
        if text in ("id", "()", ""):
            return Permutation.identity(n)
        img = list(range(n))
        consumed = _CYCLE_RE.sub("", text).strip()
        if consumed:
            raise ValueError(f"unrecognized cycle notation: {text!r}")
        for grp in _CYCLE_RE.findall(text):
            pts = [int(p) - 1 for p in grp.replace(",", " ").split()]
            if len(pts) < 2 or len(set(pts)) != len(pts) or any(not 0 <= p < n for p in pts):
                raise ValueError(f"bad cycle ({grp}) for degree {n}")
            for src, dst in zip(pts, pts[1:] + pts[:1]):
                img[src] = dst
        out = Permutation(tuple(img))
        if sorted(img) != list(range(n)):
            raise ValueError(f"cycles overlap in {text!r}")
        return out

    # -- group operations --------------------------------------------

    def __mul__(self, other: Permutation) -> Permutation:
        """Compose: apply ``self`` first, then ``other``."""
        if self.n != other.n:
            raise ValueError(f"degree mismatch: {self.n} vs {other.n}")
        oi = other.image
        return Permutation(tuple(oi[i] for i in self.image))

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for i, j in enumerate(self.image):
            inv[j] = i
        return Permutation(tuple(inv))

    def support(self) -> frozenset[int]:
        """The 1-based points this permutation moves."""
        return frozenset(i + 1 for i, j in enumerate(self.image) if i != j)

    @property
    def is_even(self) -> bool:
        """True iff the permutation is a product of an even number of transpositions."""
        seen = [False] * self.n
        transpositions = 0
        for i in range(self.n):
            if seen[i]:
                continue
            length = 0
            j = i
            while not seen[j]:
                seen[j] = True
                j = self.image[j]
                length += 1
            transpositions += length - 1
        return transpositions % 2 == 0

    @property
    def parity(self) -> str:
        return "even" if self.is_even else "odd"

    def is_transposition(self) -> bool:
        return len(self.support()) == 2

    def rank(self) -> int:
        """Lexicographic rank of the one-line word among all degree-n words."""
        img = self.image
        n = self.n
        rank = 0
        for i in range(n):
            smaller = sum(1 for j in range(i + 1, n) if img[j] < img[i])
            rank += smaller * factorial(n - 1 - i)
        return rank

    # -- formatting ---------------------------------------------------

    def one_line(self) -> str:
        return "".join(str(i + 1) for i in self.image)

    def cycle_string(self) -> str:
        cycles = []
        seen = [False] * self.n
        for i in range(self.n):
            if seen[i] or self.image[i] == i:
                seen[i] = True
                continue
            cyc = []
            j = i
            while not seen[j]:
                seen[j] = True
                cyc.append(j + 1)
                j = self.image[j]
            cycles.append("(" + ",".join(map(str, cyc)) + ")")
        return "".join(cycles) if cycles else "id"

    def __repr__(self) -> str:
        return f"Permutation[{self.one_line()}]"

    def __str__(self) -> str:
        return self.cycle_string()


@dataclass(frozen=True, order=True, slots=True)
class Transposition:
    """An unordered pair of 1-based points, stored sorted."""

    a: int
    b: int

    def __post_init__(self) -> None:
        if self.a == self.b:
            raise ValueError("transposition needs two distinct points")
        if self.a > self.b:
            lo, hi = self.b, self.a
            object.__setattr__(self, "a", lo)
            object.__setattr__(self, "b", hi)
        if self.a < 1:
            raise ValueError(f"points must be >= 1, got ({self.a},{self.b})")

    def as_permutation(self, n: int) -> Permutation:
        return Permutation.transposition(n, self.a, self.b)

    def support(self) -> frozenset[int]:
        return frozenset((self.a, self.b))

    def __str__(self) -> str:
        return f"({self.a},{self.b})"


def compose(f: Permutation, g: Permutation) -> Permutation:
    """Right-action product: apply f first, then g."""
    return f * g


def all_transpositions(n: int) -> list[Transposition]:
    """The C(n,2) transpositions of degree n in lexicographic order."""
    _check_degree(n)
    return [Transposition(a, b) for a in range(1, n + 1) for b in range(a + 1, n + 1)]


def _check_degree(n: int) -> None:
    if not 1 <= n <= MAX_DEGREE:
        raise ValueError(f"degree {n} outside supported range 1..{MAX_DEGREE}")

"""Exact linear algebra over GF(2) and zero-sum subset solvers.

Vectors are stored as Python ints used as bit masks, so XOR and rank run
wordwise regardless of dimension. All public operations are pure functions
over immutable values; collection indices are 1-based throughout.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import EffortExceeded, NotABasis, NotInSpan

__all__ = [
    "Gf2Vector",
    "Gf2Collection",
    "SubsetCertificate",
    "rank",
    "greedy_basis",
    "coordinates",
    "zero_sum_subcollection",
    "max_zero_sum_subset",
    "EXHAUSTIVE_LIMIT",
    "DEFAULT_EFFORT_LIMIT",
]

# Exhaustive scan up to 2^20 subsets; above that the solver switches to
# meet-in-the-middle on the complement.
EXHAUSTIVE_LIMIT = 20

# Node budget used when effort_limit=0. Covers the exhaustive range and
# meet-in-the-middle halves up to 2^21 each.
DEFAULT_EFFORT_LIMIT = 1 << 22


@dataclass(frozen=True)
class Gf2Vector:
    """A vector in GF(2)^dim; bit i of ``bits`` is coordinate i."""

    dim: int
    bits: int = 0

    def __post_init__(self):
        if self.dim < 0:
            raise ValueError("dim must be nonnegative")
        if not 0 <= self.bits < (1 << self.dim):
            raise ValueError(f"bits out of range for dimension {self.dim}")

    @classmethod
    def zero(cls, dim: int) -> Gf2Vector:
        return cls(dim, 0)

    @classmethod
    def from_bits(cls, coords: Iterable[int]) -> Gf2Vector:
        mask = 0
        n = 0
        for c in coords:
            if c not in (0, 1):
                raise ValueError("coordinates must be 0 or 1")
            mask |= c << n
            n += 1
        return cls(n, mask)

    @classmethod
    def from_string(cls, text: str) -> Gf2Vector:
        """Parse a '0'/'1' string; the first character is coordinate 0."""
        if text.strip("01"):
            raise ValueError(f"not a bit string: {text!r}")
        return cls(len(text), int(text[::-1], 2) if text else 0)

    def to01(self) -> str:
        return "".join("1" if (self.bits >> i) & 1 else "0" for i in range(self.dim))

    @property
    def is_zero(self) -> bool:
        return self.bits == 0

    @property
    def weight(self) -> int:
        return self.bits.bit_count()

    def __getitem__(self, i: int) -> int:
        if not 0 <= i < self.dim:
            raise IndexError(i)
        return (self.bits >> i) & 1

    def __xor__(self, other: Gf2Vector) -> Gf2Vector:
        if self.dim != other.dim:
            raise ValueError("dimension mismatch in XOR")
        return Gf2Vector(self.dim, self.bits ^ other.bits)

    def __str__(self) -> str:
        return self.to01()


@dataclass(frozen=True)
class Gf2Collection:
    """An ordered, 1-indexed list of GF(2) vectors of a common dimension."""

    dim: int
    vectors: tuple[Gf2Vector, ...]

    def __post_init__(self):
        for v in self.vectors:
            if v.dim != self.dim:
                raise ValueError(
                    f"vector of dimension {v.dim} in collection of dimension {self.dim}"
                )

    @classmethod
    def from_strings(cls, lines: Sequence[str]) -> Gf2Collection:
        vecs = tuple(Gf2Vector.from_string(s) for s in lines)
        if not vecs:
            return cls(0, ())
        dims = {v.dim for v in vecs}
        if len(dims) != 1:
            raise ValueError("vectors of mixed dimension")
        return cls(vecs[0].dim, vecs)

    def __len__(self) -> int:
        return len(self.vectors)

    def __iter__(self) -> Iterator[Gf2Vector]:
        return iter(self.vectors)

    def vector(self, index: int) -> Gf2Vector:
        """Return the vector at a 1-based index."""
        if not 1 <= index <= len(self.vectors):
            raise ValueError(f"index {index} out of range 1..{len(self.vectors)}")
        return self.vectors[index - 1]


@dataclass(frozen=True)
class SubsetCertificate:
    """A set of 1-based indices whose vectors XOR to zero."""

    indices: frozenset[int]

    @property
    def size(self) -> int:
        return len(self.indices)

    def sorted_indices(self) -> tuple[int, ...]:
        return tuple(sorted(self.indices))

    def __str__(self) -> str:
        return "{" + ",".join(str(i) for i in self.sorted_indices()) + "}"


class _Eliminator:
    """Incremental GF(2) row reduction.

    Each stored pivot row carries the combination of inserted originals it
    equals, so membership queries can be answered in terms of the originals.
    """

    def __init__(self):
        self._rows: dict[int, tuple[int, int]] = {}  # pivot bit -> (mask, combo)
        self._count = 0

    def _reduce(self, mask: int) -> tuple[int, int]:
        combo = 0
        while mask:
            pivot = mask.bit_length() - 1
            row = self._rows.get(pivot)
            if row is None:
                return mask, combo
            mask ^= row[0]
            combo ^= row[1]
        return 0, combo

    def insert(self, mask: int) -> bool:
        """Insert a vector; return True when it enlarges the span."""
        reduced, combo = self._reduce(mask)
        if reduced == 0:
            return False
        self._rows[reduced.bit_length() - 1] = (reduced, combo | (1 << self._count))
        self._count += 1
        return True

    def express(self, mask: int) -> int | None:
        """Combination of inserted originals equal to mask, or None."""
        reduced, combo = self._reduce(mask)
        return combo if reduced == 0 else None


def rank(collection: Gf2Collection) -> int:
    """Dimension of the span of the collection."""
    elim = _Eliminator()
    return sum(1 for v in collection.vectors if elim.insert(v.bits))


def greedy_basis(collection: Gf2Collection) -> tuple[int, ...]:
    """Lexicographically earliest basis of the span, as 1-based indices.

    Scans left to right and keeps each vector that is independent of the
    vectors already kept.
    """
    elim = _Eliminator()
    return tuple(
        i for i, v in enumerate(collection.vectors, start=1) if elim.insert(v.bits)
    )


def coordinates(
    collection: Gf2Collection, basis: Sequence[int], target: Gf2Vector
) -> frozenset[int]:
    """Unique subset of ``basis`` whose vectors XOR to ``target``.

    Raises NotABasis when the indexed vectors are dependent and NotInSpan
    when the target lies outside their span.
    """
    if target.dim != collection.dim:
        raise ValueError("target dimension differs from collection dimension")
    elim = _Eliminator()
    for idx in basis:
        if not elim.insert(collection.vector(idx).bits):
            raise NotABasis(f"vectors at indices {tuple(basis)} are dependent")
    combo = elim.express(target.bits)
    if combo is None:
        raise NotInSpan(f"vector {target} is outside the span of {tuple(basis)}")
    return frozenset(basis[i] for i in range(len(basis)) if (combo >> i) & 1)


def zero_sum_subcollection(collection: Gf2Collection) -> SubsetCertificate:
    """Constructive zero-sum subset of size >= length - rank.

    Takes the complement J of the greedy basis, expresses the XOR over J in
    that basis as a subset I, and returns I ∪ J. The certificate is empty
    exactly when only the empty subset sums to zero this way.
    """
    basis = greedy_basis(collection)
    basis_set = set(basis)
    rest = [i for i in range(1, len(collection) + 1) if i not in basis_set]
    acc = 0
    for i in rest:
        acc ^= collection.vector(i).bits
    inside = coordinates(collection, basis, Gf2Vector(collection.dim, acc))
    cert = SubsetCertificate(inside | frozenset(rest))
    acc = 0
    for i in cert.indices:
        acc ^= collection.vector(i).bits
    assert acc == 0, "certificate does not XOR to zero"
    return cert


def _subset_lex_less(a: int, b: int) -> bool:
    """True when index set a precedes b lexicographically (equal sizes)."""
    d = a ^ b
    return bool(a & (d & -d))


def _solve_exhaustive(masks: list[int]) -> int:
    """Best zero-sum subset mask by (max size, lex-least index set).

    Gray-code scan over all subsets; the running XOR changes by one vector
    per step.
    """
    m = len(masks)
    best_mask = 0
    best_size = 0
    acc = 0
    for i in range(1, 1 << m):
        lsb = i & -i
        acc ^= masks[lsb.bit_length() - 1]
        if acc == 0:
            g = i ^ (i >> 1)
            size = g.bit_count()
            if size > best_size or (
                size == best_size and _subset_lex_less(g, best_mask)
            ):
                best_mask = g
                best_size = size
    return best_mask


def _xor_table(masks: Sequence[int]) -> list[int]:
    """Subset XOR table: entry s is the XOR of masks selected by s."""
    table = [0] * (1 << len(masks))
    for i, v in enumerate(masks):
        lo = 1 << i
        table[lo : 2 * lo] = [x ^ v for x in table[:lo]]
    return table


def _chunk_ranges(total: int, parts: int) -> list[tuple[int, int]]:
    step = (total + parts - 1) // parts
    return [(lo, min(lo + step, total)) for lo in range(0, total, step)]


def _solve_mitm(masks: list[int], workers: int) -> int:
    """Best zero-sum subset via minimum-weight complement search.

    The complement must XOR to the whole collection's XOR; halves are the
    first and second index blocks. Among minimum complements the
    lexicographically largest one is chosen, which yields the
    lexicographically least maximum subset.
    """
    m = len(masks)
    total_xor = 0
    for v in masks:
        total_xor ^= v
    split = m // 2
    table_a = _xor_table(masks[:split])
    # Per XOR value: (min cardinality, lex-largest index set at that size).
    best_a: dict[int, tuple[int, int]] = {}
    for submask, x in enumerate(table_a):
        card = submask.bit_count()
        cur = best_a.get(x)
        if cur is None or card < cur[0] or (
            card == cur[0] and _subset_lex_less(cur[1], submask)
        ):
            best_a[x] = (card, submask)

    table_b = _xor_table(masks[split:])
    nb = len(table_b)

    def scan_min(lo: int, hi: int) -> int:
        best = m + 1
        for submask in range(lo, hi):
            hit = best_a.get(total_xor ^ table_b[submask])
            if hit is not None:
                total = hit[0] + submask.bit_count()
                if total < best:
                    best = total
        return best

    def scan_best(lo: int, hi: int, target: int) -> tuple[int, ...] | None:
        best: tuple[int, ...] | None = None
        for submask in range(lo, hi):
            hit = best_a.get(total_xor ^ table_b[submask])
            if hit is None or hit[0] + submask.bit_count() != target:
                continue
            a_mask = hit[1]
            cand = tuple(i + 1 for i in range(split) if (a_mask >> i) & 1) + tuple(
                i + split + 1 for i in range(m - split) if (submask >> i) & 1
            )
            if best is None or cand > best:
                best = cand
        return best

    if workers > 1:
        ranges = _chunk_ranges(nb, workers)
        with ThreadPoolExecutor(max_workers=workers) as pool:
            min_card = min(pool.map(lambda r: scan_min(*r), ranges))
            parts = pool.map(lambda r: scan_best(r[0], r[1], min_card), ranges)
        complement = max(p for p in parts if p is not None)
    else:
        min_card = scan_min(0, nb)
        found = scan_best(0, nb, min_card)
        assert found is not None
        complement = found

    full = (1 << m) - 1
    comp_mask = 0
    for i in complement:
        comp_mask |= 1 << (i - 1)
    return full ^ comp_mask


def max_zero_sum_subset(
    collection: Gf2Collection, effort_limit: int = 0, *, workers: int = 1
) -> SubsetCertificate:
    """Maximum-cardinality zero-sum subset, exact.

    Equivalently minimizes the complement, a minimum-weight coset leader
    problem for the XOR of the whole collection. Ties are broken toward the
    lexicographically smallest index set, so results do not depend on the
    worker count. Raises EffortExceeded (with the constructive certificate
    attached) when the node budget cannot cover an exact answer;
    effort_limit=0 selects the default budget.
    """
    if effort_limit < 0:
        raise ValueError("effort_limit must be nonnegative")
    budget = effort_limit or DEFAULT_EFFORT_LIMIT
    m = len(collection)
    masks = [v.bits for v in collection.vectors]
    if m <= EXHAUSTIVE_LIMIT:
        needed = 1 << m
        if needed > budget:
            raise EffortExceeded(needed, budget, zero_sum_subcollection(collection))
        best = _solve_exhaustive(masks)
    else:
        needed = (1 << (m // 2)) + (1 << (m - m // 2))
        if needed > budget:
            raise EffortExceeded(needed, budget, zero_sum_subcollection(collection))
        best = _solve_mitm(masks, workers)
    return SubsetCertificate(
        frozenset(i + 1 for i in range(m) if (best >> i) & 1)
    )

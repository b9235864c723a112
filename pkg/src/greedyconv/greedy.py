"""Greedy partition of the positive integers into arithmetic progressions.

For a length bound d, the integers 1, 2, 3, ... are assigned one at a time to
parts {m, 2m, ..., rm} with r <= d: each n joins the part with the smallest
leader m such that n is the next multiple of m and the part still has room;
if no part can take it, n starts a new part.  d = 1 gives all-singleton parts
(the unitary exponent partition) and d = 2 gives the ternary one.

Two constructions are provided.  ``build_greedy`` adds integers one by one,
which is the defining procedure; ``build_greedy_matrix`` prunes the d x N
multiplication table column by column.  They produce identical tables and
serve as independent cross-checks of each other.
"""

from array import array
from typing import Iterator, NamedTuple

DEFAULT_MEMORY_CAP = 2**31

_HEIGHT_LIMIT = 255  # heights are stored in one byte


class RankReport(NamedTuple):
    """Observed part size of a primitive leader.

    ``certified`` is True when the table extends to d * leader, beyond which
    the part can never grow (its largest possible element is d * leader).
    """

    leader: int
    rank: int
    certified: bool


class GreedyTable:
    """Completed greedy partition of [1..n_max] for length bound d.

    Immutable after construction; concurrent reads are safe.  Parts are stored
    as leader -> current size only, since a part's elements are exactly the
    consecutive multiples of its leader.
    """

    __slots__ = ("d", "n_max", "_leader", "_height", "_size")

    def __init__(self, d: int, n_max: int, leader: array, height: bytearray,
                 size: bytearray):
        self.d = d
        self.n_max = n_max
        self._leader = leader
        self._height = height
        self._size = size

    def __repr__(self) -> str:
        return f"GreedyTable(d={self.d}, n_max={self.n_max})"

    def _check(self, n: int) -> None:
        if not 1 <= n <= self.n_max:
            raise ValueError(f"n={n} outside table range [1..{self.n_max}]")

    def leader_of(self, n: int) -> int:
        """Smallest element of the part containing n (the type of n)."""
        self._check(n)
        return self._leader[n]

    # the leader is called the "type" in the convolution setting
    type_of = leader_of

    def height_of(self, n: int) -> int:
        """The k in [1..d] with n = k * leader_of(n)."""
        self._check(n)
        return self._height[n]

    def is_primitive(self, n: int) -> bool:
        """True iff n leads its own part."""
        self._check(n)
        return self._leader[n] == n

    def part_size_of(self, m: int) -> int:
        """Current number of elements in the part led by m (m must be a leader)."""
        self._check(m)
        size = self._size[m]
        if size == 0:
            raise ValueError(f"{m} is not primitive")
        return size

    def rank_of(self, m: int) -> RankReport:
        """Rank report for the primitive leader m."""
        size = self.part_size_of(m)
        return RankReport(m, size, certified=self.n_max >= self.d * m)

    def part_elements(self, m: int) -> tuple[int, ...]:
        """Elements of the part led by m, ascending."""
        size = self.part_size_of(m)
        return tuple(range(m, (size + 1) * m, m))

    def parts(self, limit: int | None = None) -> Iterator[tuple[int, int]]:
        """Yield (leader, current_size) for each leader, in leader order."""
        size = self._size
        count = 0
        for m in range(1, self.n_max + 1):
            if size[m]:
                yield m, size[m]
                count += 1
                if limit is not None and count >= limit:
                    return

    def primitives(self, rank: int | None = None, limit: int | None = None,
                   max_leader: int | None = None) -> list[int]:
        """Ascending primitive leaders, optionally filtered by certified rank.

        With a rank filter only leaders <= n_max // d are scanned, so every
        reported rank is final.
        """
        top = self.n_max if max_leader is None else min(max_leader, self.n_max)
        size = self._size
        if rank is not None:
            if not 1 <= rank <= self.d:
                raise ValueError(f"rank {rank} outside [1..{self.d}]")
            top = min(top, self.n_max // self.d)
            out = [m for m in range(1, top + 1) if size[m] == rank]
        else:
            out = [m for m in range(1, top + 1) if size[m]]
        return out[:limit] if limit is not None else out

    def primitive_mask(self, limit: int | None = None) -> bytearray:
        """Bitmap over [0..limit] marking primitive leaders (index 0 unused)."""
        top = self.n_max if limit is None else min(limit, self.n_max)
        mask = bytearray(top + 1)
        size = self._size
        for m in range(1, top + 1):
            if size[m]:
                mask[m] = 1
        return mask

    def height_mask(self, k: int, limit: int | None = None) -> bytearray:
        """Bitmap over [0..limit] marking elements of height k."""
        top = self.n_max if limit is None else min(limit, self.n_max)
        mask = bytearray(top + 1)
        height = self._height
        for n in range(1, top + 1):
            if height[n] == k:
                mask[n] = 1
        return mask

    def rank_mask(self, rank: int, limit: int) -> bytearray:
        """Bitmap over [0..limit] marking leaders with certified rank.

        Requires limit <= n_max // d so that every scanned leader is certified.
        """
        if limit > self.n_max // self.d:
            raise ValueError(
                f"ranks certified only for leaders <= {self.n_max // self.d}, "
                f"got limit {limit}")
        mask = bytearray(limit + 1)
        size = self._size
        for m in range(1, limit + 1):
            if size[m] == rank:
                mask[m] = 1
        return mask


def _validate_build(d: int, n_max: int, memory_cap: int) -> None:
    if d < 1:
        raise ValueError(f"length bound must be >= 1, got {d}")
    if d > _HEIGHT_LIMIT:
        raise ValueError(f"length bound must be <= {_HEIGHT_LIMIT}, got {d}")
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    if n_max > memory_cap:
        raise ValueError(
            f"n_max={n_max} exceeds the memory cap {memory_cap}; "
            "pass a larger memory_cap to allow this build")


def build_greedy(d: int, n_max: int,
                 memory_cap: int = DEFAULT_MEMORY_CAP) -> GreedyTable:
    """Build the greedy table by assigning 1, 2, ..., n_max in order.

    n joins the part of the smallest leader k such that n = q*k with
    2 <= q <= d and the part currently ends at n - k; otherwise n starts a
    new part.  Candidate leaders are found by scanning quotients q = d..2,
    which visits candidates in increasing-leader order.
    """
    _validate_build(d, n_max, memory_cap)
    leader = array("q", bytes(8 * (n_max + 1)))
    height = bytearray(n_max + 1)
    size = bytearray(n_max + 1)
    for n in range(1, n_max + 1):
        for q in range(d, 1, -1):
            if n % q == 0 and size[n // q] == q - 1:
                k = n // q
                leader[n] = k
                height[n] = q
                size[k] = q
                break
        else:
            leader[n] = n
            height[n] = 1
            size[n] = 1
    return GreedyTable(d, n_max, leader, height, size)


def build_greedy_matrix(d: int, n_max: int,
                        memory_cap: int = DEFAULT_MEMORY_CAP) -> GreedyTable:
    """Build the same table by pruning the d x n_max multiplication table.

    Column c holds c, 2c, ..., dc.  Columns are processed left to right; the
    first entry that already appeared in an earlier column truncates its
    column there.  Surviving first-row entries are the leaders.  Used as an
    independent oracle for ``build_greedy``.
    """
    _validate_build(d, n_max, memory_cap)
    if d * n_max > memory_cap:
        raise ValueError(
            f"d*n_max={d * n_max} exceeds the memory cap {memory_cap}")
    taken = bytearray(d * n_max + 1)
    leader = array("q", bytes(8 * (n_max + 1)))
    height = bytearray(n_max + 1)
    size = bytearray(n_max + 1)
    for c in range(1, n_max + 1):
        if taken[c]:
            continue
        for r in range(1, d + 1):
            v = r * c
            if taken[v]:
                break
            taken[v] = 1
            if v <= n_max:
                leader[v] = c
                height[v] = r
                size[c] = r
    return GreedyTable(d, n_max, leader, height, size)


def tables_equal(a: GreedyTable, b: GreedyTable) -> bool:
    """True iff two tables assign identical leaders and heights."""
    return (a.d == b.d and a.n_max == b.n_max and a._leader == b._leader
            and a._height == b._height and a._size == b._size)

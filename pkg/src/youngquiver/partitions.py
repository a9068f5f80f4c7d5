"""Young diagrams and the combinatorics indexing everything else.

A partition is a weakly decreasing tuple of positive row lengths; the empty
tuple is the empty diagram.  All values are immutable and hashable, so they
can be used as dictionary keys and shared freely between threads.

Text form: row lengths joined by commas ("3,1,1"), with "0" for the empty
diagram ("" is also accepted on input).
"""

from dataclasses import dataclass
from functools import cache, cached_property
from typing import Iterator

from .config import DEFAULT_BOUNDS, Bounds, check_bound


@dataclass(frozen=True)
class Partition:
    rows: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        rows = tuple(int(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        for i, r in enumerate(rows):
            if r <= 0:
                raise ValueError(f"row lengths must be positive: {rows}")
            if i and rows[i - 1] < r:
                raise ValueError(f"row lengths must be weakly decreasing: {rows}")

    @cached_property
    def size(self) -> int:
        return sum(self.rows)

    def row(self, r: int) -> int:
        """Length of 1-based row ``r``; 0 beyond the last row."""
        return self.rows[r - 1] if 1 <= r <= len(self.rows) else 0

    def contains(self, other: "Partition") -> bool:
        return all(self.row(r) >= v for r, v in enumerate(other.rows, start=1))

    def __str__(self) -> str:
        return ",".join(str(r) for r in self.rows) if self.rows else "0"


EMPTY = Partition(())


def parse_partition(text: str) -> Partition:
    stripped = text.strip()
    if stripped in ("", "0"):
        return EMPTY
    try:
        rows = tuple(int(part) for part in stripped.split(","))
    except ValueError as exc:
        raise ValueError(f"cannot parse partition {text!r}") from exc
    return Partition(rows)


@dataclass(frozen=True)
class Node:
    """A cell position; rows and columns are 1-based."""

    row: int
    col: int

    def __post_init__(self) -> None:
        if self.row < 1 or self.col < 1:
            raise ValueError(f"node coordinates must be >= 1: ({self.row}, {self.col})")


@dataclass(frozen=True)
class SkewClass:
    """Containment and strip structure of a skew pair.

    When ``contained`` is false the remaining fields are undefined (None).
    A column pair means some column holds two or more skew nodes; a row pair
    is the same for rows.
    """

    contained: bool
    size: int | None = None
    has_column_pair: bool | None = None
    has_row_pair: bool | None = None


@dataclass(frozen=True)
class Diamond:
    """Two distinct one-node extensions of ``bottom`` with their common top."""

    bottom: Partition
    mid_left: Partition
    mid_right: Partition
    top: Partition


def transpose(lam: Partition) -> Partition:
    if not lam.rows:
        return EMPTY
    cols = [0] * lam.rows[0]
    for length in lam.rows:
        for c in range(length):
            cols[c] += 1
    return Partition(tuple(cols))


def addable_nodes(lam: Partition) -> list[Node]:
    """Cells whose addition yields a partition, listed top row first."""
    nodes = []
    for r in range(1, len(lam.rows) + 2):
        if r == 1 or lam.row(r - 1) > lam.row(r):
            nodes.append(Node(r, lam.row(r) + 1))
    return nodes


def add_node(lam: Partition, node: Node) -> Partition:
    current = lam.row(node.row)
    if node.col <= current:
        raise ValueError(f"cell ({node.row},{node.col}) is already occupied in {lam}")
    if node.col != current + 1:
        raise ValueError(
            f"cell ({node.row},{node.col}) would leave a gap in row {node.row} of {lam}"
        )
    if node.row > 1 and lam.row(node.row - 1) <= current:
        raise ValueError(
            f"adding at ({node.row},{node.col}) would break weak decrease in {lam}"
        )
    rows = list(lam.rows)
    if node.row == len(rows) + 1:
        rows.append(1)
    else:
        rows[node.row - 1] += 1
    return Partition(tuple(rows))


def skew_classify(mu: Partition, lam: Partition) -> SkewClass:
    if not lam.contains(mu):
        return SkewClass(contained=False)
    row_pair = any(lam.row(r) - mu.row(r) >= 2 for r in range(1, len(lam.rows) + 1))
    lam_t, mu_t = transpose(lam), transpose(mu)
    col_pair = any(lam_t.row(c) - mu_t.row(c) >= 2 for c in range(1, len(lam_t.rows) + 1))
    return SkewClass(
        contained=True,
        size=lam.size - mu.size,
        has_column_pair=col_pair,
        has_row_pair=row_pair,
    )


def lattice_join(mu: Partition, nu: Partition) -> Partition:
    """Rowwise maximum: the smallest diagram containing both."""
    depth = max(len(mu.rows), len(nu.rows))
    return Partition(tuple(max(mu.row(r), nu.row(r)) for r in range(1, depth + 1)))


def diamonds_above(bottom: Partition) -> list[Diamond]:
    """All diamonds with the given bottom, each unordered mid-pair once.

    Distinct addable nodes sit in distinct rows and columns, so every pair of
    mids has the unique common top ``lattice_join(mid_a, mid_b)``.
    """
    mids = [add_node(bottom, node) for node in addable_nodes(bottom)]
    diamonds = []
    for i in range(len(mids)):
        for j in range(i + 1, len(mids)):
            left, right = sorted((mids[i], mids[j]), key=lambda p: p.rows)
            diamonds.append(Diamond(bottom, left, right, lattice_join(left, right)))
    return diamonds


@cache
def _partition_tuples(n: int, cap: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, cap), 0, -1):
        for rest in _partition_tuples(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions_of(n: int, bounds: Bounds = DEFAULT_BOUNDS) -> list[Partition]:
    """All partitions of ``n`` in reverse lexicographic order."""
    if n < 0:
        raise ValueError("partition size must be non-negative")
    check_bound(n, bounds.max_partition_size, "partition size")
    return [Partition(rows) for rows in _partition_tuples(n, n)]


def partitions_up_to(max_size: int, bounds: Bounds = DEFAULT_BOUNDS) -> list[Partition]:
    """Partitions of every size up to ``max_size``, smaller sizes first."""
    out: list[Partition] = []
    for k in range(max_size + 1):
        out.extend(partitions_of(k, bounds))
    return out


def subdiagrams(lam: Partition) -> list[Partition]:
    """All partitions contained in ``lam``, in reverse lexicographic order."""

    def rec(r: int, prev: int) -> Iterator[tuple[int, ...]]:
        if r > len(lam.rows):
            yield ()
            return
        for v in range(min(lam.rows[r - 1], prev), 0, -1):
            for rest in rec(r + 1, v):
                yield (v,) + rest
        yield ()

    return [Partition(rows) for rows in rec(1, lam.rows[0] if lam.rows else 0)]


def skew_nodes(mu: Partition, lam: Partition) -> list[Node]:
    """Cells of lam not in mu; requires containment."""
    if not lam.contains(mu):
        raise ValueError(f"{lam} does not contain {mu}")
    return [
        Node(r, c)
        for r in range(1, len(lam.rows) + 1)
        for c in range(mu.row(r) + 1, lam.row(r) + 1)
    ]

"""The Young lattice as a quiver, with and without the column relations.

Hom spaces of the column-relation category are at most one-dimensional, so a
morphism space is represented by its dimension (0 or 1) together with the
degree; no path algebra is ever materialized.  The degree of a morphism is
the node-count difference between target and source.
"""

from dataclasses import dataclass
from typing import Callable

from .config import DEFAULT_BOUNDS, Bounds, check_bound
from .partitions import (
    Partition,
    add_node,
    addable_nodes,
    partitions_of,
    skew_classify,
)


@dataclass(frozen=True)
class HomSpace:
    source: Partition
    target: Partition
    dimension: int
    degree: int


@dataclass(frozen=True)
class QuiverSlice:
    """All diagrams up to a size bound with the one-node-addition arrows."""

    max_size: int
    nodes: tuple[Partition, ...]
    arrows: tuple[tuple[Partition, Partition], ...]


def hom_dim_C(mu: Partition, lam: Partition) -> int:
    """1 iff lam contains mu and the skew shape is a horizontal strip
    (no two skew nodes in one column), else 0."""
    sk = skew_classify(mu, lam)
    return 1 if sk.contained and not sk.has_column_pair else 0


def hom_dim_Cprime_mod_J(mu: Partition, lam: Partition) -> int:
    """1 iff lam contains mu and the skew shape has neither a same-column
    pair nor a same-row pair (a rook strip), else 0."""
    sk = skew_classify(mu, lam)
    return 1 if sk.contained and not sk.has_column_pair and not sk.has_row_pair else 0


def hom_space(mu: Partition, lam: Partition) -> HomSpace:
    return HomSpace(mu, lam, hom_dim_C(mu, lam), lam.size - mu.size)


def quiver_slice(max_size: int, bounds: Bounds = DEFAULT_BOUNDS) -> QuiverSlice:
    check_bound(max_size, bounds.max_partition_size, "quiver slice size")
    nodes: list[Partition] = []
    for k in range(max_size + 1):
        nodes.extend(partitions_of(k, bounds))
    arrows = [
        (node, add_node(node, cell))
        for node in nodes
        if node.size < max_size
        for cell in addable_nodes(node)
    ]
    return QuiverSlice(max_size, tuple(nodes), tuple(arrows))


def projective_graded_dims(
    lam: Partition, max_degree: int, bounds: Bounds = DEFAULT_BOUNDS
) -> dict[int, list[tuple[Partition, int]]]:
    """Graded support of the projective generated at ``lam``: for each degree
    d, every diagram of size |lam|+d with its 0/1 hom dimension from lam."""
    out: dict[int, list[tuple[Partition, int]]] = {}
    for d in range(max_degree + 1):
        out[d] = [(mu, hom_dim_C(lam, mu)) for mu in partitions_of(lam.size + d, bounds)]
    return out


def to_dot(slice_: QuiverSlice, sign_of: Callable[[Partition, Partition], int] | None = None) -> str:
    """DOT rendering; arrows get +1/-1 labels when a sign function is given."""
    lines = ["digraph young_lattice {"]
    for node in slice_.nodes:
        lines.append(f'  "{node}";')
    for source, target in slice_.arrows:
        if sign_of is None:
            lines.append(f'  "{source}" -> "{target}";')
        else:
            lines.append(f'  "{source}" -> "{target}" [label="{sign_of(source, target):+d}"];')
    lines.append("}")
    return "\n".join(lines)

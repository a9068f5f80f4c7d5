"""Signs on Young-lattice arrows making every diamond anticommute.

The closed form is the implementation: the sign of row r in a diagram is
(-1)^(number of nodes strictly above row r), and an arrow adding a node in
row r carries the sign of that row.  The incremental growth procedure (all
rows of the empty diagram start at +1; adding a node in row r flips every
row strictly below r) is kept alongside as an independent oracle - agreement
of the two on every addition order is checked by the verification sweep.
"""

import random
import time
from dataclasses import dataclass

from .certificates import Certificate
from .config import DEFAULT_BOUNDS, Bounds, check_bound
from .partitions import (
    EMPTY,
    Node,
    Partition,
    add_node,
    addable_nodes,
    diamonds_above,
    partitions_up_to,
    skew_nodes,
)


def row_sign(lam: Partition, row: int) -> int:
    """(-1)^(number of nodes of lam strictly above ``row``)."""
    if row < 1:
        raise ValueError("rows are 1-based")
    return -1 if sum(lam.rows[: row - 1]) % 2 else 1


def arrow_sign(lam: Partition, mu: Partition) -> int:
    """Sign of the arrow lam -> mu, where mu is lam plus one addable node."""
    if mu.size != lam.size + 1 or not mu.contains(lam):
        raise ValueError(f"{lam} -> {mu} is not an arrow")
    added = skew_nodes(lam, mu)
    if len(added) != 1:
        raise ValueError(f"{lam} -> {mu} is not an arrow")
    return row_sign(lam, added[0].row)


@dataclass(frozen=True)
class SignTable:
    max_size: int
    arrow_signs: dict[tuple[Partition, Partition], int]
    row_signs: dict[tuple[Partition, int], int]


def build_sign_table(max_size: int, bounds: Bounds = DEFAULT_BOUNDS) -> SignTable:
    check_bound(max_size, bounds.max_partition_size, "sign table size")
    arrows: dict[tuple[Partition, Partition], int] = {}
    rows: dict[tuple[Partition, int], int] = {}
    for lam in partitions_up_to(max_size, bounds):
        for r in range(1, len(lam.rows) + 2):
            rows[(lam, r)] = row_sign(lam, r)
        if lam.size < max_size:
            for cell in addable_nodes(lam):
                mu = add_node(lam, cell)
                arrows[(lam, mu)] = row_sign(lam, cell.row)
    return SignTable(max_size, arrows, rows)


def growth_signs(additions: list[Node]) -> tuple[list[int], list[int]]:
    """Run the incremental procedure along a node-addition sequence from the
    empty diagram.  Returns (row signs of rows 1..k+1 after all additions,
    arrow signs read off along the path).  This is the test oracle for the
    closed form; it validates the sequence as it goes."""
    n_rows = len(additions) + 1
    signs = [1] * n_rows
    shape = EMPTY
    path_signs = []
    for node in additions:
        shape = add_node(shape, node)
        path_signs.append(signs[node.row - 1])
        for r in range(node.row, n_rows):
            signs[r] = -signs[r]
    return signs, path_signs


def addition_orders(lam: Partition) -> list[list[Node]]:
    """Every order in which lam can be grown from the empty diagram one
    addable node at a time."""
    if lam.size == 0:
        return [[]]
    out = []
    for r in range(1, len(lam.rows) + 1):
        if lam.row(r) > lam.row(r + 1):  # removable corner
            smaller_rows = list(lam.rows)
            smaller_rows[r - 1] -= 1
            if smaller_rows[r - 1] == 0:
                smaller_rows.pop()
            smaller = Partition(tuple(smaller_rows))
            for order in addition_orders(smaller):
                out.append(order + [Node(r, lam.row(r))])
    return out


def _sampled_orders(lam: Partition, samples: int, seed: int) -> list[list[Node]]:
    rng = random.Random(f"{seed}:{lam}")
    orders = []
    for _ in range(samples):
        shape = lam
        reversed_nodes = []
        while shape.size:
            corners = [
                r for r in range(1, len(shape.rows) + 1) if shape.row(r) > shape.row(r + 1)
            ]
            r = rng.choice(corners)
            reversed_nodes.append(Node(r, shape.row(r)))
            rows = list(shape.rows)
            rows[r - 1] -= 1
            if rows[r - 1] == 0:
                rows.pop()
            shape = Partition(tuple(rows))
        orders.append(list(reversed(reversed_nodes)))
    return orders


def verify_anticommutativity(max_size: int, bounds: Bounds = DEFAULT_BOUNDS) -> Certificate:
    """Check the diamond sign identity on every diamond whose top has at
    most ``max_size`` nodes.  Failure is a verdict, not an exception."""
    start = time.perf_counter()
    check_bound(max_size, bounds.max_partition_size, "sign verification size")
    diamonds_checked = 0
    first_failure = None
    bottom_limit = max_size - 2
    bottoms = partitions_up_to(bottom_limit, bounds) if bottom_limit >= 0 else []
    for bottom in bottoms:
        for diamond in diamonds_above(bottom):
            if diamond.top.size > max_size:
                continue
            left = arrow_sign(diamond.mid_left, diamond.top) * arrow_sign(diamond.bottom, diamond.mid_left)
            right = arrow_sign(diamond.mid_right, diamond.top) * arrow_sign(diamond.bottom, diamond.mid_right)
            diamonds_checked += 1
            if left != -right and first_failure is None:
                first_failure = {
                    "diamond": [
                        str(diamond.bottom),
                        str(diamond.mid_left),
                        str(diamond.mid_right),
                        str(diamond.top),
                    ],
                    "products": [left, right],
                }
                break
        if first_failure:
            break
    return Certificate(
        command="verify signs.anticommutativity",
        parameters={"max_size": max_size},
        verdict="pass" if first_failure is None else "fail",
        counts={"diamonds_checked": diamonds_checked},
        first_failure=first_failure,
        elapsed_ms=int((time.perf_counter() - start) * 1000),
    )


def verify_growth_agreement(
    max_size: int,
    exhaustive_limit: int = 5,
    samples: int = 3,
    bounds: Bounds = DEFAULT_BOUNDS,
) -> Certificate:
    """Check that the growth procedure reproduces the closed-form signs.

    All addition orders are tried up to ``exhaustive_limit``; beyond that a
    deterministic sample of orders per diagram.
    """
    start = time.perf_counter()
    check_bound(max_size, bounds.max_partition_size, "sign verification size")
    partitions_checked = 0
    orders_checked = 0
    first_failure = None
    for lam in partitions_up_to(max_size, bounds):
        if lam.size <= exhaustive_limit:
            orders = addition_orders(lam)
        else:
            orders = _sampled_orders(lam, samples, seed=max_size)
        partitions_checked += 1
        for order in orders:
            grown_rows, grown_path = growth_signs(order)
            expected_rows = [row_sign(lam, r) for r in range(1, len(order) + 2)]
            shape = EMPTY
            expected_path = []
            for node in order:
                expected_path.append(row_sign(shape, node.row))
                shape = add_node(shape, node)
            orders_checked += 1
            if grown_rows != expected_rows or grown_path != expected_path:
                first_failure = {
                    "partition": str(lam),
                    "order": [[n.row, n.col] for n in order],
                    "grown_rows": grown_rows,
                    "closed_form_rows": expected_rows,
                }
                break
        if first_failure:
            break
    return Certificate(
        command="verify signs.growth",
        parameters={
            "max_size": max_size,
            "exhaustive_limit": exhaustive_limit,
            "samples": samples,
        },
        verdict="pass" if first_failure is None else "fail",
        counts={"partitions_checked": partitions_checked, "orders_checked": orders_checked},
        first_failure=first_failure,
        elapsed_ms=int((time.perf_counter() - start) * 1000),
    )

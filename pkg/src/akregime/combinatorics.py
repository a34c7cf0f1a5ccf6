"""Partitions, multipartitions and node geometry for W = G(m,1,n).

A partition is a weakly decreasing tuple of positive ints; a multipartition
is an m-tuple of partitions.  Nodes are boxes of the m-tuple of Young
diagrams, addressed by 1-based (component, row, column).  Everything here is
an immutable value and every function is pure, so the module is safe for
concurrent use without coordination.
"""

from functools import cache
from math import comb, factorial, prod
from typing import Iterator, NamedTuple

Partition = tuple[int, ...]
Multipartition = tuple[Partition, ...]


class Node(NamedTuple):
    component: int
    row: int
    column: int


def is_partition(parts) -> bool:
    if not isinstance(parts, tuple) or not all(isinstance(p, int) for p in parts):
        return False
    return all(p >= 1 for p in parts) and all(
        parts[i] >= parts[i + 1] for i in range(len(parts) - 1)
    )


def is_multipartition(mp, m: int | None = None) -> bool:
    if not isinstance(mp, tuple) or not all(is_partition(c) for c in mp):
        return False
    return m is None or len(mp) == m


def mp_size(mp: Multipartition) -> int:
    return sum(sum(c) for c in mp)


def nodes_of(mp: Multipartition) -> Iterator[Node]:
    """All nodes of the diagram, in (component, row, column) order."""
    for k, component in enumerate(mp, start=1):
        for r, row_len in enumerate(component, start=1):
            for c in range(1, row_len + 1):
                yield Node(k, r, c)


@cache
def partitions(n: int) -> tuple[Partition, ...]:
    """All partitions of n, in descending lexicographic order.

    E.g. partitions(3) = ((3,), (2, 1), (1, 1, 1)).
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    return tuple(_partitions_bounded(n, n))


def _partitions_bounded(n: int, max_part: int) -> Iterator[Partition]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in _partitions_bounded(n - first, first):
            yield (first,) + rest


def _compositions_desc(n: int, m: int) -> Iterator[tuple[int, ...]]:
    # Compositions of n into m nonnegative parts, lexicographically descending.
    if m == 1:
        yield (n,)
        return
    for first in range(n, -1, -1):
        for rest in _compositions_desc(n - first, m - 1):
            yield (first,) + rest


@cache
def enumerate_multipartitions(m: int, n: int) -> tuple[Multipartition, ...]:
    """Every m-multipartition of n exactly once, in canonical order.

    Canonical order: descending lexicographic on the tuple of component
    sizes, then descending lexicographic on the component part lists.  The
    length of the result is |Irrep(G(m,1,n))|.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    if n < 0:
        raise ValueError("n must be nonnegative")
    out: list[Multipartition] = []
    for sizes in _compositions_desc(n, m):
        choices = [partitions(k) for k in sizes]
        out.extend(_product(choices))
    return tuple(out)


def _product(choices: list[tuple[Partition, ...]]) -> Iterator[Multipartition]:
    if not choices:
        yield ()
        return
    for head in choices[0]:
        for tail in _product(choices[1:]):
            yield (head,) + tail


def multipartition_count(m: int, n: int) -> int:
    """|Irrep(W)| = number of m-multipartitions of n."""
    return len(enumerate_multipartitions(m, n))


def removable_nodes(mp: Multipartition) -> tuple[Node, ...]:
    """Nodes whose removal leaves a multipartition, in (component, row) order."""
    out = []
    for k, component in enumerate(mp, start=1):
        for r, row_len in enumerate(component, start=1):
            below = component[r] if r < len(component) else 0
            if row_len > below:
                out.append(Node(k, r, row_len))
    return tuple(out)


def addable_nodes(mp: Multipartition) -> tuple[Node, ...]:
    """Nodes whose addition yields a multipartition, in (component, row) order."""
    out = []
    for k, component in enumerate(mp, start=1):
        for r in range(1, len(component) + 2):
            row_len = component[r - 1] if r <= len(component) else 0
            above = component[r - 2] if r >= 2 else None
            if above is None or above > row_len:
                out.append(Node(k, r, row_len + 1))
    return tuple(out)


def remove_node(mp: Multipartition, node: Node) -> Multipartition:
    k, r, c = node
    component = mp[k - 1]
    if r > len(component) or component[r - 1] != c:
        raise ValueError(f"{node} is not removable from {mp}")
    if r < len(component) and component[r] == c:
        raise ValueError(f"{node} is not removable from {mp}")
    new_row = component[r - 1] - 1
    rows = component[: r - 1] + ((new_row,) if new_row else ()) + component[r:]
    return mp[: k - 1] + (rows,) + mp[k:]


def add_node(mp: Multipartition, node: Node) -> Multipartition:
    k, r, c = node
    component = mp[k - 1]
    row_len = component[r - 1] if r <= len(component) else 0
    if r > len(component) + 1 or c != row_len + 1:
        raise ValueError(f"{node} is not addable to {mp}")
    if r >= 2 and component[r - 2] <= row_len:
        raise ValueError(f"{node} is not addable to {mp}")
    rows = component[: r - 1] + (row_len + 1,) + component[r:]
    return mp[: k - 1] + (rows,) + mp[k:]


def standard_tableaux_count(p: Partition) -> int:
    """Number of standard Young tableaux of shape p, by the hook length formula."""
    n = sum(p)
    if n == 0:
        return 1
    conj = _conjugate(p)
    hooks = prod(
        p[r] - c + conj[c] - r - 1
        for r in range(len(p))
        for c in range(p[r])
    )
    return factorial(n) // hooks


def _conjugate(p: Partition) -> Partition:
    if not p:
        return ()
    return tuple(sum(1 for part in p if part > c) for c in range(p[0]))


def dim_irrep(mp: Multipartition) -> int:
    """Dimension of the irreducible W-module labelled by mp.

    This is the multinomial coefficient of the component sizes times the
    product of standard-tableaux counts of the components.
    """
    n = mp_size(mp)
    dim = 1
    remaining = n
    for component in mp:
        k = sum(component)
        dim *= comb(remaining, k) * standard_tableaux_count(component)
        remaining -= k
    return dim

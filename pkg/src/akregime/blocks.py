"""Content multisets and the block partition of Specht modules for q != 1.

Two Specht modules lie in the same block iff their multipartitions have
equal content (the multiset of residues of all nodes).  Content is stored as
a sorted residue tuple so multiset equality is plain equality and blocks can
be grouped deterministically.
"""

from dataclasses import dataclass

from .combinatorics import Multipartition, enumerate_multipartitions, nodes_of
from .params import ParamScheme, Residue, relation_exponents, residue_of

ContentMultiset = tuple[Residue, ...]


class QOneBlocksError(ValueError):
    """Blocks are only computed for q != 1: "q=1 blocks unsupported"."""


class BadWitnessError(ValueError):
    """The claimed relation u_j = q^(n-1) u_i does not hold: "bad-witness"."""


@dataclass(frozen=True)
class BlockPartition:
    blocks: tuple[tuple[Multipartition, ...], ...]
    exceptional_index: int | None


def content(scheme: ParamScheme, mp: Multipartition) -> ContentMultiset:
    """Multiset of residues of all nodes of mp, as a sorted tuple."""
    if scheme.e == 1:
        raise QOneBlocksError("q=1 blocks unsupported")
    return tuple(sorted(residue_of(scheme, node) for node in nodes_of(mp)))


def block_partition(scheme: ParamScheme, n: int) -> BlockPartition:
    """Group all multipartitions of n by content.

    Blocks are ordered by first appearance in the canonical enumeration;
    exceptional_index points at the first block of size n + 1 >= 2, if any.
    """
    if scheme.e == 1:
        raise QOneBlocksError("q=1 blocks unsupported")
    by_content: dict[ContentMultiset, list[Multipartition]] = {}
    for mp in enumerate_multipartitions(scheme.m, n):
        by_content.setdefault(content(scheme, mp), []).append(mp)
    blocks = tuple(tuple(group) for group in by_content.values())
    exceptional = None
    if n >= 1:
        for idx, block in enumerate(blocks):
            if len(block) == n + 1:
                exceptional = idx
                break
    return BlockPartition(blocks=blocks, exceptional_index=exceptional)


def lambda_family(
    scheme: ParamScheme, n: int, witness: tuple[int, int]
) -> tuple[Multipartition, ...]:
    """The n + 1 multipartitions with a row of length a in component i and a
    column of length n - a in component j, for a = 0..n.

    Requires the witness relation u_j = q^(n-1) u_i to hold in the scheme.
    """
    i, j = witness
    if i == j or not (1 <= i <= scheme.m) or not (1 <= j <= scheme.m):
        raise BadWitnessError("bad-witness")
    if (n - 1) not in relation_exponents(scheme, j, i, n):
        raise BadWitnessError("bad-witness")
    family = []
    for a in range(n + 1):
        components: list[tuple[int, ...]] = [()] * scheme.m
        if a:
            components[i - 1] = (a,)
        if n - a:
            components[j - 1] = (1,) * (n - a)
        family.append(tuple(components))
    return tuple(family)

"""Structured total orders: bipartitions, block intervals, dense interleavings.

Each construction returns a plain :class:`LinearOrder` decided entirely
by its inputs and a tie-break policy.  Subset inputs are sets: segments
are normalized to ground order before the policy arranges them, so the
line order of a subset file never leaks into the output.  The density
predicate asks a betweenness question about one existing order.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .core import LinearOrder, check_ground, check_token
from .errors import (
    DuplicateElement,
    EmptyBlock,
    EmptySubset,
    NotBijective,
    NotDisjoint,
    UnknownElement,
)
from .policy import TieBreakPolicy


@dataclass(frozen=True)
class Partition:
    """An ordered sequence of nonempty, pairwise disjoint blocks.

    Block order is meaningful: constructions lay blocks out in the order
    given here.  Indices in diagnostics are 1-based.
    """

    blocks: tuple[tuple[str, ...], ...]

    def __post_init__(self):
        object.__setattr__(
            self, "blocks", tuple(tuple(block) for block in self.blocks)
        )
        owner: dict[str, int] = {}
        for i, block in enumerate(self.blocks, start=1):
            if not block:
                raise EmptyBlock(i)
            seen: set[str] = set()
            for tok in block:
                check_token(tok)
                if tok in seen:
                    raise DuplicateElement(tok)
                seen.add(tok)
                if tok in owner:
                    raise NotDisjoint(tok, f"blocks {owner[tok]} and {i}")
                owner[tok] = i

    def members(self) -> set[str]:
        return {tok for block in self.blocks for tok in block}


@dataclass(frozen=True)
class Bijection:
    """A one-one map, stored as (domain, image) pairs in input order.

    Construction rejects a repeated domain element (two images) or a
    repeated image element (not injective); totality and the exact
    domain/codomain are checked where the bijection gets used.
    """

    pairs: tuple[tuple[str, str], ...]

    def __post_init__(self):
        object.__setattr__(
            self, "pairs", tuple((y, x) for y, x in self.pairs)
        )
        seen_domain: set[str] = set()
        seen_image: set[str] = set()
        for y, x in self.pairs:
            check_token(y)
            check_token(x)
            if y in seen_domain:
                raise NotBijective(f"{y!r} has two images", y)
            if x in seen_image:
                raise NotBijective(f"two elements map to {x!r}", x)
            seen_domain.add(y)
            seen_image.add(x)

    @cached_property
    def as_dict(self) -> dict[str, str]:
        return dict(self.pairs)

    def __call__(self, token: str) -> str:
        try:
            return self.as_dict[token]
        except KeyError:
            raise UnknownElement(token) from None


def _subset_in_ground_order(
    name: str, tokens: Iterable[str], ground_index: dict[str, int]
) -> list[str]:
    """Validate one subset and return its members sorted by ground position."""
    seq = check_ground(tokens)
    if not seq:
        raise EmptySubset(name)
    for tok in seq:
        if tok not in ground_index:
            raise UnknownElement(tok)
    return sorted(seq, key=ground_index.__getitem__)


def bipartition_order(
    ground: Iterable[str],
    a: Iterable[str],
    b: Iterable[str],
    policy: TieBreakPolicy | None = None,
) -> LinearOrder:
    """Total order with all of A first, all of B last, the rest between.

    Guarantees x before y for every x in A and y in B.  The three
    segments are arranged one after another by a single tie-breaker, A's
    segment first, so a seeded policy spends its stream in a fixed order.
    """
    if policy is None:
        policy = TieBreakPolicy.input_order()
    seq = check_ground(ground)
    gi = {tok: i for i, tok in enumerate(seq)}
    a_seg = _subset_in_ground_order("A", a, gi)
    b_seg = _subset_in_ground_order("B", b, gi)
    b_set = set(b_seg)
    for tok in a_seg:
        if tok in b_set:
            raise NotDisjoint(tok, "A and B")
    taken = set(a_seg) | b_set
    middle = [tok for tok in seq if tok not in taken]
    breaker = policy.start()
    out = breaker.arrange(a_seg) + breaker.arrange(middle) + breaker.arrange(b_seg)
    return LinearOrder(tuple(out))


def partition_block_order(
    ground: Iterable[str],
    partition: Partition,
    policy: TieBreakPolicy | None = None,
) -> LinearOrder:
    """Total order where each block fills a contiguous interval.

    Blocks appear in the partition's given order; ground elements in no
    block form one final interval.  Within a block (and within the
    leftover) the policy arranges the members from a ground-order base,
    all segments sharing one tie-breaker, first block first.
    """
    if policy is None:
        policy = TieBreakPolicy.input_order()
    seq = check_ground(ground)
    gi = {tok: i for i, tok in enumerate(seq)}
    for block in partition.blocks:
        for tok in block:
            if tok not in gi:
                raise UnknownElement(tok)
    placed = partition.members()
    leftover = [tok for tok in seq if tok not in placed]
    breaker = policy.start()
    out: list[str] = []
    for block in partition.blocks:
        out.extend(breaker.arrange(sorted(block, key=gi.__getitem__)))
    out.extend(breaker.arrange(leftover))
    return LinearOrder(tuple(out))


def dense_interleave(
    y_seq: Iterable[str],
    x_seq: Iterable[str],
    phi: Bijection,
    policy: TieBreakPolicy | None = None,
) -> LinearOrder:
    """Alternate each y with its image: y, phi(y), y', phi(y'), and so on.

    The policy orders Y (from its given sequence as the base); the
    output then places phi(y) immediately after each y, so some image
    element lies strictly between any two Y elements.  Y and X must be
    disjoint and phi must map Y onto X one-one.
    """
    if policy is None:
        policy = TieBreakPolicy.input_order()
    ys = check_ground(y_seq)
    xs = check_ground(x_seq)
    x_set = set(xs)
    for tok in ys:
        if tok in x_set:
            raise NotDisjoint(tok, "Y and X")
    if len(ys) != len(xs):
        raise NotBijective(
            f"domain has {len(ys)} elements but codomain has {len(xs)}"
        )
    y_set = set(ys)
    for y, x in phi.pairs:
        if y not in y_set:
            raise UnknownElement(y)
        if x not in x_set:
            raise UnknownElement(x)
    mapping = phi.as_dict
    for y in ys:
        if y not in mapping:
            raise NotBijective(f"no image for {y!r}", y)
    breaker = policy.start()
    out: list[str] = []
    for y in breaker.arrange(list(ys)):
        out.append(y)
        out.append(mapping[y])
    return LinearOrder(tuple(out))


def is_dense(
    t1: Iterable[str],
    t2: Iterable[str],
    order: LinearOrder,
    strict: bool = True,
) -> bool:
    """Does T1 sit (strictly) densely inside T2 under `order`?

    True when every pair a before b in T2 has some c in T1 with
    a < c < b (strict) or a <= c <= b (non-strict, c may equal an
    endpoint).  Checking consecutive T2 positions suffices: a witness
    for a consecutive gap works for every wider pair around it.
    """
    p1 = sorted(order.position(tok) for tok in check_ground(t1))
    p2 = sorted(order.position(tok) for tok in check_ground(t2))
    for left, right in zip(p2, p2[1:]):
        if strict:
            i = bisect_right(p1, left)
            if i == len(p1) or p1[i] >= right:
                return False
        else:
            i = bisect_left(p1, left)
            if i == len(p1) or p1[i] > right:
                return False
    return True

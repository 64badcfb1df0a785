"""Order extension: adjoin one forced pair, then linearize.

The pipeline keeps its two stages separate.  `extend_with_pair` adds one
incomparable pair and closes minimally; `linear_extension` removes
sources one at a time with a tie-break policy deciding among candidates;
`szpilrajn` chains the two and returns a certificate a caller can
re-check.  Two independent oracles, exhaustive enumeration and a
downset-counting dynamic program, exist to cross-examine the fast path.
"""

from __future__ import annotations

from bisect import insort
from dataclasses import dataclass
from typing import Iterator

from .core import LinearOrder, Pair, Poset, check_token
from .errors import CapExceeded, NotIncomparable
from .policy import TieBreakPolicy

DEFAULT_ENUM_LIMIT = 10**6

DEFAULT_COUNT_CAP = 20


@dataclass(frozen=True)
class ForcedPair:
    """An ordered pair the output order must realize: first before second."""

    first: str
    second: str

    def __post_init__(self):
        check_token(self.first)
        check_token(self.second)
        if self.first == self.second:
            raise NotIncomparable(self.first, self.second)


@dataclass(frozen=True)
class ExtensionCertificate:
    """A linear extension together with what it extends.

    `verify` re-checks the claim from scratch: every input pair runs
    forward in the output order and, when a pair was forced, its first
    element precedes its second.
    """

    input_relation: frozenset[Pair]
    output_order: LinearOrder
    forced: ForcedPair | None = None

    def verify(self) -> bool:
        pos = self.output_order.positions
        for x, y in self.input_relation:
            if x not in pos or y not in pos or pos[x] >= pos[y]:
                return False
        if self.forced is not None:
            f, s = self.forced.first, self.forced.second
            if f not in pos or s not in pos or pos[f] >= pos[s]:
                return False
        return True


@dataclass(frozen=True)
class Enumeration:
    """Enumeration result: the orders found plus a truncation marker.

    Hitting the limit is not an error; `truncated` says whether more
    extensions exist beyond the ones returned.
    """

    orders: tuple[LinearOrder, ...]
    truncated: bool
    limit: int

    def __len__(self) -> int:
        return len(self.orders)

    def __iter__(self) -> Iterator[LinearOrder]:
        return iter(self.orders)


def extend_with_pair(poset: Poset, pair: ForcedPair) -> Poset:
    """Adjoin one incomparable pair and close minimally.

    The result's relation is exactly the transitive closure of
    relation ∪ {(first, second)}: every element at or below `first`
    goes before every element at or above `second`, and nothing else
    changes.
    """
    a, b = pair.first, pair.second
    poset.index(a)
    poset.index(b)
    rel = poset.relation
    if (a, b) in rel:
        raise NotIncomparable(a, b, held=(a, b))
    if (b, a) in rel:
        raise NotIncomparable(a, b, held=(b, a))
    below = {a} | {x for x, y in rel if y == a}
    above = {b} | {y for x, y in rel if x == b}
    extended = set(rel)
    for x in below:
        for y in above:
            extended.add((x, y))
    return Poset(poset.ground, frozenset(extended))


def linear_extension(
    poset: Poset, policy: TieBreakPolicy | None = None
) -> LinearOrder:
    """Linearize by repeated source removal.

    At each step the elements with no remaining predecessors form the
    candidate set, held in ground order; `policy` picks which one leaves
    next.  A valid poset is acyclic, so the loop always exhausts the
    ground.  Output is a pure function of (poset, policy).
    """
    if policy is None:
        policy = TieBreakPolicy.input_order()
    breaker = policy.start()
    gi = poset.ground_index
    indegree = {tok: 0 for tok in poset.ground}
    successors: dict[str, list[str]] = {tok: [] for tok in poset.ground}
    for x, y in poset.sorted_pairs():
        indegree[y] += 1
        successors[x].append(y)
    available = [tok for tok in poset.ground if indegree[tok] == 0]
    out: list[str] = []
    while available:
        chosen = breaker.pick(available)
        available.remove(chosen)
        out.append(chosen)
        for y in successors[chosen]:
            indegree[y] -= 1
            if indegree[y] == 0:
                insort(available, y, key=gi.__getitem__)
    return LinearOrder(tuple(out))


def szpilrajn(
    poset: Poset,
    forced: ForcedPair | None = None,
    policy: TieBreakPolicy | None = None,
) -> ExtensionCertificate:
    """Extend to a linear order, optionally through one forced pair.

    Exactly the two-stage pipeline: adjoin the forced pair and close
    (when present), then linearize.  The certificate records the original
    relation, the forced pair, and the resulting order.
    """
    augmented = poset if forced is None else extend_with_pair(poset, forced)
    order = linear_extension(augmented, policy)
    return ExtensionCertificate(
        input_relation=poset.relation, output_order=order, forced=forced
    )


def enumerate_linear_extensions(
    poset: Poset, limit: int | None = None
) -> Enumeration:
    """All linear extensions, lexicographic by ground position.

    Backtracking over minimal-element choices, candidates tried in
    ground order, which makes the output order canonical.  Stops after
    `limit` orders and flags truncation when more exist.
    """
    if limit is None:
        limit = DEFAULT_ENUM_LIMIT
    if limit < 0:
        raise ValueError(f"limit must be nonnegative, got {limit}")
    n = len(poset.ground)
    gi = poset.ground_index
    preds: list[int] = [0] * n
    for x, y in poset.relation:
        preds[gi[y]] |= 1 << gi[x]

    found: list[LinearOrder] = []
    prefix: list[str] = []
    truncated = False

    def walk(placed: int) -> bool:
        # Returns True when the limit cut the walk short.
        if len(prefix) == n:
            if len(found) == limit:
                return True
            found.append(LinearOrder(tuple(prefix)))
            return False
        for i in range(n):
            bit = 1 << i
            if placed & bit or (preds[i] & placed) != preds[i]:
                continue
            prefix.append(poset.ground[i])
            cut = walk(placed | bit)
            prefix.pop()
            if cut:
                return True
        return False

    truncated = walk(0)
    return Enumeration(orders=tuple(found), truncated=truncated, limit=limit)


def count_linear_extensions(poset: Poset, cap: int | None = None) -> int:
    """Exact extension count by dynamic programming over downsets.

    State space is the predecessor-closed subsets of the ground, one
    bitmask each, so memory grows with the downset count; `cap` bounds
    the ground size (default 20).  Always equals the untruncated
    enumeration length, which the tests enforce.
    """
    if cap is None:
        cap = DEFAULT_COUNT_CAP
    n = len(poset.ground)
    if n > cap:
        raise CapExceeded(n, cap)
    gi = poset.ground_index
    preds: list[int] = [0] * n
    for x, y in poset.relation:
        preds[gi[y]] |= 1 << gi[x]

    current: dict[int, int] = {0: 1}
    for _ in range(n):
        nxt: dict[int, int] = {}
        for mask, ways in current.items():
            for i in range(n):
                bit = 1 << i
                if mask & bit or (preds[i] & mask) != preds[i]:
                    continue
                grown = mask | bit
                nxt[grown] = nxt.get(grown, 0) + ways
        current = nxt
    if n == 0:
        return 1
    return current.get((1 << n) - 1, 0)

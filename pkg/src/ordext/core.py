"""Finite strict partial and total orders over named elements.

Relations are stored in strict form: reflexive pairs stay implicit, so a
valid relation is an irreflexive, antisymmetric, transitively closed set
of ordered pairs over a ground sequence.  The ground keeps its input
order and doubles as the default tie-break source.  All values are
immutable after construction and every operation is a pure function of
its inputs.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .errors import (
    AntisymmetryViolation,
    ClosureCreatesReflexivePair,
    DuplicateElement,
    InvalidToken,
    NotClosed,
    UnknownElement,
)

Pair = tuple[str, str]


def check_token(token: object) -> str:
    """Reject tokens the element grammar or the file formats cannot carry."""
    if not isinstance(token, str):
        raise InvalidToken(token, "not a string")
    if token == "":
        raise InvalidToken(token, "empty")
    if any(ch.isspace() for ch in token):
        raise InvalidToken(token, "contains whitespace")
    if "<" in token:
        raise InvalidToken(token, "contains '<'")
    if token.startswith("#"):
        raise InvalidToken(token, "starts with '#', reserved for comments")
    if token == "---":
        raise InvalidToken(token, "reserved as a section separator")
    return token


def check_ground(tokens: Iterable[str]) -> tuple[str, ...]:
    """Validate a ground sequence: well-formed tokens, pairwise distinct."""
    seq = tuple(tokens)
    seen = set()
    for tok in seq:
        check_token(tok)
        if tok in seen:
            raise DuplicateElement(tok)
        seen.add(tok)
    return seq


def _sorted_by_index(pairs: Iterable[Pair], index: dict[str, int]) -> list[Pair]:
    return sorted(pairs, key=lambda p: (index[p[0]], index[p[1]]))


@dataclass(frozen=True)
class Poset:
    """A ground sequence plus a strict, antisymmetric, transitively closed relation.

    Construction verifies every invariant and raises a witness-carrying
    error otherwise; use :func:`validate` to build from raw pairs,
    optionally closing them first.
    """

    ground: tuple[str, ...]
    relation: frozenset[Pair]

    def __post_init__(self):
        object.__setattr__(self, "ground", check_ground(self.ground))
        object.__setattr__(
            self, "relation", frozenset((x, y) for x, y in self.relation)
        )
        members = set(self.ground)
        for x, y in sorted(self.relation):
            if x not in members:
                raise UnknownElement(x)
            if y not in members:
                raise UnknownElement(y)
            if x == y:
                raise AntisymmetryViolation((x, x))
        idx = {tok: i for i, tok in enumerate(self.ground)}
        ordered = _sorted_by_index(self.relation, idx)
        for x, y in ordered:
            if (y, x) in self.relation:
                raise AntisymmetryViolation((x, y, x))
        succ: dict[str, list[str]] = {tok: [] for tok in self.ground}
        for x, y in ordered:
            succ[x].append(y)
        for x in self.ground:
            for y in succ[x]:
                for z in succ[y]:
                    if (x, z) not in self.relation:
                        raise NotClosed((x, y, z))

    @cached_property
    def ground_index(self) -> dict[str, int]:
        return {tok: i for i, tok in enumerate(self.ground)}

    def index(self, token: str) -> int:
        try:
            return self.ground_index[token]
        except KeyError:
            raise UnknownElement(token) from None

    def sorted_pairs(self) -> list[Pair]:
        """Relation pairs ordered by ground position; the canonical serialization order."""
        return _sorted_by_index(self.relation, self.ground_index)


@dataclass(frozen=True)
class LinearOrder:
    """A permutation of its ground; position decides every comparison."""

    sequence: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "sequence", check_ground(self.sequence))

    @cached_property
    def positions(self) -> dict[str, int]:
        return {tok: i for i, tok in enumerate(self.sequence)}

    def position(self, token: str) -> int:
        try:
            return self.positions[token]
        except KeyError:
            raise UnknownElement(token) from None

    def before(self, x: str, y: str) -> bool:
        """True when x strictly precedes y."""
        return self.position(x) < self.position(y)

    @cached_property
    def induced_pairs(self) -> frozenset[Pair]:
        """All forward pairs (s_i, s_j) with i < j; the strict relation this order carries."""
        seq = self.sequence
        n = len(seq)
        return frozenset(
            (seq[i], seq[j]) for i in range(n) for j in range(i + 1, n)
        )

    def contains(self, pairs: Iterable[Pair]) -> bool:
        """True when every given pair runs forward in this order."""
        for x, y in pairs:
            if self.position(x) >= self.position(y):
                return False
        return True

    def __len__(self) -> int:
        return len(self.sequence)


def _closure_or_cycle(
    pairs: Iterable[Pair], node_order: tuple[str, ...]
) -> tuple[set[Pair] | None, list[str] | None]:
    """Reachability closure, or a shortest witness cycle when one exists.

    Neighbor lists follow `node_order`, so the reported cycle is the same
    on every run.
    """
    index = {tok: i for i, tok in enumerate(node_order)}
    succ: dict[str, list[str]] = {tok: [] for tok in node_order}
    for x, y in _sorted_by_index(set(pairs), index):
        succ[x].append(y)

    closed: set[Pair] = set()
    cyclic = False
    for start in node_order:
        reached: set[str] = set()
        queue = deque(succ[start])
        while queue:
            node = queue.popleft()
            if node in reached:
                continue
            reached.add(node)
            queue.extend(succ[node])
        if start in reached:
            cyclic = True
            break
        for node in reached:
            closed.add((start, node))
    if not cyclic:
        return closed, None

    best: list[str] | None = None
    for start in node_order:
        dist = {start: 0}
        parent: dict[str, str] = {}
        queue = deque([start])
        hit: str | None = None
        while queue and hit is None:
            node = queue.popleft()
            for nxt in succ[node]:
                if nxt == start:
                    hit = node
                    break
                if nxt not in dist:
                    dist[nxt] = dist[node] + 1
                    parent[nxt] = node
                    queue.append(nxt)
        if hit is None:
            continue
        path = [hit]
        while path[-1] != start:
            path.append(parent[path[-1]])
        path.reverse()
        path.append(start)
        if best is None or len(path) < len(best):
            best = path
    return None, best


def transitive_closure(
    pairs: Iterable[Pair], node_order: Iterable[str] | None = None
) -> frozenset[Pair]:
    """Smallest transitively closed superset of `pairs`; idempotent.

    Raises :class:`ClosureCreatesReflexivePair` when the input contains a
    cycle, naming a shortest one.  `node_order` fixes which witness gets
    reported; it defaults to lexicographic token order.
    """
    plist = []
    for x, y in pairs:
        plist.append((check_token(x), check_token(y)))
    if node_order is not None:
        nodes = tuple(node_order)
    else:
        nodes = tuple(sorted({tok for pair in plist for tok in pair}))
    closed, cycle = _closure_or_cycle(plist, nodes)
    if cycle is not None:
        raise ClosureCreatesReflexivePair(cycle)
    return frozenset(closed)


def validate(
    ground: Iterable[str], pairs: Iterable[Pair], auto_close: bool = False
) -> Poset:
    """Check raw pairs over a ground sequence and build the poset.

    With `auto_close` the relation becomes the transitive closure of
    `pairs`; otherwise the pairs are taken verbatim and a missing
    transitive pair is an error.  Every failure names a witness: the
    duplicate token, the foreign endpoint, a shortest cycle, or the
    missing pair's triple.
    """
    seq = check_ground(ground)
    members = set(seq)
    plist = []
    for x, y in pairs:
        plist.append((check_token(x), check_token(y)))
    for x, y in sorted(set(plist)):
        if x not in members:
            raise UnknownElement(x)
        if y not in members:
            raise UnknownElement(y)
        if x == y:
            raise AntisymmetryViolation((x, x))
    relation: frozenset[Pair] = frozenset(plist)
    if auto_close:
        closed, cycle = _closure_or_cycle(relation, seq)
        if cycle is not None:
            raise AntisymmetryViolation(cycle)
        relation = frozenset(closed)
    return Poset(seq, relation)


def restrict(poset: Poset, subset: Iterable[str]) -> Poset:
    """Sub-poset on `subset`: the relation intersected with subset x subset.

    Restriction of a closed relation is closed, so the result is built
    directly and re-verified.
    """
    sub = check_ground(subset)
    members = set(poset.ground)
    for tok in sub:
        if tok not in members:
            raise UnknownElement(tok)
    keep = set(sub)
    rel = frozenset(p for p in poset.relation if p[0] in keep and p[1] in keep)
    return Poset(sub, rel)


def order_from_enumeration(sequence: Iterable[str]) -> LinearOrder:
    """Total order induced by an enumeration: earlier entries precede later ones.

    The induced strict pair set is exactly {(s_i, s_j) : i < j}; reflexive
    pairs stay implicit under the strict storage convention.
    """
    return LinearOrder(tuple(sequence))


def is_comparable(poset: Poset, x: str, y: str) -> bool:
    """True when x equals y or the relation orders them one way."""
    poset.index(x)
    poset.index(y)
    return x == y or (x, y) in poset.relation or (y, x) in poset.relation


def incomparable_pairs(poset: Poset) -> list[Pair]:
    """Unordered incomparable pairs, normalized to ground order.

    Empty exactly when the poset is already total.
    """
    out = []
    g = poset.ground
    rel = poset.relation
    for i in range(len(g)):
        for j in range(i + 1, len(g)):
            x, y = g[i], g[j]
            if (x, y) not in rel and (y, x) not in rel:
                out.append((x, y))
    return out

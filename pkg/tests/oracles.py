"""Independent reference implementations.

Each oracle takes a different route than the library: closure by
repeated relational composition instead of reachability search,
extension enumeration by filtering whole permutations instead of
backtracking, density by a full double loop instead of consecutive-gap
checks.  Agreement between the routes is what the property tests assert.
"""

from __future__ import annotations

from itertools import permutations

from ordext import LinearOrder, Poset


def closure_fixpoint(pairs) -> set[tuple[str, str]]:
    """Compose the relation with itself until nothing new appears."""
    rel = set(pairs)
    while True:
        new = {(x, z) for x, y in rel for w, z in rel if y == w} - rel
        if not new:
            return rel
        rel |= new


def extensions_by_filter(poset: Poset) -> set[tuple[str, ...]]:
    """All linear extensions, found by filtering every permutation."""
    out = set()
    rel = poset.relation
    for perm in permutations(sorted(poset.ground)):
        pos = {tok: i for i, tok in enumerate(perm)}
        if all(pos[x] < pos[y] for x, y in rel):
            out.add(perm)
    return out


def dense_double_loop(t1, t2, order: LinearOrder, strict: bool) -> bool:
    """Density checked over every T2 pair, not just consecutive ones."""
    pos = order.positions
    witnesses = [pos[c] for c in t1]
    for a in t2:
        for b in t2:
            if pos[a] >= pos[b]:
                continue
            if strict:
                ok = any(pos[a] < w < pos[b] for w in witnesses)
            else:
                ok = any(pos[a] <= w <= pos[b] for w in witnesses)
            if not ok:
                return False
    return True


def strict_order_axioms_hold(ground, rel) -> bool:
    """Irreflexivity, antisymmetry, transitivity by exhaustive triple scan."""
    for x in ground:
        if (x, x) in rel:
            return False
    for x in ground:
        for y in ground:
            if x != y and (x, y) in rel and (y, x) in rel:
                return False
    for x in ground:
        for y in ground:
            for z in ground:
                if (x, y) in rel and (y, z) in rel and (x, z) not in rel:
                    return False
    return True


def is_total(ground, rel) -> bool:
    return all(
        x == y or (x, y) in rel or (y, x) in rel for x in ground for y in ground
    )

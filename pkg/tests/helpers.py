"""Deterministic random instance generators shared by the test modules.

Everything is driven by a caller-supplied `random.Random`, so a fixed
seed reproduces the exact same instances.
"""

from __future__ import annotations

import random

from ordext import Poset, TieBreakPolicy, validate


def random_poset(rng: random.Random, n: int, density: float | None = None) -> Poset:
    """A random poset on n elements with a shuffled ground sequence.

    Edges are drawn over a hidden topological order, which keeps the
    input acyclic; the ground sequence is shuffled independently so the
    ground order carries no information about the relation.
    """
    if density is None:
        density = rng.random()
    topo = [f"e{i}" for i in range(n)]
    rng.shuffle(topo)
    pairs = []
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < density:
                pairs.append((topo[i], topo[j]))
    ground = [f"e{i}" for i in range(n)]
    rng.shuffle(ground)
    return validate(ground, pairs, auto_close=True)


def random_policy(rng: random.Random) -> TieBreakPolicy:
    roll = rng.randrange(3)
    if roll == 0:
        return TieBreakPolicy.input_order()
    if roll == 1:
        return TieBreakPolicy.lexicographic()
    return TieBreakPolicy.seeded(rng.getrandbits(64))


def diamond() -> Poset:
    return validate(
        ("0", "x", "y", "1"),
        [("0", "x"), ("0", "y"), ("x", "1"), ("y", "1")],
        auto_close=True,
    )


def chain(n: int) -> Poset:
    ground = tuple(f"c{i}" for i in range(n))
    pairs = [(ground[i], ground[i + 1]) for i in range(n - 1)]
    return validate(ground, pairs, auto_close=True)


def antichain(n: int) -> Poset:
    return validate(tuple(f"a{i}" for i in range(n)), [])

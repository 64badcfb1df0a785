"""Extension pipeline and its two oracles."""

import random

import pytest

from ordext import (
    CapExceeded,
    ExtensionCertificate,
    ForcedPair,
    LinearOrder,
    NotIncomparable,
    TieBreakPolicy,
    UnknownElement,
    count_linear_extensions,
    enumerate_linear_extensions,
    extend_with_pair,
    incomparable_pairs,
    linear_extension,
    szpilrajn,
    transitive_closure,
    validate,
)

from helpers import antichain, chain, diamond, random_policy, random_poset
from oracles import closure_fixpoint, extensions_by_filter, is_total, strict_order_axioms_hold

POLICIES = (
    TieBreakPolicy.input_order(),
    TieBreakPolicy.lexicographic(),
    TieBreakPolicy.seeded(99),
)


class TestForcedPair:
    def test_equal_endpoints_rejected(self):
        with pytest.raises(NotIncomparable):
            ForcedPair("a", "a")

    def test_fields(self):
        pair = ForcedPair("a", "b")
        assert (pair.first, pair.second) == ("a", "b")


class TestExtendWithPair:
    def test_adds_pair_only(self):
        poset = validate(("a", "b", "c"), [("a", "c")])
        out = extend_with_pair(poset, ForcedPair("a", "b"))
        assert out.relation == frozenset({("a", "c"), ("a", "b")})

    def test_closure_pulls_in_consequences(self):
        poset = validate(("a", "b", "c"), [("a", "c")])
        out = extend_with_pair(poset, ForcedPair("b", "a"))
        assert out.relation == frozenset({("a", "c"), ("b", "a"), ("b", "c")})

    def test_comparable_pair_rejected(self):
        poset = validate(("a", "b", "c"), [("a", "c")])
        with pytest.raises(NotIncomparable) as info:
            extend_with_pair(poset, ForcedPair("a", "c"))
        assert info.value.held == ("a", "c")

    def test_reverse_comparable_rejected(self):
        poset = validate(("a", "b"), [("a", "b")])
        with pytest.raises(NotIncomparable) as info:
            extend_with_pair(poset, ForcedPair("b", "a"))
        assert info.value.held == ("a", "b")

    def test_unknown_endpoint(self):
        with pytest.raises(UnknownElement):
            extend_with_pair(validate(("a", "b"), []), ForcedPair("a", "z"))

    def test_ground_unchanged(self):
        poset = validate(("c", "a", "b"), [])
        assert extend_with_pair(poset, ForcedPair("b", "a")).ground == ("c", "a", "b")

    def test_minimality_matches_closure_oracle(self):
        rng = random.Random(30)
        for _ in range(150):
            poset = random_poset(rng, rng.randrange(2, 8))
            free = incomparable_pairs(poset)
            if not free:
                continue
            a, b = free[rng.randrange(len(free))]
            if rng.random() < 0.5:
                a, b = b, a
            out = extend_with_pair(poset, ForcedPair(a, b))
            want = closure_fixpoint(set(poset.relation) | {(a, b)})
            assert set(out.relation) == want
            assert set(out.relation) == set(
                transitive_closure(set(poset.relation) | {(a, b)})
            )


class TestLinearExtension:
    def test_chain_is_rigid(self):
        poset = validate(("a", "b", "c"), [("a", "b"), ("b", "c")], auto_close=True)
        for policy in POLICIES:
            assert linear_extension(poset, policy).sequence == ("a", "b", "c")

    def test_antichain_lexicographic(self):
        poset = validate(("c", "a", "b"), [])
        order = linear_extension(poset, TieBreakPolicy.lexicographic())
        assert order.sequence == ("a", "b", "c")

    def test_antichain_input_order(self):
        poset = validate(("c", "a", "b"), [])
        assert linear_extension(poset).sequence == ("c", "a", "b")

    def test_diamond_lexicographic_is_valid_extension(self):
        got = linear_extension(diamond(), TieBreakPolicy.lexicographic()).sequence
        allowed = {o.sequence for o in enumerate_linear_extensions(diamond())}
        assert got in allowed

    def test_member_of_enumeration_for_all_policies(self):
        rng = random.Random(31)
        for _ in range(80):
            poset = random_poset(rng, rng.randrange(0, 8))
            allowed = {o.sequence for o in enumerate_linear_extensions(poset)}
            for policy in POLICIES + (TieBreakPolicy.seeded(rng.getrandbits(64)),):
                assert linear_extension(poset, policy).sequence in allowed

    def test_contains_input_relation(self):
        rng = random.Random(32)
        for _ in range(100):
            poset = random_poset(rng, rng.randrange(0, 10))
            order = linear_extension(poset, random_policy(rng))
            assert order.contains(poset.relation)
            assert sorted(order.sequence) == sorted(poset.ground)

    def test_deterministic_per_policy(self):
        poset = random_poset(random.Random(33), 9)
        for policy in POLICIES:
            assert linear_extension(poset, policy) == linear_extension(poset, policy)

    def test_seeds_reach_different_orders(self):
        poset = antichain(6)
        outputs = {
            linear_extension(poset, TieBreakPolicy.seeded(seed)).sequence
            for seed in range(20)
        }
        assert len(outputs) > 1


class TestSzpilrajn:
    def test_two_element_forced(self):
        cert = szpilrajn(validate(("a", "b"), []), ForcedPair("a", "b"))
        assert cert.output_order.sequence == ("a", "b")
        assert cert.verify()

    def test_comparable_forced_rejected(self):
        poset = validate(("a", "b"), [("a", "b")])
        with pytest.raises(NotIncomparable):
            szpilrajn(poset, ForcedPair("b", "a"))

    def test_diamond_forced_reversal(self):
        cert = szpilrajn(diamond(), ForcedPair("y", "x"))
        order = cert.output_order
        assert order.before("y", "x")
        assert order.contains(diamond().relation)
        assert cert.verify()

    def test_certificate_records_original_relation(self):
        poset = diamond()
        cert = szpilrajn(poset, ForcedPair("y", "x"))
        assert cert.input_relation == poset.relation
        assert cert.forced == ForcedPair("y", "x")

    def test_no_forced_pair(self):
        poset = diamond()
        cert = szpilrajn(poset)
        assert cert.forced is None
        assert cert.verify()
        assert is_total(poset.ground, cert.output_order.induced_pairs)

    def test_pipeline_is_exactly_two_stages(self):
        rng = random.Random(34)
        for _ in range(60):
            poset = random_poset(rng, rng.randrange(2, 8))
            free = incomparable_pairs(poset)
            if not free:
                continue
            a, b = free[rng.randrange(len(free))]
            policy = random_policy(rng)
            forced = ForcedPair(a, b)
            cert = szpilrajn(poset, forced, policy)
            staged = linear_extension(extend_with_pair(poset, forced), policy)
            assert cert.output_order == staged

    def test_output_satisfies_total_order_axioms(self):
        rng = random.Random(35)
        for _ in range(60):
            poset = random_poset(rng, rng.randrange(0, 9))
            order = szpilrajn(poset, None, random_policy(rng)).output_order
            rel = order.induced_pairs
            assert strict_order_axioms_hold(order.sequence, rel)
            assert is_total(order.sequence, rel)


class TestCertificateVerify:
    def test_detects_missing_containment(self):
        cert = ExtensionCertificate(
            input_relation=frozenset({("a", "b")}),
            output_order=LinearOrder(("b", "a")),
        )
        assert not cert.verify()

    def test_detects_backward_forced_pair(self):
        cert = ExtensionCertificate(
            input_relation=frozenset(),
            output_order=LinearOrder(("a", "b")),
            forced=ForcedPair("b", "a"),
        )
        assert not cert.verify()

    def test_detects_foreign_elements(self):
        cert = ExtensionCertificate(
            input_relation=frozenset({("a", "z")}),
            output_order=LinearOrder(("a", "b")),
        )
        assert not cert.verify()


class TestEnumerate:
    def test_chain_of_five(self):
        result = enumerate_linear_extensions(chain(5))
        assert len(result) == 1
        assert not result.truncated

    def test_antichain_of_three(self):
        result = enumerate_linear_extensions(antichain(3))
        assert len(result) == 6
        assert not result.truncated

    def test_diamond(self):
        result = enumerate_linear_extensions(diamond())
        assert [o.sequence for o in result] == [
            ("0", "x", "y", "1"),
            ("0", "y", "x", "1"),
        ]

    def test_empty_poset_has_one_extension(self):
        result = enumerate_linear_extensions(validate((), []))
        assert [o.sequence for o in result] == [()]

    def test_canonical_order_is_lexicographic_by_ground_position(self):
        poset = antichain(4)
        gi = poset.ground_index
        seqs = [
            tuple(gi[t] for t in o.sequence)
            for o in enumerate_linear_extensions(poset)
        ]
        assert seqs == sorted(seqs)

    def test_truncation(self):
        result = enumerate_linear_extensions(antichain(4), limit=10)
        assert len(result) == 10
        assert result.truncated
        assert result.limit == 10

    def test_limit_exactly_total_is_not_truncated(self):
        result = enumerate_linear_extensions(antichain(3), limit=6)
        assert len(result) == 6
        assert not result.truncated

    def test_limit_zero(self):
        result = enumerate_linear_extensions(antichain(2), limit=0)
        assert len(result) == 0
        assert result.truncated

    def test_negative_limit_rejected(self):
        with pytest.raises(ValueError):
            enumerate_linear_extensions(antichain(2), limit=-1)

    def test_matches_permutation_filter_oracle(self):
        rng = random.Random(36)
        for _ in range(60):
            poset = random_poset(rng, rng.randrange(0, 7))
            got = {o.sequence for o in enumerate_linear_extensions(poset)}
            assert got == extensions_by_filter(poset)


class TestCount:
    def test_antichain_six(self):
        assert count_linear_extensions(antichain(6)) == 720

    def test_chain_plus_isolated(self):
        poset = validate(("a", "b", "c"), [("a", "b")])
        assert count_linear_extensions(poset) == 3

    def test_diamond(self):
        assert count_linear_extensions(diamond()) == 2

    def test_empty(self):
        assert count_linear_extensions(validate((), [])) == 1

    def test_cap_enforced(self):
        poset = chain(21)
        with pytest.raises(CapExceeded) as info:
            count_linear_extensions(poset)
        assert (info.value.size, info.value.cap) == (21, 20)

    def test_cap_override(self):
        assert count_linear_extensions(chain(21), cap=25) == 1

    def test_agrees_with_enumeration(self):
        rng = random.Random(37)
        for _ in range(100):
            poset = random_poset(rng, rng.randrange(0, 9))
            assert count_linear_extensions(poset) == len(
                enumerate_linear_extensions(poset)
            )

import random
from functools import reduce

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from aisemiring.constructions import cyclic_group, flat_extension, heisenberg_group, quaternion_group
from aisemiring.errors import PreconditionError
from aisemiring.terms import (
    Identity,
    SemiringTerm,
    builtin_identities,
    derived_identities,
    eval_term,
    eval_word,
    find_counterexample,
    g,
    m_variety,
    member_of,
    parse_identity,
    parse_term,
    preset,
    satisfies,
    sg,
    sr,
    term_product,
    term_sum,
)

X, Y, Z = (SemiringTerm.var(i) for i in (1, 2, 3))

words = st.lists(st.integers(1, 3), min_size=1, max_size=3).map(tuple)
terms = st.lists(words, min_size=1, max_size=3).map(lambda ws: SemiringTerm(tuple(ws)))


class TestTermAlgebra:
    def test_union_idempotent(self):
        assert term_sum(X, X) == X

    def test_setwise_product(self):
        assert term_product(X, Y + Z) == SemiringTerm(((1, 2), (1, 3)))

    def test_distributes(self):
        lhs = (X + Y) * Z
        assert lhs == SemiringTerm(((1, 3), (2, 3)))
        assert lhs == X * Z + Y * Z

    def test_words_sorted_and_deduplicated(self):
        t = SemiringTerm(((2,), (1, 2), (2,)))
        assert t.words == ((1, 2), (2,))

    def test_rejects_empty(self):
        with pytest.raises(ValueError):
            SemiringTerm(())
        with pytest.raises(ValueError):
            SemiringTerm(((),))

    @given(terms, terms, terms)
    def test_free_ai_semiring_laws(self, a, b, c):
        assert a + b == b + a
        assert (a + b) + c == a + (b + c)
        assert a + a == a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert (b + c) * a == b * a + c * a


class TestParsing:
    def test_mixed_identity(self):
        ident = parse_identity("x1*x2^2 + x1 ≈ x2*x1")
        assert ident.lhs.words == ((1,), (1, 2, 2))
        assert ident.rhs.words == ((2, 1),)

    def test_word_power_and_equals(self):
        ident = parse_identity("(x1*x2)^3 = x1^3*x2^3")
        assert ident.lhs.words == ((1, 2, 1, 2, 1, 2),)
        assert ident.rhs.words == ((1, 1, 1, 2, 2, 2),)

    def test_letter_shorthand(self):
        assert parse_term("x y + z") == parse_term("x1*x2 + x3")

    def test_round_trip(self):
        for ident in builtin_identities(4):
            assert parse_identity(str(ident)) == Identity(ident.lhs, ident.rhs)

    @pytest.mark.parametrize("bad", ["x1 +", "x1 ≈", "x0 = x1", "x1 = x2 = x1", "x1 ^ = x1", "(x1 = x1"])
    def test_errors(self, bad):
        with pytest.raises(ValueError):
            parse_identity(bad)


class TestEvaluation:
    def test_single_variable(self, flat_z3):
        for a in flat_z3.elements:
            assert eval_term(X, flat_z3, {1: a}) == a

    def test_two_words_in_lattice(self, B):
        # 1*0 + 1 = min(1,0) max 1 = 1
        assert eval_term(parse_term("x*y + x"), B, {1: 1, 2: 0}) == 1

    def test_cube_in_flat_z2(self, flat_z2):
        assert eval_term(X ** 3, flat_z2, {1: 1}) == 1

    def test_unassigned(self, B):
        with pytest.raises(KeyError):
            eval_term(X * Y, B, {1: 0})

    def test_group_needs_single_word(self):
        with pytest.raises(PreconditionError):
            eval_term(X + Y, cyclic_group(2), {1: 0, 2: 1})

    def test_homomorphism_on_catalog(self, catalogs):
        rng = random.Random(7)
        for S in catalogs["sr3"].all():
            for _ in range(5):
                a = SemiringTerm(tuple(tuple(rng.randint(1, 3) for _ in range(rng.randint(1, 3))) for _ in range(2)))
                b = SemiringTerm(((rng.randint(1, 3), rng.randint(1, 3)),))
                asg = {v: rng.randrange(S.order) for v in (1, 2, 3)}
                ea, eb = eval_term(a, S, asg), eval_term(b, S, asg)
                assert eval_term(a + b, S, asg) == S.add[ea][eb]
                assert eval_term(a * b, S, asg) == S.mul[ea][eb]

    @given(terms, st.randoms(use_true_random=False))
    @settings(max_examples=50)
    def test_sum_order_irrelevant(self, t, rnd):
        S = flat_extension(quaternion_group())
        asg = {v: rnd.randrange(S.order) for v in (1, 2, 3)}
        values = [eval_word(w, S.mul, asg) for w in t.words]
        rnd.shuffle(values)
        assert reduce(lambda p, q: S.add[p][q], values) == eval_term(t, S, asg)


class TestSatisfaction:
    def test_burnside_in_flat_z2(self, flat_z2):
        assert satisfies(flat_z2, parse_identity("x^3 = x"))

    def test_defining_identity_in_flat_z2(self, flat_z2):
        assert satisfies(flat_z2, parse_identity("x^2 + y^2 = x^2 y^2"))

    def test_lattice_counterexample(self, B):
        ident = parse_identity("x + y = x y")
        assert find_counterexample(B, ident) == {1: 0, 2: 1}
        # x -> 1, y -> 0 also separates the sides: 1 versus 0
        asg = {1: 1, 2: 0}
        assert (eval_term(ident.lhs, B, asg), eval_term(ident.rhs, B, asg)) == (1, 0)


class TestVarieties:
    def test_flat_q8_in_sr5(self):
        assert member_of(flat_extension(quaternion_group()), sr(5))

    def test_flat_g3_in_sr4(self):
        assert member_of(flat_extension(heisenberg_group(3)), sr(4))

    def test_lattice_not_in_m2(self, B):
        assert member_of(B, sr(2))
        assert not member_of(B, m_variety(2))

    def test_group_presets(self):
        assert member_of(cyclic_group(4), g(5))
        assert not member_of(cyclic_group(4), g(4))
        assert member_of(flat_extension(cyclic_group(3)), sg(4))
        with pytest.raises(PreconditionError):
            member_of(cyclic_group(2), m_variety(3))

    def test_preset_lookup(self):
        assert preset("m3") == m_variety(3)
        assert preset("SR4") == sr(4)
        with pytest.raises(ValueError):
            preset("q3")
        with pytest.raises(ValueError):
            preset("m1")


class TestBuiltinIdentities:
    def by_name(self, n):
        return {i.name: i for i in builtin_identities(n)}

    def test_sum_split_n3(self):
        assert self.by_name(3)["sum-split"] == Identity(
            parse_term("x + y"), parse_term("x y^2 + x^2 y"), "sum-split"
        )

    def test_power_sum_degenerates_n2(self):
        i = self.by_name(2)["power-sum"]
        assert i.lhs == i.rhs == X

    def test_power_of_product_n4(self):
        i = self.by_name(4)["power-of-product"]
        assert (i.lhs, i.rhs) == (parse_term("(x y)^3"), parse_term("x^3 y^3"))

    def test_power_sum_n5(self):
        i = self.by_name(5)["power-sum"]
        assert (i.lhs, i.rhs) == (parse_term("x + x^4"), parse_term("x + x^2 + x^3 + x^4"))

    def test_contents(self):
        ids = builtin_identities(3)
        assert len(ids) == 7 and len(derived_identities(3)) == 5
        assert ids[0] == Identity(parse_term("x^3"), X, "burnside")
        assert ids[1] == Identity(parse_term("x^2 + y^2"), parse_term("x^2 y^2"), "defining")

    def test_bad_exponent(self):
        with pytest.raises(ValueError):
            builtin_identities(1)

    @pytest.mark.parametrize("n", [2, 3])
    def test_derived_identities_hold_on_members(self, catalogs, n):
        # sieve the larger Sr(n,1) catalog by M_n membership, independently of the M_n enumeration
        members = [S for S in catalogs[f"sr{n}"].all() if member_of(S, m_variety(n))]
        assert len(members) == sum(catalogs[f"m{n}"].counts().values())
        for S in members:
            for ident in derived_identities(n):
                assert satisfies(S, ident), (S, ident)

    def test_derived_identities_can_fail_outside_m(self, B):
        # the lattice is in Sr(2,1) but not M_2; at n=2 sum splitting reads x + y ≈ xy
        assert not satisfies(B, self.by_name(2)["sum-split"])

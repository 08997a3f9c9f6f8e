from itertools import combinations, permutations

import pytest

from aisemiring.algebra import FiniteSemiring, are_isomorphic, validate_axioms
from aisemiring.constructions import cyclic_group, flat_extension
from aisemiring.enumerator import (
    enumerate_algebras,
    read_catalog,
    semilattices,
    verify_si_characterisation,
    write_catalog,
)
from aisemiring.errors import ResourceLimitError
from aisemiring.oracles import defining_law, full_scan, power_law, relabel
from aisemiring.terms import VarietySpec, m_variety, member_of, parse_identity, sr


def canonical(S):
    return min(relabel(S.add, S.mul, p) for p in permutations(range(S.order)))


class TestEnumerate:
    @pytest.mark.parametrize("V", [sr(2), sr(5), m_variety(3)])
    def test_order_one(self, V):
        assert enumerate_algebras(1, V) == [FiniteSemiring([[0]], [[0]])]

    def test_order_five_refused(self):
        with pytest.raises(ResourceLimitError):
            enumerate_algebras(5, sr(2))

    def test_semilattice_counts(self):
        # semilattices up to isomorphism on 1..4 points
        assert [len(semilattices(k)) for k in (1, 2, 3, 4)] == [1, 1, 2, 5]

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_order_two_matches_full_scan(self, n):
        for V, holds in ((sr(n), power_law(n)), (m_variety(n), defining_law(n))):
            ours = sorted(canonical(S) for S in enumerate_algebras(2, V))
            assert ours == full_scan(2, holds)

    def test_m3_order_three_has_flat_z2(self, catalogs):
        target = flat_extension(cyclic_group(2))
        assert any(are_isomorphic(S, target) for S in catalogs["m3"].members[3])

    @pytest.mark.parametrize("key", ["m2", "m3", "sr2", "sr3"])
    def test_members_valid_and_distinct(self, catalogs, key):
        cat = catalogs[key]
        for S in cat.all():
            assert validate_axioms(S) == [] and member_of(S, cat.variety)
        for k, ms in cat.members.items():
            for S, T in combinations(ms, 2):
                assert are_isomorphic(S, T) is None

    def test_deterministic_order(self):
        a = enumerate_algebras(3, sr(3))
        assert a == enumerate_algebras(3, sr(3))
        assert [(S.add, S.mul) for S in a] == sorted((S.add, S.mul) for S in a)

    def test_workers_agree(self):
        assert enumerate_algebras(3, sr(2), workers=2) == enumerate_algebras(3, sr(2))

    def test_all_ai_semirings(self):
        # the trivial identity x = x admits every ai-semiring on 1..4 points
        anything = VarietySpec("all", 2, (parse_identity("x = x"),))
        assert [len(enumerate_algebras(k, anything)) for k in (1, 2, 3, 4)] == [1, 6, 61, 866]

    def test_counts(self, catalogs):
        assert catalogs["m2"].counts() == {1: 1, 2: 1, 3: 2, 4: 5}
        assert catalogs["m3"].counts() == {1: 1, 2: 1, 3: 3, 4: 8}


class TestCatalogFiles:
    def test_round_trip(self, catalogs, tmp_path):
        cat = catalogs["m3"]
        paths = write_catalog(cat, tmp_path)
        assert [p.name for p in paths][:3] == ["m3_k1_0.alg", "m3_k2_0.alg", "m3_k3_0.alg"]
        assert len(paths) == sum(cat.counts().values())
        back = read_catalog(cat.variety, tmp_path)
        assert back.members == cat.members


class TestSICharacterisation:
    def test_m2_small(self, catalogs):
        members = [S for S in catalogs["m2"].all() if S.order <= 3]
        assert verify_si_characterisation(members, 2).ok

    def test_m3(self, catalogs):
        rep = verify_si_characterisation(catalogs["m3"].all(), 3)
        assert rep.ok
        assert rep.checked == sum(catalogs["m3"].counts().values()) - 1
        assert rep.si_by_order[3] >= 1

    def test_singleton_skipped(self):
        rep = verify_si_characterisation([FiniteSemiring([[0]], [[0]])], 2)
        assert rep.checked == 0 and rep.ok

    def test_non_member_reported(self, B):
        assert not verify_si_characterisation([B], 2).ok

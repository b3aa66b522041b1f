import pytest

from gklab import catalog
from gklab import elements as el
from gklab.groups import element_order
from gklab.structure import (NotSolvable, SubgroupHandle, centralizer,
                             class_predicates, conjugacy_classes, core_p,
                             derived_subgroup, exponent, fitting,
                             fitting_series, is_abelian, is_cyclic,
                             is_nilpotent, is_solvable, minimal_normal_subgroups,
                             normalizer_of_cyclic, quotient, sylow)


class TestConjugacy:
    def test_s3_class_sizes(self, s3):
        data = conjugacy_classes(s3)
        assert sorted(len(c) for c in data.classes) == [1, 2, 3]

    def test_q8_has_five_classes(self, q8):
        assert len(conjugacy_classes(q8).classes) == 5

    def test_trivial_group(self):
        G = catalog.cyclic(1)
        assert len(conjugacy_classes(G).classes) == 1

    def test_classes_partition_and_share_orders(self, s4):
        data = conjugacy_classes(s4)
        assert sum(len(c) for c in data.classes) == 24
        for rep, cls in zip(data.representatives, data.classes):
            n = element_order(s4, rep)
            assert all(element_order(s4, x) == n for x in cls)
            assert 24 % len(cls) == 0


class TestCentralizerNormalizer:
    def test_order_3_in_s3(self, s3):
        g = el.perm_from_cycles(3, [[1, 2, 3]])
        assert centralizer(s3, g).order == 3
        assert normalizer_of_cyclic(s3, g).order == 6

    def test_identity(self, s3):
        assert centralizer(s3, s3.identity).order == 6
        assert normalizer_of_cyclic(s3, s3.identity).order == 6

    def test_order_7_in_c7c6(self, c7c6, seven_cycle):
        assert centralizer(c7c6, seven_cycle).order == 7
        assert normalizer_of_cyclic(c7c6, seven_cycle).order == 42


class TestSylowAndCores:
    def test_sylow_s4(self, s4):
        assert sylow(s4, 2).order == 8
        assert sylow(s4, 3).order == 3

    def test_sylow_absent_prime(self, s3):
        assert sylow(s3, 7).order == 1

    def test_sylow_of_p_group_is_whole(self, q8):
        assert sylow(q8, 2).order == 8
        assert core_p(q8, 2).order == 8

    def test_core2_s4_is_klein(self, s4):
        K = core_p(s4, 2)
        assert K.order == 4
        assert K.normal

    def test_core3_s3(self, s3):
        assert core_p(s3, 3).order == 3

    def test_sylow_q8_in_order_200_group(self):
        G = catalog.catalog_entry("fig3.e").build()
        S = sylow(G, 2).as_group()
        assert S.order == 8
        assert exponent(S) == 4
        assert sum(1 for g in S.elements if element_order(S, g) == 2) == 1


class TestFitting:
    def test_fitting_s3(self, s3):
        assert fitting(s3).order == 3
        assert fitting_series(s3).length == 2

    def test_fitting_series_s4(self, s4):
        fs = fitting_series(s4)
        assert fs.length == 3
        assert [s.order for s in fs.series] == [1, 4, 12, 24]

    def test_a5_not_solvable(self, a5):
        fs = fitting_series(a5)
        assert fs.length is None
        assert not fs.solvable
        assert not is_solvable(a5)

    def test_trivial_group_length_zero(self):
        assert fitting_series(catalog.cyclic(1)).length == 0

    def test_fitting_is_nilpotent_normal(self, s4):
        F = fitting(s4)
        assert F.normal
        assert is_nilpotent(F.as_group())


class TestQuotient:
    def test_s4_mod_klein(self, s4):
        Q = quotient(s4, core_p(s4, 2))
        assert Q.order == 6
        assert not is_abelian(Q)

    def test_trivial_quotients(self, s3):
        whole = SubgroupHandle(s3, s3.elements, True)
        assert quotient(s3, whole).order == 1
        triv = SubgroupHandle(s3, frozenset({s3.identity}), True)
        assert quotient(s3, triv).order == 6

    def test_c7c6_mod_c7(self, c7c6):
        Q = quotient(c7c6, core_p(c7c6, 7))
        assert Q.order == 6 and is_cyclic(Q)

    def test_order_multiplicative(self, s4):
        N = core_p(s4, 2)
        assert quotient(s4, N).order * N.order == s4.order


class TestMinimalNormal:
    def test_s4(self, s4):
        mins = minimal_normal_subgroups(s4)
        assert len(mins) == 1 and mins[0].order == 4

    def test_klein(self):
        V = catalog.elem_abelian(2, 2)
        assert sorted(m.order for m in minimal_normal_subgroups(V)) == [2, 2, 2]

    def test_simple_cyclic(self, c5):
        mins = minimal_normal_subgroups(c5)
        assert len(mins) == 1 and mins[0].order == 5

    def test_nonsolvable_unsupported(self, a5):
        with pytest.raises(NotSolvable):
            minimal_normal_subgroups(a5)


class TestPredicates:
    def test_s4(self, s4):
        p = class_predicates(s4)
        assert p["solvable"] and not p["supersolvable"] and not p["metanilpotent"]

    def test_c2_cubed_not_metacyclic(self):
        p = class_predicates(catalog.elem_abelian(2, 3))
        assert p["abelian"] and not p["metacyclic"]

    def test_nilpotent_implies(self, q8):
        p = class_predicates(q8)
        assert p["nilpotent"] and p["supersolvable"] and p["metanilpotent"]

    def test_s3_metacyclic(self, s3):
        p = class_predicates(s3)
        assert p["metacyclic"] and p["metabelian"] and p["supersolvable"]

    def test_derived_subgroup_s4(self, s4):
        assert derived_subgroup(s4).order == 12

import pytest

from gklab import catalog
from gklab import elements as el
from gklab.groups import enumerate_group
from gklab.rationality import is_cut_group
from gklab.structure import is_solvable


class TestBuilders:
    def test_cyclic(self):
        assert catalog.cyclic(1).order == 1
        assert catalog.cyclic(6).order == 6
        with pytest.raises(catalog.OutOfRange):
            catalog.cyclic(0)

    def test_elem_abelian(self):
        G = catalog.elem_abelian(3, 2)
        assert G.order == 9
        from gklab.structure import exponent
        assert exponent(G) == 3

    def test_dihedral(self):
        assert catalog.dihedral(8).order == 8
        with pytest.raises(catalog.OutOfRange):
            catalog.dihedral(7)

    def test_quaternion8(self, q8):
        assert q8.order == 8

    def test_sl2_3(self):
        G = catalog.sl2_3()
        assert G.order == 24
        from gklab.groups import element_order
        assert sum(1 for g in G.elements if element_order(G, g) == 2) == 1

    def test_sym_alt(self):
        assert catalog.sym(5).order == 120
        assert catalog.alt(4).order == 12
        assert catalog.alt(6).order == 360
        with pytest.raises(catalog.OutOfRange):
            catalog.sym(7)
        with pytest.raises(catalog.OutOfRange):
            catalog.alt(2)

    def test_dicyclic12(self):
        assert catalog.dicyclic12().order == 12


class TestCompanionMatrices:
    def test_a_mod_2_has_order_7(self):
        mats = catalog.companion_matrices()
        A = el.mat(2, mats["A"])
        G = enumerate_group([A])
        assert G.order == 7

    def test_c_d_mod_2_give_s3(self):
        mats = catalog.companion_matrices()
        G = enumerate_group([el.mat(2, mats["C"]), el.mat(2, mats["D"])])
        assert G.order == 6

    def test_e_f_mod_2_give_order_20(self):
        mats = catalog.companion_matrices()
        G = enumerate_group([el.mat(2, mats["E"]), el.mat(2, mats["F"])])
        assert G.order == 20


class TestCatalog:
    def test_entry_count(self):
        entries = catalog.catalog()
        assert len(entries) == 22
        assert sum(1 for e in entries if e.name.startswith("fig3.")) == 18
        assert sum(1 for e in entries if e.name.startswith("twofrob.")) == 4

    def test_names_unique(self):
        names = [e.name for e in catalog.catalog()]
        assert len(set(names)) == len(names)

    def test_shaded_entries_rational(self):
        shaded = {"fig3." + c for c in "acdefk"}
        for e in catalog.catalog():
            if e.name.startswith("fig3."):
                assert e.is_rational == (e.name in shaded)

    def test_unknown_entry(self):
        with pytest.raises(KeyError):
            catalog.catalog_entry("fig3.z")

    def test_small_entries_build(self):
        for name in ("fig3.a", "fig3.c", "fig3.g", "fig3.l", "twofrob.c"):
            e = catalog.catalog_entry(name)
            assert e.build().order == e.order


class TestCorpus:
    def test_deterministic(self):
        a = [g.label for g in catalog.corpus(1, 30, 500)]
        b = [g.label for g in catalog.corpus(1, 30, 500)]
        assert a == b

    def test_max_order_respected(self):
        assert all(g.order <= 300 for g in catalog.corpus(7, 25, 300))

    def test_count(self):
        assert len(catalog.corpus(2, 17, 1000)) == 17

    def test_pinned_solvable_cut_count(self):
        # regression constant measured once for the standard corpus call
        groups = catalog.corpus(1, 200, 2000)
        distinct = {}
        for g in groups:
            distinct.setdefault(g.label, g)
        per_label = {lbl: is_solvable(g) and is_cut_group(g)
                     for lbl, g in distinct.items()}
        count = sum(1 for g in groups if per_label[g.label])
        assert count == 124
        assert count >= 50

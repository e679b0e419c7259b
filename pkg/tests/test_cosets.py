import pytest

from basekit import SubgroupHandle, catalog, core, parse_cycles
from basekit.cosets import CosetSpace


class TestBuild:
    def test_index_five_equals_natural(self, sym5_coset_space):
        sp = sym5_coset_space
        assert sp.size == 5
        assert sp.image_order == 120
        assert sp.is_faithful()

    def test_example_sizes(self, sym8_space, wr52_space):
        assert sym8_space.size == 35
        assert wr52_space.size == 25

    def test_lagrange(self, sym8_space):
        assert sym8_space.size * sym8_space.subgroup.order == sym8_space.group.order

    def test_not_a_subgroup(self):
        with pytest.raises(ValueError):
            CosetSpace.build(catalog("alt(4)"), catalog("sym(4)"))

    def test_degenerate_whole_group(self):
        g = catalog("sym(4)")
        sp = CosetSpace.build(g, g)
        assert sp.size == 1
        assert sp.image_order == 1
        assert sp.core_order == 24


class TestKernel:
    def test_kernel_equals_core_exactly(self):
        # two independent computations of the same object
        cases = [
            ("sym(5)", "young(4,1)"),
            ("sym(4)", "young(2,2)"),
            ("wreath(sym(2),sym(3))", "wreath(sym(2),sym(1))"),
        ]
        for gspec, hspec in cases:
            g, h = catalog(gspec), catalog(hspec)
            if h.degree < g.degree:
                from basekit.catalog import extend_degree

                h = extend_degree(h, g.degree)
            sp = CosetSpace.build(g, h)
            ker = sp.kernel()
            cor = core(SubgroupHandle(g, h))
            assert ker.same_elements(cor.group)

    def test_unfaithful_action_quotients(self):
        # cosets of a normal subgroup: the kernel is that subgroup
        g = catalog("sym(4)")
        a4 = catalog("alt(4)")
        sp = CosetSpace.build(g, a4)
        assert sp.size == 2
        assert sp.image_order == 2
        assert sp.core_order == 12


class TestAction:
    def test_act_identity(self, sym5_coset_space):
        g = sym5_coset_space.group.identity
        for p in range(5):
            assert sym5_coset_space.act(p, g) == p

    def test_act_inverse(self, sym5_coset_space):
        g = parse_cycles("(1 3 5)(2 4)", 5)
        for p in range(5):
            q = sym5_coset_space.act(p, g)
            assert sym5_coset_space.act(q, g.inverse()) == p

    def test_natural_action_keeps_labels(self):
        nat = CosetSpace.natural(catalog("sym(5)"))
        assert nat.act(0, parse_cycles("(1 2)", 5)) == 1
        assert nat.act(4, parse_cycles("(1 2)", 5)) == 4

    def test_act_rejects_outsiders(self, sym5_coset_space):
        with pytest.raises(ValueError):
            sym5_coset_space.act(0, parse_cycles("(1 2 3 4 5 6)", 6))

    def test_transitivity(self, sym8_space):
        # orbit of point 0 under generator actions covers everything
        seen = {0}
        frontier = [0]
        while frontier:
            nxt = []
            for p in frontier:
                for gi in range(sym8_space.gen_action.shape[1]):
                    q = int(sym8_space.gen_action[p, gi])
                    if q not in seen:
                        seen.add(q)
                        nxt.append(q)
            frontier = nxt
        assert seen == set(range(35))


class TestStabilizers:
    def test_point_zero_stabilizer_is_subgroup(self, sym5_coset_space):
        stab = sym5_coset_space.point_stabilizer(0)
        assert stab.same_elements(sym5_coset_space.subgroup)

    def test_orbit_stabilizer_at_every_point(self, sym5_coset_space):
        for p in range(5):
            stab = sym5_coset_space.point_stabilizer(p)
            assert stab.order * sym5_coset_space.size == sym5_coset_space.group.order

    def test_stabilizers_are_conjugate(self, sym5_coset_space):
        sp = sym5_coset_space
        g = parse_cycles("(1 2 3 4 5)", 5)
        p = 0
        q = sp.act(p, g)
        stab_p = sp.point_stabilizer(p)
        stab_q = sp.point_stabilizer(q)
        conj = {(g.inverse() * x * g).images for x in stab_p.elements}
        assert conj == set(stab_q.element_images)

    def test_regular_action_trivial_stabilizer(self):
        g = catalog("cyc(5)")
        sp = CosetSpace.natural(g)
        assert sp.point_stabilizer(0).order == 1

    def test_h_indices_identity_first(self, sym8_space):
        assert int(sym8_space.h_indices[0]) == 0
        assert sym8_space.h_order == 1152

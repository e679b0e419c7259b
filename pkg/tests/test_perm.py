import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from basekit import (
    BudgetError,
    GeneratedGroup,
    ParseError,
    Permutation,
    catalog,
    compose,
    format_cycles,
    parse_cycles,
)


def perm(cycles, degree):
    return parse_cycles(cycles, degree)


class TestCompose:
    def test_identity_case(self):
        p = perm("(1 2 3)", 3)
        assert compose(p, Permutation.identity(3)) == p

    def test_involution(self):
        t = perm("(1 2)", 3)
        assert compose(t, t).is_identity()

    def test_hand_composed_convention(self):
        # apply (1 2 3) first, then (1 2): 0->1->0, 1->2->2, 2->0->1
        p = perm("(1 2 3)", 3)
        q = perm("(1 2)", 3)
        assert (p * q).images == (0, 2, 1)

    def test_degree_mismatch(self):
        with pytest.raises(ValueError):
            compose(perm("(1 2)", 2), perm("(1 2)", 3))


class TestParseCycles:
    def test_single_transposition(self):
        assert perm("(1 2)", 4).images == (1, 0, 2, 3)

    def test_empty_is_identity(self):
        assert perm("", 3).is_identity()
        assert perm("()", 3).is_identity()

    def test_two_four_cycles(self):
        p = perm("(1 2 3 4)(5 6 7 8)", 8)
        assert p.images == (1, 2, 3, 0, 5, 6, 7, 4)

    @pytest.mark.parametrize(
        "bad",
        ["(1 2 2)", "(0 1)", "(9)", "(1 2", "x(1 2)", "(1 a)"],
    )
    def test_parse_errors(self, bad):
        with pytest.raises(ParseError):
            parse_cycles(bad, 8)

    def test_round_trip_catalog_up_to_degree_8(self):
        for spec in ["sym(4)", "alt(4)", "dih(5)", "cyc(6)", "young(3,2)",
                     "young-wreath(4,2)"]:
            g = catalog(spec)
            for e in g.elements:
                assert parse_cycles(format_cycles(e), g.degree) == e


class TestInvariants:
    def test_inverse_identity(self):
        for spec in ["sym(4)", "dih(6)"]:
            g = catalog(spec)
            for p in g.elements:
                assert (p * p.inverse()).is_identity()

    def test_not_a_bijection_rejected(self):
        with pytest.raises(ValueError):
            Permutation([0, 0, 1])


@given(st.permutations(list(range(6))), st.permutations(list(range(6))))
def test_compose_matches_pointwise(a, b):
    pa, pb = Permutation(a), Permutation(b)
    prod = pa * pb
    for i in range(6):
        assert prod(i) == pb(pa(i))


@given(st.permutations(list(range(7))))
def test_format_parse_round_trip(imgs):
    p = Permutation(imgs)
    assert parse_cycles(format_cycles(p), 7) == p


@settings(deadline=None, max_examples=30)
@given(st.lists(st.permutations(list(range(5))), min_size=1, max_size=3))
def test_closure_soundness_sampled(gen_images):
    g = GeneratedGroup(5, [Permutation(x) for x in gen_images])
    elems = g.elements
    assert g.identity in elems
    # exhaustive closure check is affordable at this size
    elem_set = set(elems)
    for p in elems:
        assert p.inverse() in elem_set
        for q in elems:
            if len(elem_set) > 40:
                break
            assert p * q in elem_set


class TestGeneratedGroup:
    def test_cyclic_enumeration(self):
        g = catalog("cyc(5)")
        assert g.order == 5

    def test_wreath_orders(self):
        assert catalog("wreath(sym(5),sym(2))").order == 28800
        assert catalog("wreath(sym(4),sym(2))").order == 1152

    def test_enumeration_cap(self):
        g = GeneratedGroup(8, catalog("sym(8)").generators, enum_cap=1000)
        with pytest.raises(BudgetError) as exc:
            g.enumerate()
        assert exc.value.partial is not None and exc.value.partial > 1000

    def test_orbit_identity_group(self):
        g = GeneratedGroup(3, [Permutation.identity(3)])
        assert g.orbit(0) == {0}

    def test_orbit_transitive_cycle(self):
        assert catalog("cyc(4)").orbit(2) == {0, 1, 2, 3}

    def test_orbit_two_blocks(self):
        g = GeneratedGroup(4, [parse_cycles("(1 2)", 4), parse_cycles("(3 4)", 4)])
        assert g.orbit(0) == {0, 1}

    def test_orbit_size_divides_order(self):
        for spec in ["sym(4)", "dih(6)", "young(3,2)", "wreath(sym(2),sym(3))"]:
            g = catalog(spec)
            for x in range(g.degree):
                assert g.order % len(g.orbit(x)) == 0

    def test_element_index_and_membership(self):
        g = catalog("sym(4)")
        for i, e in enumerate(g.elements):
            assert g.element_index(e) == i
        assert parse_cycles("(1 2 3 4 5)", 5) not in catalog("sym(4)").elements
        with pytest.raises(ValueError):
            g.element_index(Permutation.identity(5))

import math

import pytest

from basekit import ParseError, catalog, dump_group_text, load_group_text
from basekit.catalog import extend_degree


@pytest.mark.parametrize(
    "spec,order",
    [
        ("sym(1)", 1),
        ("sym(5)", 120),
        ("alt(5)", 60),
        ("alt(3)", 3),
        ("cyc(7)", 7),
        ("dih(4)", 8),
        ("dih(10)", 20),
        ("young(4,4)", 576),
        ("young(4,1)", 24),
        ("young(1,1,1)", 1),
        ("wreath(sym(5),sym(2))", 28800),
        ("wreath(sym(4),sym(2))", 1152),
        ("young-wreath(4,2)", 1152),
        ("wreath(young(4,1),sym(2))", 1152),
        ("wreath(sym(4),sym(1))", 24),
    ],
)
def test_catalog_orders(spec, order):
    assert catalog(spec).order == order


def test_closed_forms():
    for n in range(2, 7):
        assert catalog(f"sym({n})").order == math.factorial(n)
    for n in range(3, 7):
        assert catalog(f"alt({n})").order == math.factorial(n) // 2
    for n in range(3, 9):
        assert catalog(f"dih({n})").order == 2 * n


def test_wreath_degree():
    g = catalog("wreath(sym(5),sym(2))")
    assert g.degree == 10
    assert catalog("wreath(sym(4),sym(1))").degree == 4


def test_wreath_intransitive_top_keeps_order_identity():
    # the top young(1,1) is trivial on two points; both blocks still get a copy
    g = catalog("wreath(sym(3),young(1,1))")
    assert g.degree == 6
    assert g.order == 36


@pytest.mark.parametrize("bad", ["frob(20)", "sym(0)", "sym(999)", "dih(2)",
                                 "young()", "wreath(sym(2))", "sym(3) x"])
def test_spec_errors(bad):
    with pytest.raises(ParseError):
        catalog(bad)


def test_group_file_round_trip():
    for spec in ["sym(4)", "dih(5)", "wreath(sym(2),sym(3))"]:
        g = catalog(spec)
        text = dump_group_text(g)
        h = load_group_text(text)
        assert h.degree == g.degree
        assert h.order == g.order
        assert set(h.element_images) == set(g.element_images)


def test_group_file_comments_and_errors():
    g = load_group_text("# a comment\ndegree 4\ngen (1 2)\ngen (1 2 3 4)  # trailing\n")
    assert g.order == 24
    with pytest.raises(ParseError):
        load_group_text("gen (1 2)\n")
    with pytest.raises(ParseError):
        load_group_text("degree 3\nbogus line\n")
    with pytest.raises(ParseError):
        load_group_text("degree 3\ngen (1 5)\n")


def test_extend_degree():
    g = extend_degree(catalog("sym(4)"), 5)
    assert g.degree == 5
    assert g.order == 24
    assert all(p.images[4] == 4 for p in g.elements)
    with pytest.raises(ParseError):
        extend_degree(catalog("sym(4)"), 3)

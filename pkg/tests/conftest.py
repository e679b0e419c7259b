import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from basekit import catalog, engine
from basekit.cosets import CosetSpace


@pytest.fixture(scope="session")
def sym8_space():
    """Sym8 on the 35 cosets of the order-1152 imprimitive subgroup."""
    return CosetSpace.build(catalog("sym(8)"), catalog("young-wreath(4,2)"))


@pytest.fixture(scope="session")
def sym8_reg5(sym8_space):
    """The full 35^4 reduced scan with representatives; shared by several tests."""
    return engine.reg_count(sym8_space, 5, rep_cap=20)


@pytest.fixture(scope="session")
def wr52_group():
    return catalog("wreath(sym(5),sym(2))")


@pytest.fixture(scope="session")
def wr52_sub():
    return catalog("wreath(young(4,1),sym(2))")


@pytest.fixture(scope="session")
def wr52_space(wr52_group, wr52_sub):
    """Sym5 wr Sym2 on the 25 cosets of its order-1152 solvable subgroup."""
    return CosetSpace.build(wr52_group, wr52_sub)


@pytest.fixture(scope="session")
def sym4_natural():
    return CosetSpace.natural(catalog("sym(4)"))


@pytest.fixture(scope="session")
def sym5_coset_space():
    return CosetSpace.build(catalog("sym(5)"), catalog("young(4,1)"))

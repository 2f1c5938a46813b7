import numpy as np
import pytest

from vknot import parse
from vknot.fixtures import load_fixtures

PSEUDO_HOPF = "O1+/U1+"
KINK = "O1+,U1+"
HOPF = "O1+,U2+/U1+,O2+"
TREFOIL = "O1-,U2-,O3-,U1-,O2-,U3-"
VIRTUAL_TREFOIL = "O1+,O2+,U1+,U2+"
FIGURE_EIGHT = "U1+,O2-,U3-,O1+,U4+,O3-,U2-,O4+"


@pytest.fixture
def rng():
    return np.random.default_rng(20240517)


@pytest.fixture(scope="session")
def fixtures():
    return load_fixtures()


@pytest.fixture(scope="session")
def classical_corpus(fixtures):
    names = ["unknot", "kink", "hopf", "split_unlink", "trefoil_left", "trefoil_right", "figure_eight"]
    return [parse(fixtures[n].code) for n in names]

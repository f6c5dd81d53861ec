import pytest

from argfacets import CnfFormula, standard_translation

from oracles import make_ex1


@pytest.fixture
def ex1():
    """The seven-argument breakfast framework used throughout."""
    return make_ex1()


@pytest.fixture
def fx():
    """Standard translation of the one-clause formula (x)."""
    return standard_translation(CnfFormula(1, ((1,),)))


@pytest.fixture
def fxx():
    """Standard translation of the contradiction (x) and (not x)."""
    return standard_translation(CnfFormula(1, ((1,), (-1,))))

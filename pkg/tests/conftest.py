import pytest

from fflab.circle import CountingProblem
from fflab.fields import FieldSpec
from fflab.forms import fermat_form


@pytest.fixture(scope="session")
def spec5():
    return FieldSpec(5)


@pytest.fixture(scope="session")
def spec7():
    return FieldSpec(7)


@pytest.fixture(scope="session")
def prob_n3(spec5):
    """Diagonal cubic, three variables, degree-1 curves over F_5."""
    return CountingProblem(spec5, fermat_form(spec5, 3, 3), 1)


@pytest.fixture(scope="session")
def prob_n2(spec5):
    """Diagonal cubic, two variables, degree-1 curves over F_5."""
    return CountingProblem(spec5, fermat_form(spec5, 2, 3), 1)


@pytest.fixture(scope="session")
def prob_q7_n2(spec7):
    return CountingProblem(spec7, fermat_form(spec7, 2, 3), 1)

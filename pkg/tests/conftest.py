import pytest

from src.modules.group_core import make_group

Z = "<s|>"
Z2 = "<s1,s2|[s1,s2]>"
Z3 = "<s1,s2,s3|[s1,s2],[s1,s3],[s2,s3]>"
F2 = "<a,b|>"
Z2_FREE_Z = "<s1,s2,s3|[s1,s2]>"


@pytest.fixture(scope="session")
def z():
    return make_group(Z)


@pytest.fixture(scope="session")
def z2():
    return make_group(Z2)


@pytest.fixture(scope="session")
def z3():
    return make_group(Z3)


@pytest.fixture(scope="session")
def f2():
    return make_group(F2)


@pytest.fixture(scope="session")
def z2_free_z():
    return make_group(Z2_FREE_Z)


def lattice(group, *exponents):
    """Element s1^x1 s2^x2 ... of a free abelian group."""
    word = []
    for idx, exponent in enumerate(exponents, start=1):
        word.extend([idx if exponent > 0 else -idx] * abs(exponent))
    return group.element(tuple(word))

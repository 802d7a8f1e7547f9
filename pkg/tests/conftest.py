import pytest

from schubsing import build_root_system, parse_word


def roots(rs, *texts):
    from schubsing import parse_root
    return {parse_root(t, rs.rank) for t in texts}


@pytest.fixture(scope="session")
def b2():
    return build_root_system("B", 2)


@pytest.fixture(scope="session")
def b2_example(b2):
    """w = s1 s2 s1 with s1 the short simple reflection, x = s1."""
    return parse_word(b2, "s1 s2 s1"), parse_word(b2, "s1")


@pytest.fixture(scope="session")
def g2():
    return build_root_system("G2", allow_g2=True)


@pytest.fixture(scope="session")
def a3_3412():
    rs = build_root_system("A", 3)
    return parse_word(rs, "s2 s1 s3 s2")

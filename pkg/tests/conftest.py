import pathlib

import pytest

import landaulab as ll

REPO = pathlib.Path(__file__).resolve().parents[1]
ZEROS_PATH = REPO / "data" / "zeta_zeros.txt"


@pytest.fixture(scope="session")
def prime_table_100k():
    return ll.build_prime_table(100_000)


@pytest.fixture(scope="session")
def landau_2000(prime_table_100k):
    return ll.build_landau_table(2000, prime_table_100k)


@pytest.fixture(scope="session")
def zeros_table():
    if not ZEROS_PATH.exists():
        pytest.skip(f"zeros dataset missing: {ZEROS_PATH}")
    return ll.load_zeros_file(str(ZEROS_PATH))


@pytest.fixture(scope="session")
def cheb_10k(prime_table_100k):
    return ll.build_chebyshev_tables(prime_table_100k, 10_000)


@pytest.fixture(scope="session")
def deps_3000(zeros_table):
    return ll.build_deps(3000, zeros=zeros_table)

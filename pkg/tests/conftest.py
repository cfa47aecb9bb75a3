import pytest

from idempart import enumerate_idempotents, enumerate_permutations


@pytest.fixture(scope="session")
def idems_by_n():
    """All idempotents for 1 <= n <= 6, constructively enumerated."""
    return {n: list(enumerate_idempotents(n)) for n in range(1, 7)}


@pytest.fixture(scope="session")
def perms_by_n():
    """All permutations for 1 <= n <= 6."""
    return {n: list(enumerate_permutations(n)) for n in range(1, 7)}

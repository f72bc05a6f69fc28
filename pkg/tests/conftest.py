import pytest

from pivotminors import PivotMinorCache


@pytest.fixture(scope="session")
def cache():
    """One containment cache shared by the whole run; every entry is a
    pure function of its key, so sharing across tests is safe."""
    return PivotMinorCache()

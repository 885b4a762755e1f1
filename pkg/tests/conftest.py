import pytest

from family.models import SetFamily


@pytest.fixture
def two_stars() -> SetFamily:
    """Two disjoint stars; (3,1)- but not (2,1)-intersecting"""
    return SetFamily.build([[1, 2], [1, 3], [4, 5], [4, 6]])


@pytest.fixture
def star() -> SetFamily:
    return SetFamily.build([[0, 1], [0, 2], [0, 3]])


@pytest.fixture
def disjoint_triple() -> SetFamily:
    return SetFamily.build([[1, 2], [3, 4], [5, 6]])


@pytest.fixture
def write_family(tmp_path):
    """Write family-file text to a temporary path and return the path as str"""
    def _write(text: str, name: str = "family.txt") -> str:
        path = tmp_path / name
        path.write_text(text)
        return str(path)
    return _write

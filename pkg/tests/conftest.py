import pytest

from abelia import builtin, list_builtins


@pytest.fixture(scope="session")
def cat():
    """Name -> algebra for every builtin fixture."""
    return {name: builtin(name).algebra for name in list_builtins()}

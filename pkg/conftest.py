import pytest

from bezout_bezier.config import get_settings


@pytest.fixture
def fresh_settings():
    """Drop the cached Settings; call the fixture value again after changing the environment."""
    get_settings.cache_clear()
    yield get_settings.cache_clear
    get_settings.cache_clear()

"""Unit tests for hopfgalois.config."""

import pytest
from pydantic import ValidationError

from hopfgalois.config import Settings


class TestSettings:
    """Tests for Settings validation and environment loading."""

    def test_defaults(self):
        """Test the defaults the command line relies on."""
        s = Settings(_env_file=None)
        assert s.FORMAT_VERSION == "1"
        assert s.THREADS == 1
        assert s.MAX_GROUP_ORDER == 24
        assert s.LOG_FORMAT in {"json", "console"}

    def test_environment_prefix(self, monkeypatch):
        """Test that HOPFGALOIS_ variables override defaults."""
        monkeypatch.setenv("HOPFGALOIS_THREADS", "4")
        monkeypatch.setenv("HOPFGALOIS_LOG_LEVEL", "debug")
        s = Settings(_env_file=None)
        assert s.THREADS == 4
        assert s.LOG_LEVEL == "DEBUG"

    @pytest.mark.parametrize(
        "field, value",
        [("THREADS", 0), ("LOG_LEVEL", "LOUD"), ("LOG_FORMAT", "xml")],
    )
    def test_invalid_values(self, field, value):
        """Test that bad values are rejected."""
        with pytest.raises(ValidationError):
            Settings(_env_file=None, **{field: value})

    def test_unknown_variables_are_ignored(self, monkeypatch):
        """Test that stray HOPFGALOIS_ variables neither fail nor become settings."""
        monkeypatch.setenv("HOPFGALOIS_VERSION", "9.9.9")
        s = Settings(_env_file=None)
        assert not hasattr(s, "VERSION")

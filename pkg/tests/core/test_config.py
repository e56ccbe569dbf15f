import pytest

from core.config import MAX_WORK_ENV, Config
from core.errors import ConfigValueError
from enums.config_key import ConfigKey


class TestConfig:
    def test_missing_file_keeps_defaults(self, tmp_path):
        assert Config.load(str(tmp_path / "absent.yaml")) is False
        assert Config.get(ConfigKey.GRID_DENOMINATOR, 12) == 12
        assert Config.max_work() is None

    def test_dotted_keys_walk_sections(self, tmp_path):
        path = tmp_path / "config.yaml"
        path.write_text("generator:\n  max_numerator: 4\nmax_work: 50\n")
        assert Config.load(str(path)) is True
        assert Config.get(ConfigKey.MAX_NUMERATOR) == 4
        assert Config.get("generator.max_denominator", 10) == 10
        assert Config.max_work() == 50

    def test_null_value_falls_back_to_default(self, tmp_path):
        path = tmp_path / "config.yaml"
        path.write_text("engine:\n  workers: null\n")
        Config.load(str(path))
        assert Config.get(ConfigKey.WORKERS, 2) == 2

    def test_environment_overrides_file(self, tmp_path, monkeypatch):
        path = tmp_path / "config.yaml"
        path.write_text("max_work: 50\n")
        Config.load(str(path))
        monkeypatch.setenv(MAX_WORK_ENV, "7")
        assert Config.max_work() == 7

    @pytest.mark.parametrize("value", ["lots", "0", "-3", "1.5", "²"])
    def test_unusable_environment_cap(self, monkeypatch, value):
        monkeypatch.setenv(MAX_WORK_ENV, value)
        with pytest.raises(ConfigValueError, match=MAX_WORK_ENV):
            Config.max_work()

    def test_unusable_file_cap(self, tmp_path):
        path = tmp_path / "config.yaml"
        path.write_text("max_work: 0\n")
        Config.load(str(path))
        with pytest.raises(ConfigValueError, match="max_work"):
            Config.max_work()

import os

import yaml

from core.errors import ConfigValueError
from enums.config_key import ConfigKey

MAX_WORK_ENV = "COPOSITIVITY_MAX_WORK"


class Config:

    _config = {}

    def __init__(self, config_file: str = "config.yaml"):
        self.load(config_file)

    @staticmethod
    def load(config_file: str = "config.yaml") -> bool:
        """
        Load the provided YAML config file. A missing file leaves the defaults
        in place.

        Args:
            config_file (str, optional): Config file to load. Defaults to "config.yaml".

        Returns:
            bool: True if the file was found and loaded
        """
        if not os.path.exists(config_file):
            Config._config = {}
            return False
        with open(config_file, "r", encoding="utf-8") as f:
            Config._config = yaml.safe_load(f) or {}
        return True

    @staticmethod
    def reset():
        Config._config = {}

    @staticmethod
    def get(key: ConfigKey | str, default=None):
        """
        Retrieve a config value from loaded config. Dotted keys walk nested
        sections, so "generator.max_numerator" reads generator -> max_numerator.

        Args:
            key (ConfigKey | str): Key of the config value to retrieve
            default (_type_, optional): Default value if not found. Defaults to None.

        Returns:
            _type_: config value or default if not found
        """
        path = key.value if isinstance(key, ConfigKey) else key
        node = Config._config
        for part in path.split("."):
            if not isinstance(node, dict) or part not in node:
                return default
            node = node[part]
        return default if node is None else node

    @staticmethod
    def max_work() -> int | None:
        """
        Default work cap: environment variable first, then config file.

        Raises:
            ConfigValueError: the cap is not a positive integer

        Returns:
            int | None: cap on processed matrices, None when uncapped
        """
        env_value = os.environ.get(MAX_WORK_ENV)
        if env_value:
            return _positive_int(env_value, MAX_WORK_ENV)
        value = Config.get(ConfigKey.MAX_WORK)
        if value is None:
            return None
        return _positive_int(value, ConfigKey.MAX_WORK.value)


def _positive_int(value, source: str) -> int:
    text = str(value).strip()
    if not (text.isascii() and text.isdecimal()) or int(text) < 1:
        raise ConfigValueError(f"{source} must be a positive integer, got '{value}'")
    return int(text)

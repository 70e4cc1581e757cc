import os
import tempfile
import unittest
from pathlib import Path

import yaml

from ar_window.config.run_config import SEED_ENV, RunConfig
from ar_window.config.settings import DEFAULTS, Settings
from ar_window.errors import ConfigError


class TestSettings(unittest.TestCase):

    def setUp(self):
        """Set up test fixtures"""
        self.temp_config = tempfile.NamedTemporaryFile(mode="w", suffix=".yaml", delete=False)
        config_data = {
            "field": {"order": 101},
            "knit": {"max_modules": 25},
            "logging": {"level": "DEBUG", "file": "logs/test.log"},
        }
        yaml.dump(config_data, self.temp_config)
        self.temp_config.close()
        self.settings = Settings(self.temp_config.name)

    def tearDown(self):
        os.unlink(self.temp_config.name)

    def test_load_config(self):
        """Test file values are layered over the built-in defaults"""
        self.assertEqual(self.settings.get("field.order"), 101)
        self.assertEqual(self.settings.get("knit.max_modules"), 25)
        # untouched siblings keep their defaults
        self.assertEqual(self.settings.get("knit.max_dim"), DEFAULTS["knit"]["max_dim"])
        self.assertEqual(self.settings.get("radical.max_power"), 64)

    def test_get_with_default(self):
        self.assertEqual(self.settings.get("nonexistent.key", "default_value"), "default_value")
        self.assertEqual(self.settings.get("field.order.subkey", "default"), "default")

    def test_none_falls_back_to_default(self):
        self.settings.set("logging.file", None)
        self.assertEqual(self.settings.get("logging.file", "fallback.log"), "fallback.log")

    def test_set_and_save(self):
        """Test set creates nested keys and save writes them back"""
        self.settings.set("radical.workers", 4)
        self.settings.set("extra.nested.value", "x")
        target = Path(tempfile.mkdtemp()) / "saved.yaml"
        try:
            self.assertTrue(self.settings.save(str(target)))
            reloaded = Settings(str(target))
            self.assertEqual(reloaded.get("radical.workers"), 4)
            self.assertEqual(reloaded.get("extra.nested.value"), "x")
        finally:
            target.unlink()
            target.parent.rmdir()

    def test_missing_config_file(self):
        """Test a missing file leaves the defaults in place"""
        settings = Settings("nonexistent_config.yaml")
        self.assertEqual(settings.config, DEFAULTS)

    def test_invalid_yaml_file(self):
        temp_invalid = tempfile.NamedTemporaryFile(mode="w", suffix=".yaml", delete=False)
        temp_invalid.write("invalid: yaml: content: [[[")
        temp_invalid.close()
        try:
            settings = Settings(temp_invalid.name)
            self.assertEqual(settings.config, DEFAULTS)
        finally:
            os.unlink(temp_invalid.name)

    def test_reload(self):
        settings = Settings("nonexistent_config.yaml")
        settings.reload(self.temp_config.name)
        self.assertEqual(settings.get("field.order"), 101)


class TestRunConfig(unittest.TestCase):

    def setUp(self):
        self.settings = Settings("nonexistent_config.yaml")

    def test_defaults(self):
        run = RunConfig.from_sources(config=self.settings, environ={})
        self.assertEqual(run.field_order, 32003)
        self.assertEqual(run.seed, 0)
        self.assertEqual(run.formats, ["json", "dot"])

    def test_precedence(self):
        """Test settings < ARW_SEED < explicit overrides"""
        self.settings.set("run.seed", 3)
        self.settings.set("knit.max_modules", 20)

        run = RunConfig.from_sources(config=self.settings, environ={SEED_ENV: "9"})
        self.assertEqual(run.seed, 9)
        self.assertEqual(run.max_modules, 20)

        run = RunConfig.from_sources(
            {"seed": 17, "max_modules": None}, config=self.settings, environ={SEED_ENV: "9"}
        )
        self.assertEqual(run.seed, 17)
        self.assertEqual(run.max_modules, 20)

    def test_bad_seed_environment(self):
        with self.assertRaises(ConfigError):
            RunConfig.from_sources(config=self.settings, environ={SEED_ENV: "abc"})

    def test_non_prime_field(self):
        with self.assertRaises(ConfigError):
            RunConfig.from_sources({"field_order": 12}, config=self.settings, environ={})

    def test_field_order_too_large(self):
        """Test primes past the int64-safe bound are rejected"""
        with self.assertRaises(ConfigError):
            RunConfig.from_sources({"field_order": 4294967311}, config=self.settings, environ={})
        run = RunConfig.from_sources({"field_order": 2**31 - 1}, config=self.settings, environ={})
        self.assertEqual(run.field_order, 2**31 - 1)

    def test_non_positive_limit(self):
        with self.assertRaises(ConfigError):
            RunConfig.from_sources({"max_power": 0}, config=self.settings, environ={})

    def test_unknown_option_and_format(self):
        with self.assertRaises(ConfigError):
            RunConfig.from_sources({"colour": "red"}, config=self.settings, environ={})
        self.settings.set("output.formats", ["json", "pdf"])
        with self.assertRaises(ConfigError):
            RunConfig.from_sources(config=self.settings, environ={})

    def test_as_dict(self):
        run = RunConfig.from_sources({"max_dim": 5}, config=self.settings, environ={})
        self.assertEqual(run.as_dict()["max_dim"], 5)


if __name__ == "__main__":
    unittest.main()

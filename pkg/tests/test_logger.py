import json
import logging
import unittest

from ar_window.utils.logger import (
    LoggerManager,
    LogContext,
    StructuredFormatter,
    current_context,
    logger,
)


def make_record(message="knit finished"):
    return logging.LogRecord("ar-window", logging.INFO, __file__, 1, message, None, None)


class TestLogContext(unittest.TestCase):

    def test_nested_scopes(self):
        """Test inner scopes add keys and restore the outer context on exit"""
        self.assertEqual(current_context(), {})
        with LogContext(command="knit", seed=3):
            with LogContext(file="a3.alg"):
                self.assertEqual(
                    current_context(), {"command": "knit", "seed": 3, "file": "a3.alg"}
                )
            self.assertEqual(current_context(), {"command": "knit", "seed": 3})
        self.assertEqual(current_context(), {})

    def test_adapter_snapshots_context(self):
        with LogContext(command="radical"):
            _, kwargs = logger.process("message", {})
        self.assertEqual(kwargs["extra"]["run_context"], {"command": "radical"})
        self.assertEqual(logger.process("message", {})[1], {})


class TestStructuredFormatter(unittest.TestCase):

    def test_record_without_context(self):
        data = json.loads(StructuredFormatter().format(make_record()))
        self.assertEqual(data["message"], "knit finished")
        self.assertEqual(data["level"], "INFO")
        self.assertNotIn("context", data)

    def test_context_under_key(self):
        with LogContext(command="knit", seed=7):
            data = json.loads(StructuredFormatter().format(make_record()))
        self.assertEqual(data["context"], {"command": "knit", "seed": 7})

    def test_snapshot_wins_over_scope(self):
        record = make_record()
        record.run_context = {"command": "gen"}
        with LogContext(command="knit"):
            data = json.loads(StructuredFormatter().format(record))
        self.assertEqual(data["context"], {"command": "gen"})


class TestLoggerManager(unittest.TestCase):

    def test_singleton(self):
        self.assertIs(LoggerManager(), LoggerManager())

    def test_parse_size(self):
        manager = LoggerManager()
        self.assertEqual(manager._parse_size("10MB"), 10 * 1024**2)
        self.assertEqual(manager._parse_size("512kb"), 512 * 1024)
        self.assertEqual(manager._parse_size("2048"), 2048)
        self.assertEqual(manager._parse_size("lots"), 10 * 1024**2)


if __name__ == "__main__":
    unittest.main()

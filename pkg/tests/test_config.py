"""
Package configuration and logger setup.
"""

# imports
import json
import logging

# project
from lambda_trees.config import CONFIG, LambdaTreesConfig
from lambda_trees.logger import get_logger


def test_missing_file_gives_defaults(tmp_path):
    config = LambdaTreesConfig.from_json(tmp_path / "missing.json")
    assert config == LambdaTreesConfig()


def test_json_round_trip(tmp_path):
    path = tmp_path / "config.json"
    config = LambdaTreesConfig(default_samples=50, log_level="DEBUG")
    config.to_json(path)
    assert LambdaTreesConfig.from_json(path) == config
    assert json.loads(config.to_json())["default_samples"] == 50


def test_shipped_config():
    assert CONFIG.default_samples == 1000
    assert CONFIG.default_triadic_numerator_bound == 729
    assert CONFIG.resolved_log_path.is_absolute()


def test_relative_log_path_resolves_against_the_repository():
    config = LambdaTreesConfig(log_path="logs/other.log")
    assert config.resolved_log_path.parts[-2:] == ("logs", "other.log")


def test_logger_has_one_file_handler(tmp_path):
    log_path = tmp_path / "test.log"
    first = get_logger("lambda_trees.test", log_path=log_path, log_level=logging.DEBUG)
    second = get_logger("lambda_trees.test", log_path=log_path, log_level=logging.DEBUG)
    assert first is second
    assert sum(isinstance(handler, logging.FileHandler) for handler in first.handlers) == 1

    first.info("checked")
    for handler in first.handlers:
        handler.flush()
    assert "lambda_trees.test - INFO - checked" in log_path.read_text(encoding="utf-8")

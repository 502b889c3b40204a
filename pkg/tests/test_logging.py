"""Test cases for logging functionality."""

import structlog

import core.logging
from core.logging import GameEvents, get_log_level, get_log_renderer
from games.enumeration import enumerate_pairs
from main import main


class _TestLogger:
    def __init__(self):
        self.output = []

    def __call__(self, logger, method_name, event_dict):
        """Process log events and store them for test assertions"""
        self.output.append(event_dict.copy())
        return event_dict


def _configure_capture(test_logger):
    structlog.configure(
        processors=[
            structlog.stdlib.filter_by_level,
            structlog.stdlib.add_logger_name,
            structlog.stdlib.add_log_level,
            structlog.processors.TimeStamper(fmt="iso"),
            test_logger,  # Add our test logger
            structlog.processors.JSONRenderer(),
        ],
        context_class=dict,
        logger_factory=structlog.stdlib.LoggerFactory(),
        wrapper_class=structlog.stdlib.BoundLogger,
        cache_logger_on_first_use=False,
    )


def _events(name):
    return [e for e in core.logging.test_output if e.get("event") == name]


def test_structlog_json():
    test_logger = _TestLogger()
    _configure_capture(test_logger)

    log = structlog.get_logger("test")
    log.bind(foo="bar").warning("hello world")

    assert len(test_logger.output) > 0
    log_dict = test_logger.output[-1]

    assert log_dict["foo"] == "bar"
    assert log_dict["event"] == "hello world"
    assert "timestamp" in log_dict
    assert log_dict["level"] == "warning"
    core.logging.configure_logging()


def test_enumeration_log_format(monkeypatch):
    monkeypatch.setenv("LOG_LEVEL", "INFO")
    core.logging.configure_logging()
    core.logging.test_output.clear()

    pairs = list(enumerate_pairs(4))

    done = _events(GameEvents.PAIRS_ENUMERATED)
    assert len(done) == 1
    assert done[0]["n"] == 4
    assert done[0]["count"] == len(pairs) == 32
    assert done[0]["level"] == "info"
    assert "elapsed_s" in done[0]
    assert "timestamp" in done[0]


def test_command_logging(monkeypatch, capsys):
    """Commands log their entry and completion with structured data."""
    monkeypatch.setenv("LOG_LEVEL", "INFO")
    core.logging.test_output.clear()

    assert main(["count", "--n-range", "2..3", "--format", "csv"]) == 0

    entries = _events(GameEvents.COMMAND_ENTRY)
    assert len(entries) == 1
    assert entries[0]["subcommand"] == "count"
    assert entries[0]["n_range"] == (2, 3)
    assert entries[0]["format"] == "csv"

    done = _events(GameEvents.COMMAND_DONE)
    assert done[0]["status"] == 0

    # log lines go to stderr; stdout only carries the table
    captured = capsys.readouterr()
    assert captured.out.startswith("n,cases")
    assert GameEvents.COMMAND_ENTRY in captured.err


def test_rejected_command_is_logged(monkeypatch, capsys):
    core.logging.test_output.clear()
    assert main(["count", "--n", "1"]) == 2

    rejected = _events(GameEvents.COMMAND_REJECTED)
    assert len(rejected) == 1
    assert rejected[0]["level"] == "warning"
    assert "n=2" in rejected[0]["error"]


def test_oracle_logs_classification(monkeypatch, capsys):
    monkeypatch.setenv("LOG_LEVEL", "INFO")
    core.logging.test_output.clear()

    assert main(["oracle", "--n", "2"]) == 0

    classified = _events(GameEvents.ORACLE_CLASSIFIED)
    assert classified[0]["n"] == 2
    assert classified[0]["labeled_total"] == 4
    assert classified[0]["by_t"] == {1: 2, 2: 1}


def test_default_level_is_quiet(monkeypatch, capsys):
    monkeypatch.delenv("LOG_LEVEL", raising=False)
    assert get_log_level() == "WARNING"
    core.logging.configure_logging()
    core.logging.test_output.clear()

    list(enumerate_pairs(3))

    assert _events(GameEvents.PAIRS_ENUMERATED) == []


def test_renderer_follows_environment(monkeypatch):
    monkeypatch.setenv("ENVIRONMENT", "production")
    assert isinstance(get_log_renderer(), structlog.processors.JSONRenderer)
    monkeypatch.setenv("ENVIRONMENT", "development")
    assert isinstance(get_log_renderer(), structlog.dev.ConsoleRenderer)

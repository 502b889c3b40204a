import functools
import time

import structlog

from core.logging import GameEvents


def log_command_entry(handler):
    """Wrap a command handler with entry/exit logging"""

    @functools.wraps(handler)
    def wrapper(config, stdin, out):
        # Get a fresh logger each time to ensure test configurations are respected
        log = structlog.get_logger(__name__)
        log.info(
            GameEvents.COMMAND_ENTRY,
            subcommand=config.subcommand,
            n=config.n,
            n_range=config.n_range,
            max_n=config.max_n,
            format=config.format,
            inputs=config.inputs or None,
        )
        started = time.perf_counter()
        status = handler(config, stdin, out)
        log.info(
            GameEvents.COMMAND_DONE,
            subcommand=config.subcommand,
            status=status,
            elapsed_s=round(time.perf_counter() - started, 3),
        )
        return status

    return wrapper

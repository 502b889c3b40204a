"""
Command Package

This module consolidates all CLI subcommand handlers.
"""

from . import counting
from . import games
from . import verification

# Subcommand name -> handler(config, stdin, out) -> exit status
COMMANDS = {
    "count": counting.count,
    "enumerate": counting.enumerate_canonical,
    "expand": games.expand_games,
    "canon": games.canon,
    "iso": games.iso,
    "oracle": verification.oracle,
    "verify": verification.verify,
}

# Export for use in main application
__all__ = ["COMMANDS"]

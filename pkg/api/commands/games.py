"""
Game Commands

`expand`, `canon` and `iso` read SimpleGame / VectorGame JSON documents from
files or standard input and emit JSON.
"""

import json
from pathlib import Path

from api.middleware import log_command_entry
from api.schemas import SimpleGameSchema, VectorGameSchema, dump_json
from games.models import GameValidationError
from games.vector_game import canonical_form, expand, is_isomorphic


def _parse_documents(text: str) -> list:
    """A single JSON document, or JSON Lines with one document per line."""
    text = text.strip()
    if not text:
        return []
    try:
        return [json.loads(text)]
    except json.JSONDecodeError:
        return [json.loads(line) for line in text.splitlines() if line.strip()]


def read_documents(config, stdin) -> list:
    """Documents from the listed input files (``-`` is stdin), else stdin."""
    documents = []
    for name in config.inputs or ["-"]:
        text = stdin.read() if name == "-" else Path(name).read_text()
        documents.extend(_parse_documents(text))
    if not documents:
        raise GameValidationError("no input documents")
    return documents


@log_command_entry
def expand_games(config, stdin, out) -> int:
    """VectorGame JSON in, SimpleGame JSON with all minimal winning coalitions out."""
    for document in read_documents(config, stdin):
        vg = VectorGameSchema.model_validate(document).to_domain()
        out.write(dump_json(SimpleGameSchema.from_domain(expand(vg))) + "\n")
    return 0


@log_command_entry
def canon(config, stdin, out) -> int:
    """SimpleGame JSON in, canonical VectorGame JSON out."""
    for document in read_documents(config, stdin):
        game = SimpleGameSchema.model_validate(document).to_domain()
        out.write(dump_json(VectorGameSchema.from_domain(canonical_form(game))) + "\n")
    return 0


@log_command_entry
def iso(config, stdin, out) -> int:
    """Two SimpleGame documents in, ``true`` or ``false`` out."""
    documents = read_documents(config, stdin)
    if len(documents) != 2:
        raise GameValidationError(f"iso compares exactly two games, got {len(documents)}")
    first, second = (SimpleGameSchema.model_validate(d).to_domain() for d in documents)
    out.write(("true" if is_isomorphic(first, second) else "false") + "\n")
    return 0

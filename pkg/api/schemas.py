"""
API Schemas Module

This module defines Pydantic models for every document read or written by the
command line: vector games, simple games, count tables, classification
reports, and the validated CLI configuration.
"""

import json
from pathlib import Path
from typing import Literal, Optional

import pandas as pd
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from games.models import (
    CheckResult,
    ClassificationReport,
    CountRecord,
    RCountRecord,
    SimpleGame,
    VectorGame,
    players_of,
)
from games.simple_game import from_player_sets

COUNT_COLUMNS = ["n", "cases", "violations", "r1", "total_pairs", "symmetric", "bipartite"]
R_COUNT_COLUMNS = ["n", "r", "pairs", "symmetric", "bipartite"]


def dump_json(model: BaseModel) -> str:
    """Compact, key-ordered JSON; python-mode dump keeps big integers exact."""
    return json.dumps(model.model_dump(by_alias=True), separators=(",", ":"))


class VectorGameSchema(BaseModel):
    """Schema for a pair (n̄, M)."""

    n_bar: list[int] = Field(min_length=1)
    matrix: list[list[int]] = Field(min_length=1)

    model_config = ConfigDict(extra="forbid")

    @classmethod
    def from_domain(cls, vg: VectorGame) -> "VectorGameSchema":
        return cls(n_bar=list(vg.n_bar), matrix=[list(row) for row in vg.matrix])

    def to_domain(self) -> VectorGame:
        return VectorGame(
            n_bar=tuple(self.n_bar), matrix=tuple(tuple(row) for row in self.matrix)
        )


class SimpleGameSchema(BaseModel):
    """Schema for a simple game given by its minimal winning coalitions."""

    n: int = Field(ge=1)
    min_winning: list[list[int]] = Field(min_length=1)

    model_config = ConfigDict(extra="forbid")

    @classmethod
    def from_domain(cls, game: SimpleGame) -> "SimpleGameSchema":
        return cls(
            n=game.n,
            min_winning=[list(players_of(s)) for s in game.sorted_min_winning()],
        )

    def to_domain(self) -> SimpleGame:
        return from_player_sets(self.n, self.min_winning)


class CountRecordSchema(BaseModel):
    n: int
    cases: int
    violations: int
    r1: int
    total_pairs: int
    symmetric: int
    bipartite: int

    @classmethod
    def from_domain(cls, record: CountRecord) -> "CountRecordSchema":
        return cls(
            n=record.n,
            cases=record.cases,
            violations=record.violations,
            r1=record.r1_count,
            total_pairs=record.total_pairs,
            symmetric=record.symmetric,
            bipartite=record.bipartite,
        )


class RCountRecordSchema(BaseModel):
    n: int
    r: int
    pairs: int
    symmetric: int
    bipartite: int

    model_config = ConfigDict(from_attributes=True)


class CheckSchema(BaseModel):
    name: str
    passed: bool = Field(serialization_alias="pass")
    expected: Optional[int | str | bool] = None
    actual: Optional[int | str | bool] = None

    @classmethod
    def from_domain(cls, check: CheckResult) -> "CheckSchema":
        scalar = (int, str, bool)
        return cls(
            name=check.name,
            passed=check.passed,
            expected=check.expected if isinstance(check.expected, scalar) else None,
            actual=check.actual if isinstance(check.actual, scalar) else None,
        )


class ClassificationReportSchema(BaseModel):
    n: int
    labeled_total: int
    by_t: dict[str, int]
    checks: list[CheckSchema] = []

    @classmethod
    def from_domain(cls, report: ClassificationReport) -> "ClassificationReportSchema":
        return cls(
            n=report.n,
            labeled_total=report.labeled_total,
            by_t={str(t): count for t, count in sorted(report.by_t.items())},
            checks=[CheckSchema.from_domain(c) for c in report.checked_against],
        )


class VerificationSchema(BaseModel):
    max_n: int
    passed: bool
    checks: list[CheckSchema]


def count_table(records: list[CountRecord]) -> pd.DataFrame:
    """One row per n; object dtype keeps arbitrarily large counts exact."""
    rows = [CountRecordSchema.from_domain(r).model_dump() for r in records]
    return pd.DataFrame(rows, columns=COUNT_COLUMNS, dtype=object)


def r_count_table(records: list[RCountRecord]) -> pd.DataFrame:
    rows = [RCountRecordSchema.model_validate(r).model_dump() for r in records]
    return pd.DataFrame(rows, columns=R_COUNT_COLUMNS, dtype=object)


class CliConfig(BaseModel):
    """Validated command-line configuration."""

    subcommand: Literal["count", "enumerate", "expand", "canon", "iso", "oracle", "verify"]
    n: Optional[int] = Field(default=None, ge=1)
    n_range: Optional[tuple[int, int]] = None
    max_n: Optional[int] = Field(default=None, ge=1)
    format: Literal["json", "csv", "text"] = "json"
    output: Optional[Path] = None
    inputs: list[str] = []
    oracle_max_n: int = Field(default=5, ge=1, le=6)
    allow_n6: bool = False
    workers: int = Field(default=1, ge=1)
    by_r: bool = False

    @field_validator("n_range", mode="before")
    @classmethod
    def parse_range(cls, value):
        if value is None or isinstance(value, (tuple, list)):
            return value
        text = str(value).strip()
        low, sep, high = text.partition("..")
        if not sep:
            low = high = text
        try:
            return int(low), int(high)
        except ValueError:
            raise ValueError(f"range {text!r} is not of the form A..B")

    @field_validator("n_range")
    @classmethod
    def check_range(cls, value):
        if value is not None:
            low, high = value
            if low < 1 or high < low:
                raise ValueError(f"range {low}..{high} is empty or below 1")
        return value

    @model_validator(mode="after")
    def check_required(self):
        if self.subcommand == "count" and self.n_range is None and self.n is None:
            raise ValueError("count needs --n-range or --n")
        if self.subcommand in {"enumerate", "oracle"} and self.n is None:
            raise ValueError(f"{self.subcommand} needs --n")
        return self

    @property
    def oracle_cap(self) -> int:
        return 6 if self.allow_n6 else min(self.oracle_max_n, 5)

"""Pydantic models for command options and the rows the commands emit."""

from pathlib import Path
from typing import Any, List, Literal, Optional

from pydantic import BaseModel, Field, field_validator, model_validator

from ..config import (
    DEFAULT_BENCH_FAMILY,
    DEFAULT_BENCH_SIZES,
    DEFAULT_CHECK_INSTANCES,
    DEFAULT_CHECK_MAX_LENGTH,
    DEFAULT_CHECK_SEED,
)
from ..matching.core import MatchStats

Command = Literal["match", "repeats", "check", "bench"]
Algorithm = Literal["fast", "cubic", "brute"]


class CliConfig(BaseModel):
    """Validated options of one command-line invocation."""

    command: Command
    pattern: Optional[str] = None
    input: Optional[str] = None
    input_file: Optional[Path] = None
    algo: Algorithm = "fast"
    json_output: bool = False
    alphabet: Optional[str] = None
    sizes: List[int] = Field(default_factory=lambda: list(DEFAULT_BENCH_SIZES))
    family: str = DEFAULT_BENCH_FAMILY
    trim: bool = False
    seed: int = DEFAULT_CHECK_SEED
    instances: int = Field(default=DEFAULT_CHECK_INSTANCES, gt=0)
    max_length: int = Field(default=DEFAULT_CHECK_MAX_LENGTH, ge=0)

    @field_validator("sizes", mode="before")
    @classmethod
    def parse_sizes(cls, value: Any) -> Any:
        if isinstance(value, str):
            try:
                return [int(part) for part in value.split(",") if part.strip()]
            except ValueError as e:
                raise ValueError(f"sizes must be comma-separated integers: {value!r}") from e
        return value

    @field_validator("sizes")
    @classmethod
    def check_sizes(cls, value: List[int]) -> List[int]:
        if not value:
            raise ValueError("at least one size is required")
        if any(size <= 0 for size in value):
            raise ValueError("sizes must be positive")
        if any(later <= earlier for earlier, later in zip(value, value[1:])):
            raise ValueError("sizes must be strictly increasing")
        return value

    @field_validator("family")
    @classmethod
    def check_family(cls, value: str) -> str:
        if not value:
            raise ValueError("family seed word must be nonempty")
        return value

    @model_validator(mode="after")
    def check_command_options(self) -> "CliConfig":
        if self.command in ("match", "repeats"):
            if (self.input is None) == (self.input_file is None):
                raise ValueError("exactly one of --input and --input-file is required")
        if self.command in ("match", "bench") and self.pattern is None:
            raise ValueError(f"{self.command} requires --pattern")
        if self.command == "bench" and self.algo == "brute":
            raise ValueError("bench supports --algo fast or cubic")
        return self


class StatsRow(BaseModel):
    nfass_steps: int
    intmed_steps: int
    intmed_calls: int
    match3b_steps: int
    oracle_steps: int
    total_steps: int
    repeats: int
    match3a_true: int
    match3b_true: int
    epsilon_path: bool

    @classmethod
    def from_stats(cls, stats: MatchStats) -> "StatsRow":
        return cls(
            nfass_steps=stats.nfass_steps,
            intmed_steps=stats.intmed_steps,
            intmed_calls=stats.intmed_calls,
            match3b_steps=stats.match3b_steps,
            oracle_steps=stats.oracle_steps,
            total_steps=stats.total_steps,
            repeats=stats.repeats,
            match3a_true=stats.match3a_true,
            match3b_true=stats.match3b_true,
            epsilon_path=stats.epsilon_path,
        )


class WitnessRow(BaseModel):
    beta: str
    i: int
    j: int


class MatchRow(BaseModel):
    pattern: str
    subject_length: int
    algo: Algorithm
    matched: bool
    stats: Optional[StatsRow] = None
    witness: Optional[WitnessRow] = None


class RepeatRow(BaseModel):
    """One right-maximal repeat; ``idx`` holds 1-based occurrence starts."""

    repeat: str
    length: int = Field(serialization_alias="len")
    idx: List[int]
    d: int


class BenchRow(BaseModel):
    n: int
    algo: Literal["fast", "cubic"]
    family: str
    steps: int
    repeats: int
    seconds: float


class Divergence(BaseModel):
    number: int
    pattern: str
    canonical: str
    subject: str
    fast: bool
    cubic: bool
    brute: bool
    witness: Optional[WitnessRow] = None
    witness_valid: Optional[bool] = None


class CheckReport(BaseModel):
    seed: int
    instances: int
    patterns: int
    max_length: int
    divergences: int
    first_divergence: Optional[Divergence] = None

    @property
    def ok(self) -> bool:
        return self.divergences == 0

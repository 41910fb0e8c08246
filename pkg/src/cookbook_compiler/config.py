"""Build configuration: defaults, flat key=value file, flag overrides."""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from .table_ingest import ColumnMapping


class ConfigError(Exception):
    """Bad configuration file or option values."""


_BOOLS = {"true": True, "yes": True, "1": True,
          "false": False, "no": False, "0": False}


@dataclass
class BuildConfig:
    input_path: Path | None = None
    vocab_dir: Path | None = None
    images_dir: Path | None = None
    out_dir: Path = Path("data")
    columns: ColumnMapping = field(default_factory=ColumnMapping)
    strict: bool = False
    edge_threshold: int = 1
    matrix_cap: int = 200

    def ensure_valid(self) -> None:
        if self.input_path is None:
            raise ConfigError("an input table is required (--input or config 'input')")
        if self.edge_threshold < 1:
            raise ConfigError("edge threshold must be at least 1")
        if self.matrix_cap < 1:
            raise ConfigError("matrix cap must be at least 1")


def load_config_file(path: str | Path) -> dict[str, str]:
    """key=value pairs from a flat config file ('#' lines are comments)."""
    path = Path(path)
    try:
        text = path.read_bytes().decode("utf-8-sig")
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    except UnicodeDecodeError as exc:
        raise ConfigError(f"config {path} is not valid UTF-8") from exc

    pairs: dict[str, str] = {}
    for lineno, line in enumerate(text.split("\n"), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ConfigError(f"{path}:{lineno}: expected key=value")
        key, _, value = line.partition("=")
        key = key.strip()
        if not key:
            raise ConfigError(f"{path}:{lineno}: empty key")
        if key in pairs:
            raise ConfigError(f"{path}:{lineno}: duplicate key {key!r}")
        pairs[key] = value.strip()
    return pairs


def _parse_bool(key: str, value: str) -> bool:
    try:
        return _BOOLS[value.casefold()]
    except KeyError:
        raise ConfigError(f"config key {key!r} expects true/false, got {value!r}") from None


def _parse_int(key: str, value: str) -> int:
    try:
        return int(value)
    except ValueError:
        raise ConfigError(f"config key {key!r} expects an integer, got {value!r}") from None


def build_config(pairs: dict[str, str]) -> BuildConfig:
    """BuildConfig from config-file pairs; unknown keys are rejected."""
    config = BuildConfig()
    column_overrides: dict[str, str] = {}
    for key, value in pairs.items():
        if key == "input":
            config.input_path = Path(value)
        elif key == "vocab":
            config.vocab_dir = Path(value)
        elif key == "images":
            config.images_dir = Path(value)
        elif key == "out":
            config.out_dir = Path(value)
        elif key == "strict":
            config.strict = _parse_bool(key, value)
        elif key == "edge_threshold":
            config.edge_threshold = _parse_int(key, value)
        elif key == "matrix_cap":
            config.matrix_cap = _parse_int(key, value)
        elif key.startswith("column."):
            column_overrides[key[len("column."):]] = value
        else:
            raise ConfigError(f"unknown config key {key!r}")
    if column_overrides:
        try:
            config.columns = config.columns.with_overrides(column_overrides)
        except ValueError as exc:
            raise ConfigError(str(exc)) from exc
    return config

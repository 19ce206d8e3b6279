"""Command-line configuration read from a flat key=value file."""
from __future__ import annotations

import os
from dataclasses import dataclass, fields, replace
from pathlib import Path

from .cache import DEFAULT_MAXSIZE
from .characters import DEFAULT_MAX_TABLE_N
from .errors import ValidationError
from .vcat import DEFAULT_MAX_DEGREE

CONFIG_ENV = "SCHURKIT_CONFIG"
FORMATS = ("json", "csv", "text")


@dataclass(frozen=True)
class CliConfig:
    cache_size: int = DEFAULT_MAXSIZE
    max_table_n: int = DEFAULT_MAX_TABLE_N
    max_degree_default: int = DEFAULT_MAX_DEGREE
    output_format: str = "json"

    def __post_init__(self) -> None:
        for name in ("cache_size", "max_table_n", "max_degree_default"):
            value = getattr(self, name)
            if not isinstance(value, int) or value < 1:
                raise ValidationError(f"config: {name} must be a positive integer, got {value!r}")
        if self.output_format not in FORMATS:
            raise ValidationError(f"config: output_format must be one of {', '.join(FORMATS)}")


def parse_config(text: str, base: CliConfig | None = None) -> CliConfig:
    """Lines ``key = value``; blank lines and ``#`` comments are ignored."""
    known = {f.name: f.type for f in fields(CliConfig)}
    updates: dict[str, object] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValidationError(f"config line {lineno}: expected key=value")
        key, value = (s.strip() for s in line.split("=", 1))
        if key not in known:
            raise ValidationError(f"config line {lineno}: unknown key {key!r}")
        if key == "output_format":
            updates[key] = value
        else:
            try:
                updates[key] = int(value)
            except ValueError as exc:
                raise ValidationError(f"config line {lineno}: {key} must be an integer") from exc
    return replace(base or CliConfig(), **updates)


def load_config(path: str | os.PathLike | None = None) -> CliConfig:
    """Read the file named by ``path`` or by $SCHURKIT_CONFIG; defaults if neither is set."""
    if path is None:
        path = os.environ.get(CONFIG_ENV)
    if not path:
        return CliConfig()
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ValidationError(f"cannot read config file {path}: {exc}") from exc
    return parse_config(text)

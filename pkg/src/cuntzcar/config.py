"""Resource bounds and tolerances.

Values come from a simple ``key = value`` file whose path is given by the
``CUNTZCAR_CONFIG`` environment variable; unknown keys are rejected.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, fields, replace
from pathlib import Path

from .errors import ResourceBoundError

ENV_VAR = "CUNTZCAR_CONFIG"


@dataclass(frozen=True)
class Config:
    max_car_index: int = 12
    max_level: int = 8
    max_depth: int = 12
    max_basis_level: int = 4
    tolerance: float = 1e-9
    seed: int = 0


DEFAULT = Config()


def parse_config(text: str, base: Config = DEFAULT) -> Config:
    types = {f.name: f.type for f in fields(Config)}
    updates: dict[str, object] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"config line {lineno}: expected 'key = value'")
        key, value = (part.strip() for part in line.split("=", 1))
        if key not in types:
            raise ValueError(f"config line {lineno}: unknown key {key!r}")
        updates[key] = float(value) if types[key] in (float, "float") else int(value)
    return replace(base, **updates)


def load_config(path: str | os.PathLike | None = None) -> Config:
    if path is None:
        path = os.environ.get(ENV_VAR)
    if not path:
        return DEFAULT
    return parse_config(Path(path).read_text())


def require_within(name: str, value: int, bound: int) -> None:
    if value > bound:
        raise ResourceBoundError(f"{name} = {value} exceeds the configured bound {bound}")

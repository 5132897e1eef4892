"""Flat `key = value` study config files (`#` starts a comment)."""
from __future__ import annotations
from pathlib import Path
from typing import Any, Dict
from ..common.exceptions import ConfigError

LIST_KEYS = ("sizes", "k", "snapshots")

def split_list(value: str) -> list[str]:
    return [v.strip() for v in value.split(",") if v.strip()]

def parse_config_text(text: str, source: str = "<config>") -> Dict[str, Any]:
    out: Dict[str, Any] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{source}:{lineno}: expected 'key = value', got {raw.strip()!r}")
        key, value = (s.strip() for s in line.split("=", 1))
        key = key.replace("-", "_")
        if not key:
            raise ConfigError(f"{source}:{lineno}: empty key")
        out[key] = split_list(value) if key in LIST_KEYS else value
    return out

def load_config_file(path: str | Path) -> Dict[str, Any]:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise ConfigError(f"cannot read config file {path}: {e.strerror or e}") from e
    return parse_config_text(text, source=str(path))

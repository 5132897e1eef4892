"""Run manifest writer to ensure reproducibility (study config + CSV digest)."""
import json
import hashlib
from pathlib import Path
from datetime import datetime, timezone
from typing import Dict, Any
from ..common.constants import MANIFESTS_DIR

def _ensure_dir() -> Path:
    d = Path(MANIFESTS_DIR)
    d.mkdir(parents=True, exist_ok=True)
    return d

def file_sha256(path: str | Path) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()

def write_manifest(kind: str, payload: Dict[str, Any]) -> str:
    """Write manifest JSON under data/manifests and return its path."""
    d = _ensure_dir()
    now = datetime.now(timezone.utc)
    path = d / f"{kind}_{now.strftime('%Y%m%dT%H%M%S%fZ')}.json"
    payload = {**payload, "kind": kind, "created_at": now.isoformat()}
    path.write_text(json.dumps(payload, indent=2), encoding="utf-8")
    return str(path)

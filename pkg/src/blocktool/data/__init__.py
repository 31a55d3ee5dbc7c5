"""Shipped corpus data: group files and the default manifest."""

from pathlib import Path

DATA_DIR = Path(__file__).parent


def group_path(key: str) -> Path:
    return DATA_DIR / "groups" / f"{key}.json"


def manifest_path() -> Path:
    return DATA_DIR / "corpus_manifest.json"

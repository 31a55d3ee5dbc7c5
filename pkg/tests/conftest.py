import pytest

from blocktool.data import group_path, manifest_path
from blocktool.fileio import read_group_file

CORPUS_KEYS = ["c2", "c4", "s3", "a4", "s4", "d10", "sl23", "a5", "psl27"]

CORPUS_PRIMES = {
    "c2": [2],
    "c4": [2],
    "s3": [2, 3],
    "a4": [2, 3],
    "s4": [2, 3],
    "d10": [2, 5],
    "sl23": [2, 3],
    "a5": [2, 3, 5],
    "psl27": [2, 3, 7],
}


@pytest.fixture(scope="session")
def corpus():
    """name/key -> PermGroup for the shipped corpus (session-cached)."""
    out = {}
    for key in CORPUS_KEYS + ["psl32_deg7"]:
        name, G = read_group_file(group_path(key))
        out[key] = G
    return out


@pytest.fixture(scope="session")
def shipped_manifest_path():
    return manifest_path()

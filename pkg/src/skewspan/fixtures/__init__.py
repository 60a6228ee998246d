"""Bundled instance files and access helpers."""

from importlib import resources
from pathlib import Path
from typing import List


def fixture_path(name: str) -> str:
    """Filesystem path of a bundled instance file."""
    return str(resources.files(__name__).joinpath(name))


def list_fixtures() -> List[str]:
    root = Path(fixture_path(""))
    return sorted(p.name for p in root.glob("*.json"))


#: bundled monoidale files that verify cleanly
VALID_MONOIDALES = [
    "zmod2.json",
    "zmod3.json",
    "noncomm3.json",
    "terminal.json",
    "empty.json",
    "restricted_one.json",
    "restricted_two.json",
    "restricted_bz2.json",
    "restricted_parallel.json",
    "pairs_two.json",
]

"""Project-root and corpus-root resolution.

Single source of truth for "which directory is the project / holds the golden
proofs". The project root is the nearest ancestor holding ``pyproject.toml``;
an installed package without one falls back to the current directory.

--- WHERE TO CHANGE IF PATH RESOLUTION CHANGES ---
``cli/commands/proofs.py`` (default ``corpus`` directory) and the corpus
tests import from here.
"""

from __future__ import annotations

from pathlib import Path

MANIFEST = "pyproject.toml"
CORPUS_DIRNAME = "proofs"


def _find_project_root(start: Path) -> Path | None:
    """Walk up from *start* for a directory containing a ``pyproject.toml`` file."""
    for candidate in (start, *start.parents):
        if (candidate / MANIFEST).is_file():
            return candidate
    return None


def get_project_root() -> Path:
    """Resolve the project root; fall back to the working directory."""
    return _find_project_root(Path(__file__).resolve().parent) or Path.cwd()


def get_corpus_root() -> Path:
    """The golden derivation directory, ``<project root>/proofs``."""
    return get_project_root() / CORPUS_DIRNAME

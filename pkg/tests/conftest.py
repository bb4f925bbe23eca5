"""Pytest config — make ``etlogic`` importable and share fixtures.

The package lives directly under the project root (no ``src/`` layout), so
the root goes on ``sys.path`` once per session.

Hypothesis profiles: ``default`` keeps the property tests quick; the
``acceptance`` profile runs the 10⁴-example counts
(``pytest --hypothesis-profile=acceptance``).
"""

from __future__ import annotations

import sys
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

ROOT = Path(__file__).resolve().parent.parent
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))

from etlogic.core.paths import get_corpus_root  # noqa: E402  (needs sys.path patched first)
from etlogic.services.manyvalued import Flavor, TruthValue, Valuation  # noqa: E402
from etlogic.services.semantics import ModelFlavor, build_model  # noqa: E402

settings.register_profile(
    "default",
    max_examples=200,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.register_profile(
    "acceptance",
    max_examples=10_000,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much],
)
settings.load_profile("default")


@pytest.fixture
def corpus_dir() -> Path:
    """The shipped golden proofs."""
    return get_corpus_root()


@pytest.fixture
def proof_text(corpus_dir):
    """Read one golden proof by stem: ``proof_text("exists_identity")``."""
    def read(name: str) -> str:
        return (corpus_dir / f"{name}.proof").read_text(encoding="utf-8")
    return read


@pytest.fixture
def standard_model():
    """The four-valued model with every value class realised."""
    theory = Valuation.of(
        {0: TruthValue.ONE, 1: TruthValue.ZERO, 2: TruthValue.BOTH, 3: TruthValue.NEITHER}, Flavor.B4
    )
    return build_model(
        ModelFlavor.B4,
        theory,
        {"c": TruthValue.BOTH, "d": TruthValue.ONE, "e": TruthValue.ZERO, "n": TruthValue.NEITHER},
    )

from __future__ import annotations

import random
from pathlib import Path

import pytest

from qcgirth import ExponentMatrix

REPO_ROOT = Path(__file__).resolve().parent.parent

# Known-good (3,6) seed: girth 12 at Q=393, row-2 max 224, certified bound
# P >= 449.  The JSON fixture in fixtures/ carries the same values.
REFERENCE_SEED = ExponentMatrix.from_rows(
    [
        [0, 0, 0, 0, 0, 0],
        [0, 3, 14, 18, 24, 26],
        [0, 19, 62, 107, 170, 224],
    ]
)


@pytest.fixture
def ref_seed() -> ExponentMatrix:
    return REFERENCE_SEED


@pytest.fixture
def seed_fixture_path() -> Path:
    return REPO_ROOT / "fixtures" / "seed_3x6.json"


def random_canonical_matrix(rng: random.Random, j: int, l: int, p: int) -> ExponentMatrix:
    """Canonical J x L matrix with free entries uniform in [0, p)."""
    rows = [[0] * l]
    for _ in range(j - 1):
        rows.append([0] + [rng.randrange(p) for _ in range(l - 1)])
    return ExponentMatrix.from_rows(rows)

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from raagout.gen import GnpConfig, gnp, hash_u64

CORPUS_SEED = 12345
CORPUS_SIZE = 500
_PS = (0.15, 0.3, 0.5, 0.7, 0.85)


def seeded_corpus(size=CORPUS_SIZE):
    """Deterministic corpus of small random graphs (2..8 vertices)."""
    graphs = []
    for i in range(size):
        n = 2 + i % 7
        p = _PS[i % len(_PS)]
        graphs.append(gnp(GnpConfig(n, p, hash_u64(CORPUS_SEED, i))))
    return graphs


@pytest.fixture(scope="session")
def corpus():
    return seeded_corpus()

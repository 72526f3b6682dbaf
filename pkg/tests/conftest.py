import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from terwilliger import analyze_pair


@pytest.fixture(scope="session")
def analysis_cache():
    """Memoized full analyses, shared across test modules."""
    cache = {}

    def get(n: int, s: int, **kwargs):
        key = (n, s, tuple(sorted(kwargs.items())))
        if key not in cache:
            cache[key] = analyze_pair(n, s, **kwargs)
        return cache[key]

    return get

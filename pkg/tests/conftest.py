import os
from pathlib import Path

import pytest

# Censuses and witnesses persist between runs in a repo-local cache so the
# expensive first generation is paid once.
REPO_ROOT = Path(__file__).resolve().parent.parent
os.environ.setdefault("PLANARTURAN_CACHE", str(REPO_ROOT / ".planarturan-cache"))

RUN_EXPENSIVE = os.environ.get("PLANARTURAN_EXPENSIVE") == "1"

expensive = pytest.mark.skipif(
    not RUN_EXPENSIVE,
    reason="13/14-vertex censuses; set PLANARTURAN_EXPENSIVE=1 to run")


@pytest.fixture(scope="session")
def oracle_value():
    """Memoized exact_planar_turan so suites can share search results."""
    from planarturan.oracle import exact_planar_turan

    cache = {}

    def get(n, spec):
        key = (n, spec)
        if key not in cache:
            cache[key] = exact_planar_turan(n, spec)
        return cache[key]

    return get

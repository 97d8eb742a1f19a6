import itertools

import pytest

from qdeg.weylgroup import Parabolic, weyl_group


@pytest.fixture(scope="session")
def groups():
    """Shared WeylGroup instances so caches amortize across the whole run."""
    return weyl_group


def all_parabolics(rank):
    return [
        Parabolic.from_indices(rank, c)
        for n in range(rank + 1)
        for c in itertools.combinations(range(rank), n)
    ]

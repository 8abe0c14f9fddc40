import pytest

from fareysub.sequences import SequenceKind, SequenceSpec
from fareysub.verify import cached_sequence


@pytest.fixture(scope="session")
def oracle():
    """Memoized brute-force enumeration, the trust anchor for every sweep."""

    def fetch(kind: SequenceKind, n: int, m: int | None = None):
        return cached_sequence(SequenceSpec(kind, n, m))

    return fetch

import pytest

from powersums.bernoulli import BernoulliCache


@pytest.fixture
def cache():
    """A fresh, independent Bernoulli table for each test."""
    return BernoulliCache()

# -*- coding: utf-8 -*-
import pytest
from hypothesis import settings

from congruencebases import congruence
from congruencebases import oracle

settings.register_profile("congruencebases", max_examples=200, deadline=None)
settings.load_profile("congruencebases")

BATCH_SEED = 20240601


@pytest.fixture
def application():
    """2x - 6y = 2 (mod 12)"""
    return congruence.normalize([2, -6], 2, 12)


@pytest.fixture
def application_text():
    return "2x - 6y ≡ 2 (mod 12)"


@pytest.fixture
def application_cosets():
    # expansions of (1, 0) and of (4, 1)
    first = [(1, 0), (1, 2), (1, 4), (1, 6), (1, 8), (1, 10),
             (7, 0), (7, 2), (7, 4), (7, 6), (7, 8), (7, 10)]
    second = [(4, 1), (4, 3), (4, 5), (4, 7), (4, 9), (4, 11),
              (10, 1), (10, 3), (10, 5), (10, 7), (10, 9), (10, 11)]
    return first, second


@pytest.fixture(scope="session")
def solvable_batch():
    return oracle.random_congruences(200, BATCH_SEED, solvable_only=True)


@pytest.fixture(scope="session")
def mixed_batch():
    return oracle.random_congruences(200, BATCH_SEED + 1)

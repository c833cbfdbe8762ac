import json
import random
from pathlib import Path

import pytest

from qdbsample import (
    LengthUtility,
    PascalCache,
    Profile,
    parse_qdb,
)
from qdbsample.qdb import QuantitativeTransaction, make_transaction

DATA = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def toy_text() -> str:
    return (DATA / "toy.qdb").read_text()


@pytest.fixture(scope="session")
def toy_db(toy_text):
    return parse_qdb(toy_text)


@pytest.fixture(scope="session")
def toy_path() -> Path:
    return DATA / "toy.qdb"


@pytest.fixture(scope="session")
def t1(toy_db) -> QuantitativeTransaction:
    return toy_db.transactions[0]


@pytest.fixture(scope="session")
def cache() -> PascalCache:
    return PascalCache(16)


@pytest.fixture(scope="session")
def hup_unbounded() -> LengthUtility:
    return LengthUtility()


@pytest.fixture(scope="session")
def toy_profile() -> Profile:
    return Profile.from_json(json.loads((DATA / "toy_profile.json").read_text()))


def random_transaction(rng: random.Random, max_len: int = 12, max_weight: int = 100):
    """Random transaction with unit prices and quantities acting as weights."""
    length = rng.randint(1, max_len)
    quantities = {i: rng.randint(1, max_weight) for i in range(length)}
    return make_transaction(0, quantities, lambda _i: 1)

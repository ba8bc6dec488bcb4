import random

import pytest

from speh.factory import create_app


@pytest.fixture
def app():
    app = create_app({'TESTING': True, 'SPEH_DEFAULT_TRIALS': 20, 'SPEH_PRIME_BOUND': 100})
    yield app


@pytest.fixture
def client(app):
    return app.test_client()


@pytest.fixture
def rng():
    return random.Random(0)

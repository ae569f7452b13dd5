import json
import os

import pytest
from hypothesis import settings

from unisecant.exactalg import HomogeneousForm

# Property tests must be reproducible run to run.
settings.register_profile("deterministic", derandomize=True, deadline=None)
settings.load_profile("deterministic")

FIXTURES = os.path.join(os.path.dirname(__file__), "fixtures")


def fixture_path(name: str) -> str:
    return os.path.join(FIXTURES, name)


def load_form(name: str) -> HomogeneousForm:
    with open(fixture_path(name)) as fh:
        return HomogeneousForm.from_json_dict(json.load(fh)["form"])


@pytest.fixture
def fermat():
    return load_form("fermat.json")


@pytest.fixture
def nodal_cubic():
    return load_form("nodal_cubic.json")


@pytest.fixture
def cuspidal_cubic():
    return load_form("cuspidal_cubic.json")


@pytest.fixture
def tricuspidal_quartic():
    return load_form("tricuspidal_quartic.json")

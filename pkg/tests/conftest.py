import os

import pytest
from hypothesis import HealthCheck, settings

from curvegroups.formats import fixture_names, parse_presentation, resolve_path

settings.register_profile(
    "default", deadline=None, suppress_health_check=[HealthCheck.too_slow], print_blob=True
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

PRESENTATION_FIXTURES = [n[:-5] for n in fixture_names() if n.endswith(".pres")]


def load(name):
    return parse_presentation(resolve_path(f"fixtures/{name}.pres"))


@pytest.fixture(scope="session")
def fixtures():
    return {name: load(name) for name in PRESENTATION_FIXTURES}


@pytest.fixture(scope="session")
def g1():
    return load("G1-xyuv")


@pytest.fixture(scope="session")
def g1_xyw():
    return load("G1-xyw")

import pytest

from augmentation import augment_raising, augment_trivial, principal
from poset_core import chain, poset_from_relations, trivial_poset

PI, ETA, PHI = "pi", "eta", "phi"


@pytest.fixture
def chron():
    return principal(chain([PI, ETA, PHI]), ETA)


@pytest.fixture
def morph():
    return augment_raising(trivial_poset([PI, PHI]), ETA)


@pytest.fixture
def prod():
    return augment_trivial(chain([PI, PHI]), ETA)


@pytest.fixture
def diamond():
    return poset_from_relations(
        ["bot", "a", "b", "top"],
        [("bot", "a"), ("bot", "b"), ("a", "top"), ("b", "top")],
    )

import pytest

from config import env_int
from errors import ValidationError


def test_env_int_defaults_and_parses():
    assert env_int("WORDORDERS_NODE_CAP", 3, {}) == 3
    assert env_int("WORDORDERS_NODE_CAP", 3, {"WORDORDERS_NODE_CAP": "7"}) == 7
    assert env_int("WORDORDERS_NODE_CAP", 3, {"WORDORDERS_NODE_CAP": " 12 "}) == 12


@pytest.mark.parametrize(
    "raw, minimum",
    [
        ("abc", 0),
        ("", 0),
        ("2.5", 0),
        ("0", 1),
        ("-4", 0),
    ],
)
def test_env_int_rejects(raw, minimum):
    with pytest.raises(ValidationError, match="WORDORDERS_WORKERS"):
        env_int("WORDORDERS_WORKERS", 1, {"WORDORDERS_WORKERS": raw}, minimum=minimum)

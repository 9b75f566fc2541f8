"""Tests for the exception hierarchy."""

import pytest

from app.core.exceptions import (
    AtlasError,
    DegenerateGraph,
    GenusNotZero,
    HasFixedPoint,
    InvalidGraphError,
    InvalidMapError,
    InvalidSubgroupError,
    NotCoprime,
    VerificationFailed,
)


def test_user_message_defaults_to_message():
    err = AtlasError("alpha fixes dart 3")
    assert str(err) == "alpha fixes dart 3"
    assert err.user_message == "alpha fixes dart 3"
    assert err.context == {}


def test_context_and_user_message():
    err = NotCoprime("shared factor x", user_message="map is not reduced", context={"gcd": "x"})
    assert err.user_message == "map is not reduced"
    assert err.context == {"gcd": "x"}


@pytest.mark.parametrize(
    "exc, parent",
    [
        (HasFixedPoint, InvalidMapError),
        (DegenerateGraph, InvalidGraphError),
        (GenusNotZero, InvalidSubgroupError),
        (VerificationFailed, AtlasError),
    ],
)
def test_hierarchy(exc, parent):
    assert issubclass(exc, parent)
    assert issubclass(exc, AtlasError)

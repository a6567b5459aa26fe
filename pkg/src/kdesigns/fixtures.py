"""Bundled example designs and their recorded verification outcomes.

Three classics ship with the package:

* ``fano`` — the (7,3,1) design on 7 varieties; 7 blocks, symmetric.
* ``bibd_16_4_1`` — a (16,4,1) design; 20 blocks, every pair of the 16
  varieties together exactly once, not symmetric.
* ``s3_4_10`` — a 3-(10,4,1) design; 30 blocks of size 4 on 10 varieties,
  every triple of varieties in exactly one block.

Each fixture records the outcome its file must verify to; selftest and
the test suite replay them.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources

from .design import Design, DesignParams
from .designfile import parse_design

__all__ = ["FixtureExpectation", "FIXTURES", "fixture_names", "fixture_text", "load_fixture"]


@dataclass(frozen=True)
class FixtureExpectation:
    """What verification must report for one bundled design file."""

    name: str
    params: DesignParams
    symmetric: bool
    t: int | None = None
    lambda_t: int | None = None


FIXTURES = {
    "fano": FixtureExpectation(
        name="fano",
        params=DesignParams(v=7, b=7, r=3, k=3, lambda_=1),
        symmetric=True,
    ),
    "bibd_16_4_1": FixtureExpectation(
        name="bibd_16_4_1",
        params=DesignParams(v=16, b=20, r=5, k=4, lambda_=1),
        symmetric=False,
    ),
    "s3_4_10": FixtureExpectation(
        name="s3_4_10",
        params=DesignParams(v=10, b=30, r=12, k=4, lambda_=4),
        symmetric=False,
        t=3,
        lambda_t=1,
    ),
}


def fixture_names() -> list[str]:
    return sorted(FIXTURES)


def fixture_text(name: str) -> str:
    """Raw file text of a bundled design."""
    if name not in FIXTURES:
        raise KeyError(f"unknown fixture {name!r}, have {fixture_names()}")
    return resources.files(__package__).joinpath("data", f"{name}.design").read_text()


def load_fixture(name: str) -> Design:
    """Parse a bundled design file."""
    return parse_design(fixture_text(name))

"""Published example groupoids and the class each one is claimed to belong to.

The records live in ``data/published_examples.json``. Class claims "AG",
"AG-I", "AG-II" and "AG-III" are class memberships; the others are single
property claims about a named groupoid. ``listing`` marks records that come
from a full per-modulus enumeration of a class.
"""

from __future__ import annotations

import functools
import json
from dataclasses import dataclass
from importlib import resources

from agmat.groupoid import ParamGroupoid, classify_type

MEMBERSHIP_CLAIMS = ("AG", "AG-I", "AG-II", "AG-III")
CLAIM_TO_TAG = {"AG-I": "TypeI", "AG-II": "TypeII", "AG-III": "TypeIII"}


@dataclass(frozen=True)
class ExampleClaim:
    example: str
    n: int
    t: int
    u: int
    claim: str
    listing: bool = False

    @property
    def key(self) -> tuple[int, int, int]:
        return (self.n, self.t, self.u)


@functools.lru_cache(maxsize=1)
def example_claims() -> tuple[ExampleClaim, ...]:
    raw = resources.files("agmat").joinpath("data/published_examples.json").read_text("utf-8")
    return tuple(ExampleClaim(**rec) for rec in json.loads(raw))


def claims_for(n: int, t: int, u: int) -> list[ExampleClaim]:
    return [c for c in example_claims() if c.key == (n, t, u)]


def listed_in(n: int, t: int, u: int) -> str | None:
    """Name of the enumeration that lists (n, t, u), else the first example naming it."""
    claims = claims_for(n, t, u)
    if not claims:
        return None
    listings = [c for c in claims if c.listing]
    return (listings or claims)[0].example


def gcd_mismatch(n: int, t: int, u: int) -> bool:
    """Listed as Type-I although gcd(t, u) > 1 makes the tag Other."""
    listed_type_i = any(c.claim == "AG-I" for c in claims_for(n, t, u))
    return listed_type_i and classify_type(ParamGroupoid(n, t, u)).tag == "Other"


def readings(n: int, t: int, u: int) -> dict[str, str]:
    """Type tag with the gcd condition enforced, and with it dropped."""
    tc = classify_type(ParamGroupoid(n, t, u))
    loose = "TypeI" if tc.tag == "Other" else tc.tag
    return {"with_gcd": tc.tag, "without_gcd": loose}

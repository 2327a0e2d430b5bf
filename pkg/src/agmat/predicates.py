"""Closed-form conditions on (n, t, u).

Every function here has an exhaustive-search counterpart; the theorem sweep
checks each pair for equivalence before the closed forms are relied on.
"""

from __future__ import annotations

from math import gcd
from typing import Callable


def pred_ag(n: int, t: int, u: int) -> bool:
    """Left invertive law holds iff t^2 = u (mod n)."""
    return (t * t - u) % n == 0


def pred_band(n: int, t: int, u: int) -> bool:
    return (t + u - 1) % n == 0


def pred_ag_group(n: int, t: int, u: int) -> bool:
    """u = 1 and t^2 = 1 (mod n).

    A left identity e needs t*e + u*x = x for every x, which forces u = 1;
    the left invertive law then forces t^2 = 1.
    """
    return (u - 1) % n == 0 and (t * t - 1) % n == 0


def pred_left_cancellative(n: int, t: int, u: int) -> bool:
    return gcd(u % n, n) == 1


def pred_right_cancellative(n: int, t: int, u: int) -> bool:
    return gcd(t % n, n) == 1


def pred_cancellative(n: int, t: int, u: int) -> bool:
    return pred_left_cancellative(n, t, u) and pred_right_cancellative(n, t, u)


def pred_T3_l(n: int, t: int, u: int) -> bool:
    # ker(x -> u*x) must sit inside ker(x -> t*x)
    return t % gcd(u % n, n) == 0


def pred_T3_r(n: int, t: int, u: int) -> bool:
    return u % gcd(t % n, n) == 0


def pred_T3(n: int, t: int, u: int) -> bool:
    return pred_T3_l(n, t, u) and pred_T3_r(n, t, u)


def pred_associative(n: int, t: int, u: int) -> bool:
    """Coefficients of (a*b)*c and a*(b*c) agree: t^2 = t and u^2 = u."""
    return (t * t - t) % n == 0 and (u * u - u) % n == 0


def pred_commutative(n: int, t: int, u: int) -> bool:
    return (t - u) % n == 0


def pred_transitively_commutative(n: int, t: int, u: int) -> bool:
    # a*b = b*a iff (t-u)(a-b) = 0, a congruence relation, hence transitive
    return True


# Closed form for each law searched in agmat.laws.
LAW_PREDICATES: dict[str, Callable[[int, int, int], bool]] = {
    "left_invertive": pred_ag,
    "associative": pred_associative,
    "commutative": pred_commutative,
    "idempotent": pred_band,
    "T3_l": pred_T3_l,
    "T3_r": pred_T3_r,
    "transitively_commutative": pred_transitively_commutative,
    "left_cancellative": pred_left_cancellative,
    "right_cancellative": pred_right_cancellative,
}

"""Shared builders and exhaustive algebra checks used by the unit and
acceptance tests. Covers are cached so repeated criteria reuse one build."""

from __future__ import annotations

import functools
import itertools

from cyclecovers.covers import build_cover, heisenberg_cover, induced_odd_cover
from cyclecovers.gains import gain_from_cocycle
from cyclecovers.groups import ExtraspecialGroup, SIGNS


@functools.lru_cache(maxsize=None)
def cover(p: int, d: int, sign: str):
    return build_cover(p, d, sign)


@functools.lru_cache(maxsize=None)
def cube_cover(d: int):
    return heisenberg_cover(d)


@functools.lru_cache(maxsize=None)
def odd_cover(p: int, d: int, sign: str):
    return induced_odd_cover(p, d, sign)


@functools.lru_cache(maxsize=None)
def gain_graph(p: int, d: int, sign: str):
    return gain_from_cocycle(p, d, sign)


@functools.lru_cache(maxsize=None)
def group_elements(p: int, d: int, sign: str):
    group = ExtraspecialGroup(p, d, sign)
    return group, tuple(group.elements())


def check_associativity_exhaustive(p: int, d: int, sign: str) -> bool:
    group, els = group_elements(p, d, sign)
    mul = group.mul
    for g in els:
        for h in els:
            gh = mul(g, h)
            for k in els:
                if mul(gh, k) != mul(g, mul(h, k)):
                    return False
    return True


def check_inverses_exhaustive(p: int, d: int, sign: str) -> bool:
    group, els = group_elements(p, d, sign)
    e = group.identity
    return all(
        group.mul(g, group.inv(g)) == e and group.mul(group.inv(g), g) == e
        for g in els
    )


def check_center_exhaustive(p: int, d: int, sign: str) -> bool:
    group, _ = group_elements(p, d, sign)
    expected = sorted(
        (group.element((0,) * d, (0,) * d, z) for z in range(p)),
        key=lambda g: (g.a, g.b, g.z),
    )
    found = sorted(group.center(), key=lambda g: (g.a, g.b, g.z))
    return found == expected


def check_commutator_form_exhaustive(p: int, d: int, sign: str) -> bool:
    """Composed commutator equals the central element with coordinate
    b.c - a.d, for every ordered pair."""
    group, els = group_elements(p, d, sign)
    zero = (0,) * d
    for g in els:
        for h in els:
            got = group.commutator(g, h)
            want = (sum(x * y for x, y in zip(g.b, h.a))
                    - sum(x * y for x, y in zip(g.a, h.b))) % p
            if got != group.element(zero, zero, want):
                return False
    return True


def max_order(p: int, d: int, sign: str, sample=None) -> int:
    group, els = group_elements(p, d, sign)
    if sample is not None:
        els = sample(els)
    return max(group.order(g) for g in els)


def carry_identity_exhaustive(p: int) -> bool:
    """The carry function satisfies the cocycle identity as plain integers."""
    from cyclecovers.modular import carry_int

    for a, b, c in itertools.product(range(p), repeat=3):
        lhs = carry_int((a + b) % p, c, p) + carry_int(a, b, p)
        rhs = carry_int(a, (b + c) % p, p) + carry_int(b, c, p)
        if lhs != rhs:
            return False
        if not 0 <= lhs <= 2:
            return False
    return True


def both_signs():
    return SIGNS

"""Dense functions on small finite groups: convolution, the mod-2 twisted
convolution, and the lift to the Heisenberg carrier."""

from __future__ import annotations

import itertools
from typing import Callable, Sequence

import numpy as np

from .groups import HeisenbergElement, HeisenbergGroup


class GroupFunction:
    """A total function from an enumerated carrier to numbers.

    Integer values stay integers through convolution, keeping the algebraic
    identity checks exact.
    """

    def __init__(self, carrier: Sequence, values: Sequence):
        if len(carrier) != len(values):
            raise ValueError("one value per carrier element required")
        self.carrier = tuple(carrier)
        self.values = tuple(values)
        self.index = {g: i for i, g in enumerate(self.carrier)}
        if len(self.index) != len(self.carrier):
            raise ValueError("carrier contains repeated elements")

    @classmethod
    def delta(cls, carrier: Sequence, at) -> "GroupFunction":
        values = [0] * len(carrier)
        values[list(carrier).index(at)] = 1
        return cls(carrier, values)

    @classmethod
    def indicator(cls, carrier: Sequence, support: set) -> "GroupFunction":
        return cls(carrier, [1 if g in support else 0 for g in carrier])

    def __call__(self, g):
        return self.values[self.index[g]]

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, GroupFunction)
            and self.carrier == other.carrier
            and self.values == other.values
        )

    def __add__(self, other: "GroupFunction") -> "GroupFunction":
        self._check(other)
        return GroupFunction(self.carrier, [a + b for a, b in zip(self.values, other.values)])

    def scale(self, c) -> "GroupFunction":
        return GroupFunction(self.carrier, [c * v for v in self.values])

    def _check(self, other: "GroupFunction") -> None:
        if self.carrier != other.carrier:
            raise ValueError("functions live on different carriers")


def convolve(f: GroupFunction, g: GroupFunction, mul: Callable, inv: Callable) -> GroupFunction:
    """(f * g)(x) = sum over y of f(y) g(y^-1 x)."""
    f._check(g)
    out = []
    for x in f.carrier:
        acc = 0
        for i, y in enumerate(f.carrier):
            fy = f.values[i]
            if fy:
                acc += fy * g.values[g.index[mul(inv(y), x)]]
        out.append(acc)
    return GroupFunction(f.carrier, out)


def z2_carrier(d: int) -> tuple[tuple[int, ...], ...]:
    """All of Z_2^d, first coordinate most significant."""
    return tuple(itertools.product(range(2), repeat=d))


def heisenberg_carrier(d: int) -> tuple[HeisenbergElement, ...]:
    return tuple(HeisenbergGroup(d).elements())


def standard_basis_indicator(d: int) -> GroupFunction:
    """Indicator of the d unit vectors; convolving by it acts as the cube's
    adjacency matrix."""
    carrier = z2_carrier(d)
    units = {tuple(1 if j == i else 0 for j in range(d)) for i in range(d)}
    return GroupFunction.indicator(carrier, units)


def twisted_convolve(f: GroupFunction, g: GroupFunction) -> GroupFunction:
    """Convolution over Z_2^d carrying the sign of the strictly-upper form
    evaluated at (y, y + x)."""
    f._check(g)
    d = len(f.carrier[0])
    group = HeisenbergGroup(d)
    out = []
    for x in f.carrier:
        acc = 0
        for i, y in enumerate(f.carrier):
            fy = f.values[i]
            if fy:
                yx = tuple((a + b) % 2 for a, b in zip(y, x))
                sign = -1 if group.form(y, yx) else 1
                acc += sign * fy * g.values[g.index[yx]]
        out.append(acc)
    return GroupFunction(f.carrier, out)


def central_lift(f: GroupFunction) -> GroupFunction:
    """Lift f on Z_2^d to the Heisenberg carrier, weighted by the parity
    character on the central coordinate: (x, t) -> (-1)^t f(x)."""
    d = len(f.carrier[0])
    carrier = heisenberg_carrier(d)
    values = [((-1) ** g.t) * f.values[f.index[g.x]] for g in carrier]
    return GroupFunction(carrier, values)


def check_central_lift_identity(f: GroupFunction, g: GroupFunction) -> tuple[bool, int]:
    """Verify convolve(lift f, lift g) equals the lift of the twisted
    convolution scaled by the center order. Returns (ok, center_order)."""
    d = len(f.carrier[0])
    group = HeisenbergGroup(d)
    center_order = 2
    lhs = convolve(central_lift(f), central_lift(g), group.mul, group.inv)
    rhs = central_lift(twisted_convolve(f, g)).scale(center_order)
    return lhs == rhs, center_order


def operator_matrix(transform: Callable[[GroupFunction], GroupFunction],
                    carrier: Sequence) -> np.ndarray:
    """Matrix of a linear map on functions, columns indexed by delta inputs."""
    n = len(carrier)
    m = np.zeros((n, n))
    for j, y in enumerate(carrier):
        col = transform(GroupFunction.delta(carrier, y))
        m[:, j] = col.values
    return m


def convolution_operator_matrix(d: int) -> np.ndarray:
    """Matrix of f -> f * (standard basis indicator) over Z_2^d."""
    mu = standard_basis_indicator(d)

    def add(u, v):
        return tuple((a + b) % 2 for a, b in zip(u, v))

    def neg(u):
        return u

    return operator_matrix(lambda f: convolve(f, mu, add, neg), z2_carrier(d))


def twisted_operator_matrix(d: int) -> np.ndarray:
    """Matrix of f -> twisted_convolve(f, standard basis indicator)."""
    mu = standard_basis_indicator(d)
    return operator_matrix(lambda f: twisted_convolve(f, mu), z2_carrier(d))

"""Central extensions of Z_p^{2d} by Z_p via explicit 2-cocycles.

Both extraspecial groups of order p^{1+2d} live on the same carrier
Z_p^d x Z_p^d x Z_p; the sign selects the cocycle, and with it the
multiplication. The mod-2 Heisenberg extension of Z_2^d lives on
Z_2^d x Z_2.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Callable, Iterator, Optional

from .modular import Prime, carry_int

PLUS = "plus"
MINUS = "minus"
SIGNS = (PLUS, MINUS)


@dataclass(frozen=True)
class ExtraspecialElement:
    """A triple (a, b, z) with a, b in Z_p^d and z in Z_p."""

    a: tuple[int, ...]
    b: tuple[int, ...]
    z: int


@dataclass(frozen=True)
class HeisenbergElement:
    """A pair (x, t) with x in Z_2^d and t in Z_2."""

    x: tuple[int, ...]
    t: int


class ExtraspecialGroup:
    """Group of order p^{1+2d} on Z_p^d x Z_p^d x Z_p, multiplication set by `sign`.

    sign="plus" gives the exponent-p group (cocycle b.c); sign="minus" gives
    the exponent-p^2 group (cocycle b.c + carry on the first coordinates).
    """

    def __init__(self, p: int, d: int, sign: str):
        if sign not in SIGNS:
            raise ValueError(f"sign must be one of {SIGNS}, got {sign!r}")
        if d < 1:
            raise ValueError(f"d must be >= 1, got {d}")
        self.p = Prime(p)
        self.d = d
        self.sign = sign
        self.size = p ** (1 + 2 * d)
        self.identity = ExtraspecialElement((0,) * d, (0,) * d, 0)

    def element(self, a, b, z: int) -> ExtraspecialElement:
        a = tuple(int(x) % self.p for x in a)
        b = tuple(int(x) % self.p for x in b)
        if len(a) != self.d or len(b) != self.d:
            raise ValueError(f"blocks must have length d={self.d}")
        return ExtraspecialElement(a, b, int(z) % self.p)

    def embed(self, vec: tuple[int, ...]) -> ExtraspecialElement:
        """Include a vector of Z_p^{2d} as (a, b, 0)."""
        if len(vec) != 2 * self.d:
            raise ValueError(f"expected a vector of length {2 * self.d}")
        return self.element(vec[: self.d], vec[self.d:], 0)

    def cocycle(self, g: tuple[tuple[int, ...], tuple[int, ...]],
                h: tuple[tuple[int, ...], tuple[int, ...]]) -> int:
        """The 2-cocycle on pairs ((a,b),(c,d)): b.c, plus a carry term for minus."""
        (a, b), (c, _) = g, h
        if len(a) != len(c):
            raise ValueError("dimension mismatch in cocycle arguments")
        val = sum(x * y for x, y in zip(b, c)) % self.p
        if self.sign == MINUS:
            val = (val + carry_int(a[0], c[0], self.p)) % self.p
        return val

    def mul(self, g: ExtraspecialElement, h: ExtraspecialElement) -> ExtraspecialElement:
        p = self.p
        a = tuple((x + y) % p for x, y in zip(g.a, h.a))
        b = tuple((x + y) % p for x, y in zip(g.b, h.b))
        z = (g.z + h.z + self.cocycle((g.a, g.b), (h.a, h.b))) % p
        return ExtraspecialElement(a, b, z)

    def inv(self, g: ExtraspecialElement) -> ExtraspecialElement:
        p = self.p
        a = tuple((-x) % p for x in g.a)
        b = tuple((-x) % p for x in g.b)
        z = (-g.z + sum(x * y for x, y in zip(g.a, g.b))) % p
        if self.sign == MINUS:
            z = (z - carry_int(g.a[0], (-g.a[0]) % p, p)) % p
        return ExtraspecialElement(a, b, z)

    def commutator(self, g: ExtraspecialElement, h: ExtraspecialElement) -> ExtraspecialElement:
        """g^-1 h^-1 g h, computed by composition."""
        return self.mul(self.mul(self.mul(self.inv(g), self.inv(h)), g), h)

    def power(self, g: ExtraspecialElement, k: int) -> ExtraspecialElement:
        if k < 0:
            raise ValueError("exponent must be nonnegative")
        out = self.identity
        for _ in range(k):
            out = self.mul(out, g)
        return out

    def order(self, g: ExtraspecialElement) -> int:
        out = g
        n = 1
        while out != self.identity:
            out = self.mul(out, g)
            n += 1
        return n

    def elements(self) -> Iterator[ExtraspecialElement]:
        """All elements, ordered a_1..a_d, b_1..b_d, z with a_1 most significant."""
        rng = range(self.p)
        for digits in itertools.product(rng, repeat=2 * self.d + 1):
            yield ExtraspecialElement(digits[: self.d], digits[self.d: 2 * self.d], digits[-1])

    def center(self) -> list[ExtraspecialElement]:
        """Computed by brute force; intended for small instances."""
        els = list(self.elements())
        return [g for g in els if all(self.mul(g, h) == self.mul(h, g) for h in els)]


class HeisenbergGroup:
    """Central extension of Z_2^d by Z_2 via the strictly-upper bilinear form."""

    def __init__(self, d: int):
        if d < 1:
            raise ValueError(f"d must be >= 1, got {d}")
        self.d = d
        self.size = 2 ** (d + 1)
        self.identity = HeisenbergElement((0,) * d, 0)

    def form(self, x: tuple[int, ...], y: tuple[int, ...]) -> int:
        """sum over i < j of x_i y_j, mod 2."""
        if len(x) != self.d or len(y) != self.d:
            raise ValueError("dimension mismatch")
        total = 0
        for i in range(self.d):
            if x[i]:
                total += sum(y[i + 1:])
        return total % 2

    def element(self, x, t: int) -> HeisenbergElement:
        x = tuple(int(v) % 2 for v in x)
        if len(x) != self.d:
            raise ValueError(f"vector must have length d={self.d}")
        return HeisenbergElement(x, int(t) % 2)

    def mul(self, g: HeisenbergElement, h: HeisenbergElement) -> HeisenbergElement:
        x = tuple((a + b) % 2 for a, b in zip(g.x, h.x))
        return HeisenbergElement(x, (g.t + h.t + self.form(g.x, h.x)) % 2)

    def inv(self, g: HeisenbergElement) -> HeisenbergElement:
        # In characteristic 2 the inverse of (x, t) is (x, t + form(x, x)).
        return HeisenbergElement(g.x, (g.t + self.form(g.x, g.x)) % 2)

    def generators(self) -> tuple[HeisenbergElement, ...]:
        """(e_1, 0), ..., (e_d, 0)."""
        return tuple(
            HeisenbergElement(tuple(1 if j == i else 0 for j in range(self.d)), 0)
            for i in range(self.d)
        )

    def elements(self) -> Iterator[HeisenbergElement]:
        """Ordered x_1..x_d, t with x_1 most significant."""
        for digits in itertools.product(range(2), repeat=self.d + 1):
            yield HeisenbergElement(digits[:-1], digits[-1])


@dataclass(frozen=True)
class CocycleCheckResult:
    ok: bool
    witness: Optional[tuple]
    exhaustive: bool
    triples_checked: int


def cocycle_check(
    cocycle_fn: Callable[[tuple[int, ...], tuple[int, ...]], int],
    p: int,
    dim: int,
    exhaustive_limit: int = 10 ** 7,
    sample_size: int = 10 ** 5,
    seed: int = 0,
) -> CocycleCheckResult:
    """Verify kappa(a+b,c) + kappa(a,b) = kappa(a,b+c) + kappa(b,c) mod p.

    Exhausts all triples of Z_p^dim when p^(3*dim) <= exhaustive_limit,
    otherwise checks a seeded deterministic sample of at least sample_size
    triples. Returns the first violating triple on failure.
    """
    p = Prime(p)

    def add(u, v):
        return tuple((x + y) % p for x, y in zip(u, v))

    def violates(a, b, c):
        lhs = (cocycle_fn(add(a, b), c) + cocycle_fn(a, b)) % p
        rhs = (cocycle_fn(a, add(b, c)) + cocycle_fn(b, c)) % p
        return lhs != rhs

    total = p ** (3 * dim)
    if total <= exhaustive_limit:
        count = 0
        vecs = list(itertools.product(range(p), repeat=dim))
        for a in vecs:
            for b in vecs:
                for c in vecs:
                    count += 1
                    if violates(a, b, c):
                        return CocycleCheckResult(False, (a, b, c), True, count)
        return CocycleCheckResult(True, None, True, count)

    rng = random.Random(seed)
    for count in range(1, sample_size + 1):
        a = tuple(rng.randrange(p) for _ in range(dim))
        b = tuple(rng.randrange(p) for _ in range(dim))
        c = tuple(rng.randrange(p) for _ in range(dim))
        if violates(a, b, c):
            return CocycleCheckResult(False, (a, b, c), False, count)
    return CocycleCheckResult(True, None, False, sample_size)

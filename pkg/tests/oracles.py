"""Brute-force reference implementations the tests check against.

Everything here is deliberately independent of the library's own algorithms:
cycle facts come from exhaustive DFS enumeration, eigenvalues from exact
integer characteristic polynomials root-found at high precision.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

import numpy as np
from mpmath import mp, polyroots


def enumerate_simple_cycles(graph):
    """Every simple cycle once, as a vertex tuple rooted at its minimum
    vertex with the smaller second vertex. Exhaustive DFS; small graphs only."""
    cycles = []
    for root in range(graph.n):
        stack = [(root, (root,))]
        while stack:
            u, path = stack.pop()
            for w in graph.neighbors(u):
                if w == root and len(path) >= 3 and path[1] < path[-1]:
                    cycles.append(path)
                    continue
                if w <= root or w in path:
                    continue
                stack.append((w, path + (w,)))
    return cycles


def brute_girth(graph):
    """Minimum simple-cycle length by exhaustive DFS with best-so-far pruning;
    None when the graph is acyclic."""
    best = None
    for root in range(graph.n):
        stack = [(root, (root,))]
        while stack:
            u, path = stack.pop()
            if best is not None and len(path) >= best:
                continue
            for w in graph.neighbors(u):
                if w == root and len(path) >= 3:
                    if best is None or len(path) < best:
                        best = len(path)
                    continue
                if w <= root or w in path:
                    continue
                stack.append((w, path + (w,)))
    return best


def brute_cycle_lengths(graph) -> set[int]:
    return {len(c) for c in enumerate_simple_cycles(graph)}


def brute_has_4cycle(graph) -> bool:
    """Scan all 4-subsets for an induced-or-not 4-cycle."""
    for quad in itertools.combinations(range(graph.n), 4):
        for perm in itertools.permutations(quad[1:]):
            seq = (quad[0],) + perm
            if all(graph.has_edge(seq[i], seq[(i + 1) % 4]) for i in range(4)):
                return True
    return False


def brute_isomorphic(g1, g2) -> bool:
    """Permutation search; only sensible for tiny graphs."""
    if g1.n != g2.n or g1.m != g2.m:
        return False
    e2 = g2.edge_set()
    degs1 = sorted(g1.degree(v) for v in range(g1.n))
    degs2 = sorted(g2.degree(v) for v in range(g2.n))
    if degs1 != degs2:
        return False
    edges1 = list(g1.edges())
    for perm in itertools.permutations(range(g1.n)):
        if all(
            (min(perm[a], perm[b]), max(perm[a], perm[b])) in e2 for a, b in edges1
        ):
            return True
    return False


def exact_charpoly(matrix) -> list:
    """Characteristic polynomial coefficients of an integer matrix, exact.

    Faddeev-LeVerrier with rational arithmetic; the divisions come out
    integral for integer input but Fractions keep the loop simple.
    """
    n = len(matrix)
    m = [[Fraction(int(x)) for x in row] for row in matrix]
    coeffs = [Fraction(1)]
    aux = [[Fraction(1) if i == j else Fraction(0) for j in range(n)] for i in range(n)]
    for k in range(1, n + 1):
        prod = [
            [sum(m[i][t] * aux[t][j] for t in range(n)) for j in range(n)]
            for i in range(n)
        ]
        ck = -sum(prod[i][i] for i in range(n)) / k
        coeffs.append(ck)
        aux = [
            [prod[i][j] + (ck if i == j else 0) for j in range(n)]
            for i in range(n)
        ]
    return coeffs


def _poly_sqrt(coeffs: list[int]) -> list[int]:
    """Exact square root of a monic even-degree integer polynomial that is a
    perfect square, by matching convolution coefficients."""
    assert coeffs[0] == 1 and (len(coeffs) - 1) % 2 == 0
    n = (len(coeffs) - 1) // 2
    q = [1]
    for k in range(1, n + 1):
        cross = sum(q[i] * q[k - i] for i in range(1, k) if k - i <= len(q) - 1)
        num = coeffs[k] - cross
        assert num % 2 == 0
        q.append(num // 2)
    # The top half of the coefficients must agree as well.
    check = [0] * (2 * n + 1)
    for i, a in enumerate(q):
        for j, b in enumerate(q):
            check[i + j] += a * b
    assert check == coeffs
    return q


def charpoly_eigenvalues(matrix) -> np.ndarray:
    """Ascending real eigenvalues of an integer Hermitian matrix via its exact
    characteristic polynomial and multiprecision root finding.

    Complex input goes through the real block embedding, whose characteristic
    polynomial is the exact square of the true one; the integer square root
    is extracted before root finding.
    """
    m = np.asarray(matrix)
    if np.iscomplexobj(m) and np.any(m.imag):
        re = m.real.astype(np.int64)
        im = m.imag.astype(np.int64)
        assert np.array_equal(m.real, re) and np.array_equal(m.imag, im)
        embedded = np.block([[re, -im], [im, re]])
        squared = _integral(exact_charpoly(embedded.tolist()))
        return np.array(_real_roots(_poly_sqrt(squared)), dtype=float)
    ints = m.astype(np.int64)
    assert np.array_equal(np.asarray(m, dtype=float), ints)
    return np.array(_real_roots(_integral(exact_charpoly(ints.tolist()))), dtype=float)


def _integral(coeffs) -> list[int]:
    for c in coeffs:
        assert c.denominator == 1
    return [int(c) for c in coeffs]


def _real_roots(coeffs: list[int]) -> list:
    with mp.workdps(60):
        roots = polyroots([mp.mpf(c) for c in coeffs], maxsteps=200, extraprec=120)
        for r in roots:
            assert abs(mp.im(r)) < mp.mpf("1e-25")
        return sorted(mp.re(r) for r in roots)

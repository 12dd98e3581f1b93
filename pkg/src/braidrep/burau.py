"""Burau and reduced Burau representations as exact Laurent-matrix values.

Generator images follow the classical block matrices over Z[t, t^-1]:
the unreduced U_i carries the 2x2 block [[1-t, t], [1, 0]] at position i,
and the reduced V_i are the (n-1)x(n-1) companions related to U_i by
conjugation with the upper-triangular all-ones matrix C.  Words map to
products of generator matrices in word order.
"""

from __future__ import annotations

from dataclasses import dataclass

from .laurent import LaurentPoly, RingMatrix
from .words import BraidWord

T = LaurentPoly.var("t")
_ONE = LaurentPoly.constant(1, ("t",))
_ZERO = LaurentPoly.constant(0, ("t",))
_TINV = T.unit_inverse()


@dataclass(frozen=True)
class BurauImage:
    """A Burau matrix tagged with its strand count and variant."""

    n: int
    reduced: bool
    matrix: RingMatrix


def _embed_block(n: int, i: int, block) -> RingMatrix:
    """Place a 2x2 block at rows/cols (i, i+1) of the n x n identity."""
    grid = [[_ONE if r == c else _ZERO for c in range(n)] for r in range(n)]
    for dr in range(2):
        for dc in range(2):
            grid[i - 1 + dr][i - 1 + dc] = block[dr][dc]
    return RingMatrix(n, n, tuple(tuple(row) for row in grid))


def unreduced_generator(n: int, i: int, sign: int = 1) -> RingMatrix:
    if not 1 <= i <= n - 1:
        raise ValueError(f"generator index {i} out of range for n={n}")
    if sign == 1:
        block = [[_ONE - T, T], [_ONE, _ZERO]]
    else:
        block = [[_ZERO, _ONE], [_TINV, _ONE - _TINV]]
    return _embed_block(n, i, block)


def reduced_generator(n: int, i: int, sign: int = 1) -> RingMatrix:
    if n < 2:
        raise ValueError("reduced Burau needs n >= 2")
    if not 1 <= i <= n - 1:
        raise ValueError(f"generator index {i} out of range for n={n}")
    if n == 2:
        v = RingMatrix.from_rows([[-T]])
    else:
        k = n - 1
        grid = [[_ONE if r == c else _ZERO for c in range(k)] for r in range(k)]
        if i == 1:
            grid[0][0] = -T
            grid[1][0] = _ONE
        elif i == n - 1:
            grid[k - 2][k - 1] = T
            grid[k - 1][k - 1] = -T
        else:
            # middle 3x3 block at rows/cols i-1, i, i+1 (1-indexed)
            grid[i - 2][i - 1] = T
            grid[i - 1][i - 1] = -T
            grid[i][i - 1] = _ONE
        v = RingMatrix(k, k, tuple(tuple(row) for row in grid))
    if sign == 1:
        return v
    return v.inverse_unit_det()


def burau(w: BraidWord) -> BurauImage:
    """The unreduced Burau matrix of a braid word (n >= 2)."""
    if w.n < 2:
        raise ValueError("Burau representation needs n >= 2")
    acc = RingMatrix.identity(w.n)
    for i, s in w.letters:
        acc = acc @ unreduced_generator(w.n, i, s)
    return BurauImage(w.n, False, acc)


def reduced_burau(w: BraidWord) -> BurauImage:
    """The reduced Burau matrix of a braid word, size (n-1) x (n-1)."""
    if w.n < 2:
        raise ValueError("reduced Burau representation needs n >= 2")
    acc = RingMatrix.identity(w.n - 1)
    for i, s in w.letters:
        acc = acc @ reduced_generator(w.n, i, s)
    return BurauImage(w.n, True, acc)


def ones_upper_triangular(n: int) -> RingMatrix:
    return RingMatrix(
        n, n, tuple(tuple(_ONE if c >= r else _ZERO for c in range(n)) for r in range(n))
    )


def conjugation_check(n: int, i: int) -> bool:
    """Verify U_i C = C W_i exactly, where W_i = [[V_i, 0], [X_i, 1]].

    X_i is the zero row except for a trailing 1 when i = n-1.
    """
    if n < 2:
        raise ValueError("conjugation check needs n >= 2")
    u = unreduced_generator(n, i, 1)
    c = ones_upper_triangular(n)
    v = reduced_generator(n, i, 1)
    grid = [list(row) + [_ZERO] for row in v.entries]
    last = [_ZERO] * (n - 1) + [_ONE]
    if i == n - 1:
        last[n - 2] = _ONE
    grid.append(last)
    w = RingMatrix(n, n, tuple(tuple(row) for row in grid))
    return (u @ c) == (c @ w)

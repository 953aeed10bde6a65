"""Hook-content counts, binomial determinants, and tableau oracles.

The binomial determinant det |C(t+i-1, a_i-j)| attached to the sequence a
of a matching is the top tau-coefficient of the bivariate loop polynomial
and, at integer arguments, counts strictly or weakly increasing fillings
of the Young diagram.  This module also carries the two closed forms for
the subleading coefficient of A_pi(t) and a pair of exact hook-product
identities they imply.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterator, Literal

from .exactalg import RatPoly, binom_poly, binom_value
from .matchings import Matching, YoungDiagram, d_of, young_of


def s_sigma(sigma: Matching) -> RatPoly:
    """Hook content polynomial of Y(sigma): S(N) = prod (N + c(u)) / H.

    At a nonnegative integer N it counts semistandard fillings with
    entries at most N.
    """
    Y = young_of(sigma)
    p = RatPoly([1])
    for box in Y.boxes():
        p = p * RatPoly([Y.content(*box), 1])
    return p * Fraction(1, Y.hook_product())


def ssyt_count(Y: YoungDiagram, bound: int) -> int:
    """Brute-force count of semistandard fillings (rows weakly, columns
    strictly increasing) with entries in 1..bound.  Oracle for s_sigma."""
    boxes = list(Y.boxes())

    def rec(k: int, filling: dict) -> int:
        if k == len(boxes):
            return 1
        x, y = boxes[k]
        lo = 1
        if y > 1:
            lo = max(lo, filling[(x, y - 1)])
        if x > 1:
            lo = max(lo, filling[(x - 1, y)] + 1)
        total = 0
        for v in range(lo, bound + 1):
            filling[(x, y)] = v
            total += rec(k + 1, filling)
        filling.pop((x, y), None)
        return total

    return rec(0, {})


def d_det_poly(pi: Matching) -> RatPoly:
    """det |C(t+i-1, a_i-j)|, an integer-valued polynomial of degree d(pi)."""
    a = pi.sequence
    n = len(a)
    entries = [[binom_poly(a[i] - (j + 1), shift=i) for j in range(n)] for i in range(n)]
    return _det_poly(entries)


def d_det(pi: Matching, t) -> Fraction:
    """The same determinant evaluated exactly at a rational argument."""
    a = pi.sequence
    n = len(a)
    entries = [
        [binom_value(Fraction(t) + i, a[i] - (j + 1)) for j in range(n)]
        for i in range(n)
    ]
    return _det_fraction(entries)


def _det_poly(m: list[list[RatPoly]]) -> RatPoly:
    """Determinant by memoized expansion along the last row of each
    column subset; fine for the sizes that occur here (n <= 8)."""
    n = len(m)
    memo: dict[int, RatPoly] = {0: RatPoly([1])}

    def minor(colmask: int) -> RatPoly:
        if colmask in memo:
            return memo[colmask]
        i = bin(colmask).count("1") - 1
        acc = RatPoly()
        sign = 1
        for j in range(n):
            if colmask >> j & 1:
                sub = minor(colmask & ~(1 << j))
                if not m[i][j].is_zero():
                    acc = acc + sign * (m[i][j] * sub)
                sign = -sign
        memo[colmask] = acc
        return acc

    return minor((1 << n) - 1)


def _det_fraction(m: list[list[Fraction]]) -> Fraction:
    """Fraction-free style Gaussian determinant over exact rationals."""
    n = len(m)
    m = [row[:] for row in m]
    det = Fraction(1)
    for k in range(n):
        piv = next((r for r in range(k, n) if m[r][k] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != k:
            m[k], m[piv] = m[piv], m[k]
            det = -det
        det *= m[k][k]
        inv = 1 / m[k][k]
        for r in range(k + 1, n):
            f = m[r][k] * inv
            if f:
                for c in range(k, n):
                    m[r][c] -= f * m[k][c]
    return det


TableauMode = Literal["strict", "weak"]


def count_tableaux(Y: YoungDiagram, bound: int, mode: TableauMode) -> int:
    """Exhaustive tableau count of shape Y.

    strict: entries 1..bound, strictly increasing along rows and columns.
    weak:   entries 0..bound, weakly increasing along rows and columns.
    """
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    boxes = list(Y.boxes())
    strict = mode == "strict"
    lo0, hi = (1, bound) if strict else (0, bound)

    def rec(k: int, filling: dict) -> int:
        if k == len(boxes):
            return 1
        x, y = boxes[k]
        lo = lo0
        if y > 1:
            lo = max(lo, filling[(x, y - 1)] + (1 if strict else 0))
        if x > 1:
            lo = max(lo, filling[(x - 1, y)] + (1 if strict else 0))
        total = 0
        for v in range(lo, hi + 1):
            filling[(x, y)] = v
            total += rec(k + 1, filling)
        filling.pop((x, y), None)
        return total

    return rec(0, {})


# -- subleading coefficient -------------------------------------------------


def _corner_sum(Y: YoungDiagram, n: int, use_row: bool) -> Fraction:
    acc = Fraction(0)
    for x, y in Y.corners():
        H1 = Y.remove_box((x, y)).hook_product()
        acc += Fraction(n - (x if use_row else y), H1)
    return acc


def subleading(pi: Matching) -> Fraction:
    """Coefficient of t^(d-1) in A_pi(t), by two closed forms that must
    agree; it is strictly positive for every pi with a nonempty diagram.

    form 1:  (sum of contents)/H + sum over corners (n-y)/H(Y - corner)
    form 2: -(sum of contents)/H + sum over corners (n-x)/H(Y - corner)
    Their mean is (1/2) sum over corners (2n-x-y)/H(Y - corner).
    """
    Y = young_of(pi)
    if Y.d == 0:
        raise ValueError("the fully nested matching has a constant polynomial")
    n = pi.n
    csum = Fraction(sum(Y.content(*b) for b in Y.boxes()), Y.hook_product())
    v1 = csum + _corner_sum(Y, n, use_row=False)
    v2 = -csum + _corner_sum(Y, n, use_row=True)
    if v1 != v2:
        raise AssertionError(f"subleading forms disagree on {pi}: {v1} vs {v2}")
    mean = Fraction(1, 2) * sum(
        Fraction(2 * n - x - y, Y.remove_box((x, y)).hook_product())
        for x, y in Y.corners()
    )
    if mean != v1:
        raise AssertionError(f"averaged corner form disagrees on {pi}")
    return v1


def horizontal_dominoes(Y: YoungDiagram) -> Iterator[YoungDiagram]:
    """Diagrams obtained by removing two boxes from the end of one row."""
    rows = list(Y.rows)
    for x in range(len(rows)):
        below = rows[x + 1] if x + 1 < len(rows) else 0
        if rows[x] - 2 >= below:
            out = rows[:]
            out[x] -= 2
            yield YoungDiagram(tuple(r for r in out if r > 0))


def vertical_dominoes(Y: YoungDiagram) -> Iterator[YoungDiagram]:
    for Yt in horizontal_dominoes(Y.transpose()):
        yield Yt.transpose()


def hook_identities(Y: YoungDiagram) -> bool:
    """Two exact identities for 2*(sum of contents)/H_Y:

    = sum over corners (y-x)/H(Y - corner)
    = sum over removable horizontal dominoes 1/H  minus the same over
      vertical dominoes.
    """
    if Y.d == 0:
        raise ValueError("identities are stated for nonempty diagrams")
    lhs = Fraction(2 * sum(Y.content(*b) for b in Y.boxes()), Y.hook_product())
    corners = sum(
        Fraction(y - x, Y.remove_box((x, y)).hook_product()) for x, y in Y.corners()
    )
    dominoes = sum(
        Fraction(1, D.hook_product()) for D in horizontal_dominoes(Y)
    ) - sum(Fraction(1, D.hook_product()) for D in vertical_dominoes(Y))
    return lhs == corners == dominoes


# -- factorial determinants -------------------------------------------------


def _inv_factorial(k: int) -> Fraction:
    return Fraction(1, math.factorial(k)) if k >= 0 else Fraction(0)


def factorial_hook_det(pi: Matching) -> Fraction:
    """det |1/(a_i - j)!|; equals 1/H of the diagram of pi."""
    a = pi.sequence
    n = len(a)
    return _det_fraction(
        [[_inv_factorial(a[i] - (j + 1)) for j in range(n)] for i in range(n)]
    )


def subleading_det_identity(pi: Matching) -> bool:
    """Row-weighted factorial determinant identity underlying the second
    closed form of the subleading coefficient:

    sum_k det(row k scaled by (a_i-j)(a_i-j-1))
        = (sum_k (a_k-k)(a_k-2n+k-1)) * det |1/(a_i-j)!|.
    """
    a = pi.sequence
    n = len(a)
    n2 = 2 * pi.n
    base = [[_inv_factorial(a[i] - (j + 1)) for j in range(n)] for i in range(n)]
    lhs = Fraction(0)
    for k in range(n):
        m = [row[:] for row in base]
        m[k] = [_inv_factorial(a[k] - (j + 1) - 2) for j in range(n)]
        lhs += _det_fraction(m)
    factor = sum(
        (a[k - 1] - k) * (a[k - 1] - n2 + k - 1) for k in range(1, n + 1)
    )
    rhs = factor * _det_fraction(base)
    return lhs == rhs

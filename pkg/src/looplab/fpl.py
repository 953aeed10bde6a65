"""Brute-force enumeration of fully packed loop configurations.

A configuration of size n occupies edges of the n x n grid graph so that
every vertex has degree exactly 2, with a fixed alternating boundary:
walking the external edge stubs counterclockwise from the topmost stub on
the left side, every second stub is occupied, starting with that one.
The 2n occupied stubs are labeled 1..2n in the same counterclockwise
order; the paths through the grid pair them into a noncrossing matching.

The exact starting stub of the labeling is a convention; the census per
matching is invariant under rotating it (a nontrivial theorem about these
configurations), and the cross-check against the loop-model groundstate
pins the convention empirically.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .matchings import Matching


def a_n(n: int) -> int:
    """Total number of size-n configurations: prod (3k+1)!/(n+k)!."""
    if n < 1:
        raise ValueError("n must be positive")
    acc = Fraction(1)
    for k in range(n):
        acc *= Fraction(math.factorial(3 * k + 1), math.factorial(n + k))
    assert acc.denominator == 1
    return acc.numerator


def a_v(n: int) -> int:
    """Number of vertically symmetric size-n configurations; 0 for even n."""
    if n < 1:
        raise ValueError("n must be positive")
    if n % 2 == 0:
        return 0
    m = (n - 1) // 2
    acc = Fraction(1, 2**m)
    for k in range(1, m + 1):
        acc *= Fraction(
            math.factorial(6 * k - 2) * math.factorial(2 * k - 1),
            math.factorial(4 * k - 1) * math.factorial(4 * k - 2),
        )
    assert acc.denominator == 1
    return acc.numerator


@dataclass(frozen=True)
class FplConfig:
    """Occupancy of the internal edges; the boundary is implied by n.

    horiz[r][c] is the edge (r+1, c+1)-(r+1, c+2), r in 0..n-1, c in 0..n-2.
    vert[r][c] is the edge (r+1, c+1)-(r+2, c+1), r in 0..n-2, c in 0..n-1.
    """

    n: int
    horiz: tuple[tuple[bool, ...], ...]
    vert: tuple[tuple[bool, ...], ...]

    def degree(self, r: int, c: int) -> int:
        """Degree of vertex (r, c), 1-based, counting boundary stubs."""
        ext = boundary_stubs(self.n)
        deg = 0
        deg += self.vert[r - 2][c - 1] if r > 1 else ext["U", c]
        deg += self.vert[r - 1][c - 1] if r < self.n else ext["D", c]
        deg += self.horiz[r - 1][c - 2] if c > 1 else ext["L", r]
        deg += self.horiz[r - 1][c - 1] if c < self.n else ext["R", r]
        return deg


@dataclass(frozen=True)
class FplCensus:
    n: int
    counts: dict[Matching, int]

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "counts": {m.word: c for m, c in sorted(self.counts.items())},
        }


def _boundary_walk(n: int) -> list[tuple[str, int]]:
    """External stubs in counterclockwise order starting at the left side's
    topmost stub: down the left, along the bottom, up the right, back along
    the top."""
    walk: list[tuple[str, int]] = []
    walk += [("L", r) for r in range(1, n + 1)]
    walk += [("D", c) for c in range(1, n + 1)]
    walk += [("R", r) for r in range(n, 0, -1)]
    walk += [("U", c) for c in range(n, 0, -1)]
    return walk


def boundary_stubs(n: int) -> dict[tuple[str, int], bool]:
    """Occupancy of each external stub under the alternating convention."""
    return {
        stub: (k % 2 == 0) for k, stub in enumerate(_boundary_walk(n))
    }


def boundary_labels(n: int) -> dict[tuple[str, int], int]:
    """Labels 1..2n of the occupied stubs, counterclockwise."""
    labels = {}
    nxt = 1
    for k, stub in enumerate(_boundary_walk(n)):
        if k % 2 == 0:
            labels[stub] = nxt
            nxt += 1
    return labels


def enumerate_fpl(n: int) -> Iterator[FplConfig]:
    """All degree-2 configurations, streamed in a fixed deterministic order.

    Vertices are scanned in raster order; at each one the undecided edges
    (right and down) are forced or branched to make the degree exactly 2.
    """
    if n < 1:
        raise ValueError("n must be positive")
    ext = boundary_stubs(n)
    horiz = [[False] * (n - 1) for _ in range(n)]
    vert = [[False] * n for _ in range(n - 1)]

    def snapshot() -> FplConfig:
        return FplConfig(
            n=n,
            horiz=tuple(tuple(row) for row in horiz),
            vert=tuple(tuple(row) for row in vert),
        )

    def rec(pos: int) -> Iterator[FplConfig]:
        if pos == n * n:
            yield snapshot()
            return
        r, c = divmod(pos, n)  # 0-based vertex
        have = 0
        have += vert[r - 1][c] if r > 0 else ext["U", c + 1]
        have += horiz[r][c - 1] if c > 0 else ext["L", r + 1]
        fixed_right = c == n - 1
        fixed_down = r == n - 1
        if fixed_right:
            have += ext["R", r + 1]
        if fixed_down:
            have += ext["D", c + 1]
        need = 2 - have
        free = (not fixed_right) + (not fixed_down)
        if need < 0 or need > free:
            return
        choices: list[tuple[bool, bool]]
        if free == 0:
            choices = [(False, False)] if need == 0 else []
        elif free == 1:
            choices = [(need == 1, need == 1)]
        else:
            choices = {
                0: [(False, False)],
                1: [(True, False), (False, True)],
                2: [(True, True)],
            }[need]
        for want_right, want_down in choices:
            if not fixed_right:
                horiz[r][c] = want_right
            if not fixed_down:
                vert[r][c] = want_down
            yield from rec(pos + 1)
        if not fixed_right:
            horiz[r][c] = False
        if not fixed_down:
            vert[r][c] = False

    yield from rec(0)


def link_pattern(config: FplConfig) -> Matching:
    """Trace the open paths of a configuration into a matching of the
    labeled boundary stubs."""
    n = config.n
    ext = boundary_stubs(n)
    labels = boundary_labels(n)

    def occupied(r: int, c: int, slot: str) -> bool:
        if slot == "U":
            return config.vert[r - 2][c - 1] if r > 1 else ext["U", c]
        if slot == "D":
            return config.vert[r - 1][c - 1] if r < n else ext["D", c]
        if slot == "L":
            return config.horiz[r - 1][c - 2] if c > 1 else ext["L", r]
        return config.horiz[r - 1][c - 1] if c < n else ext["R", r]

    def stub_vertex(stub: tuple[str, int]) -> tuple[int, int, str]:
        side, k = stub
        if side == "L":
            return k, 1, "L"
        if side == "R":
            return k, n, "R"
        if side == "U":
            return 1, k, "U"
        return n, k, "D"

    step = {"U": (-1, 0), "D": (1, 0), "L": (0, -1), "R": (0, 1)}
    enter_from = {"U": "D", "D": "U", "L": "R", "R": "L"}

    arches = []
    seen: set[tuple[str, int]] = set()
    for stub, lab in labels.items():
        if stub in seen:
            continue
        seen.add(stub)
        r, c, came = stub_vertex(stub)
        while True:
            out = next(
                s for s in ("U", "D", "L", "R") if s != came and occupied(r, c, s)
            )
            dr, dc = step[out]
            nr, nc = r + dr, c + dc
            if not (1 <= nr <= n and 1 <= nc <= n):
                end = {
                    "U": ("U", c),
                    "D": ("D", c),
                    "L": ("L", r),
                    "R": ("R", r),
                }[out]
                seen.add(end)
                arches.append((lab, labels[end]))
                break
            r, c, came = nr, nc, enter_from[out]
    return Matching.from_arches(arches)


def fpl_census(n: int) -> FplCensus:
    counts: dict[Matching, int] = {}
    for config in enumerate_fpl(n):
        pi = link_pattern(config)
        counts[pi] = counts.get(pi, 0) + 1
    return FplCensus(n=n, counts=counts)

"""Noncrossing perfect matchings of 2n points and their Young diagrams.

A matching is stored canonically as a partner table on the 1-based points
1..2n.  Four interchangeable encodings are supported: the set of arches,
the balanced parenthesis word, the Dyck path implied by the word, and the
increasing sequence a_1 < ... < a_n of opening-parenthesis positions
(a_i <= 2i-1).  The Young diagram of a matching lives inside the staircase
(n-1, n-2, ..., 1); its box count d is the basic degree statistic used
throughout the package.

Everything here is immutable and side-effect free.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Iterator


class MatchingParseError(ValueError):
    """Base class for malformed matching input."""


class UnbalancedWordError(MatchingParseError):
    """Parenthesis word is not balanced (or not made of parentheses)."""


class InvalidSequenceError(MatchingParseError):
    """Sequence is not strictly increasing with a_i <= 2i-1 and a_1 = 1."""


class InvalidArchesError(MatchingParseError):
    """Arch list does not form a noncrossing perfect matching."""


class Matching:
    """A noncrossing perfect matching of the points 1..2n.

    Instances are immutable, hashable, and totally ordered by the
    lexicographic order on their a-sequences (the canonical order used
    for every matrix indexed by matchings).
    """

    __slots__ = ("n", "partner", "word", "sequence")

    def __init__(self, partner: tuple[int, ...]):
        # partner[0] is a padding slot so points are 1-based.
        n2 = len(partner) - 1
        if n2 % 2 != 0 or n2 == 0:
            raise InvalidArchesError(f"need an even number of points, got {n2}")
        self.n = n2 // 2
        self.partner = partner
        word = []
        for i in range(1, n2 + 1):
            j = partner[i]
            if not 1 <= j <= n2 or j == i or partner[j] != i:
                raise InvalidArchesError(f"point {i} is not properly paired")
            word.append("(" if i < j else ")")
        self.word = "".join(word)
        depth = 0
        seq = []
        for i, c in enumerate(word, start=1):
            depth += 1 if c == "(" else -1
            if depth < 0:
                raise InvalidArchesError("arches cross")
            if c == "(":
                seq.append(i)
        self.sequence = tuple(seq)
        # Crossing arches survive the depth check only by mispairing points,
        # so verify the stack pairing agrees with the partner table.
        stack: list[int] = []
        for i, c in enumerate(word, start=1):
            if c == "(":
                stack.append(i)
            else:
                if partner[i] != stack.pop():
                    raise InvalidArchesError("arches cross")

    # -- constructors ---------------------------------------------------

    @staticmethod
    def from_word(word: str) -> "Matching":
        if not word or any(c not in "()" for c in word):
            raise UnbalancedWordError(f"not a parenthesis word: {word!r}")
        if len(word) % 2 != 0:
            raise UnbalancedWordError(f"odd length word: {word!r}")
        partner = [0] * (len(word) + 1)
        stack: list[int] = []
        for i, c in enumerate(word, start=1):
            if c == "(":
                stack.append(i)
            else:
                if not stack:
                    raise UnbalancedWordError(f"unbalanced word: {word!r}")
                j = stack.pop()
                partner[i], partner[j] = j, i
        if stack:
            raise UnbalancedWordError(f"unbalanced word: {word!r}")
        return Matching(tuple(partner))

    @staticmethod
    def from_sequence(seq: Iterable[int]) -> "Matching":
        a = tuple(seq)
        n = len(a)
        if n == 0:
            raise InvalidSequenceError("empty sequence")
        for i, ai in enumerate(a, start=1):
            if ai > 2 * i - 1:
                raise InvalidSequenceError(f"a_{i} = {ai} exceeds {2 * i - 1}")
            if i > 1 and a[i - 2] >= ai:
                raise InvalidSequenceError("sequence not strictly increasing")
        if a[0] != 1:
            raise InvalidSequenceError("a_1 must be 1")
        opens = set(a)
        word = "".join("(" if i in opens else ")" for i in range(1, 2 * n + 1))
        return Matching.from_word(word)

    @staticmethod
    def from_arches(arches: Iterable[tuple[int, int]]) -> "Matching":
        pairs = [tuple(sorted(p)) for p in arches]
        if not pairs:
            raise InvalidArchesError("empty arch list")
        n2 = 2 * len(pairs)
        partner = [0] * (n2 + 1)
        for i, j in pairs:
            if not (1 <= i <= n2 and 1 <= j <= n2) or i == j:
                raise InvalidArchesError(f"arch ({i},{j}) out of range 1..{n2}")
            if partner[i] or partner[j]:
                raise InvalidArchesError(f"point reused in arch ({i},{j})")
            partner[i], partner[j] = j, i
        return Matching(tuple(partner))

    # -- representations ------------------------------------------------

    @property
    def arches(self) -> frozenset[tuple[int, int]]:
        return frozenset(
            (i, self.partner[i]) for i in range(1, 2 * self.n + 1) if i < self.partner[i]
        )

    def dyck_path(self) -> tuple[int, ...]:
        """Heights after each step; starts implicitly at 0, never negative."""
        heights = []
        h = 0
        for c in self.word:
            h += 1 if c == "(" else -1
            heights.append(h)
        return tuple(heights)

    def render(self, style: str = "word") -> str:
        if style == "word":
            return self.word
        if style == "a":
            return "a:" + ",".join(str(x) for x in self.sequence)
        if style == "m":
            return "m:" + ";".join(f"{i}-{j}" for i, j in sorted(self.arches))
        raise ValueError(f"unknown style {style!r}")

    def __repr__(self) -> str:
        return f"Matching({self.word!r})"

    def __str__(self) -> str:
        return self.word

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Matching) and self.word == other.word

    def __hash__(self) -> int:
        return hash(self.word)

    def __lt__(self, other: "Matching") -> bool:
        if self.n != other.n:
            return self.n < other.n
        return self.sequence < other.sequence

    def __le__(self, other: "Matching") -> bool:
        return self == other or self < other


@dataclass(frozen=True)
class YoungDiagram:
    """Left-justified rows of boxes, weakly decreasing, no trailing zeros.

    Boxes are addressed (x, y) with x the 1-based row from the top and y
    the 1-based column from the left.
    """

    rows: tuple[int, ...]

    def __post_init__(self):
        for i in range(len(self.rows) - 1):
            if self.rows[i] < self.rows[i + 1]:
                raise ValueError(f"rows not weakly decreasing: {self.rows}")
        if self.rows and self.rows[-1] == 0:
            raise ValueError("trailing zero row")
        if any(r < 0 for r in self.rows):
            raise ValueError("negative row length")

    @property
    def d(self) -> int:
        return sum(self.rows)

    def __contains__(self, box: tuple[int, int]) -> bool:
        x, y = box
        return 1 <= x <= len(self.rows) and 1 <= y <= self.rows[x - 1]

    def boxes(self) -> Iterator[tuple[int, int]]:
        for x, r in enumerate(self.rows, start=1):
            for y in range(1, r + 1):
                yield (x, y)

    def transpose(self) -> "YoungDiagram":
        if not self.rows:
            return self
        cols = tuple(
            sum(1 for r in self.rows if r >= j) for j in range(1, self.rows[0] + 1)
        )
        return YoungDiagram(cols)

    def arm(self, x: int, y: int) -> int:
        return self.rows[x - 1] - y

    def leg(self, x: int, y: int) -> int:
        return sum(1 for r in self.rows[x:] if r >= y)

    def hook(self, x: int, y: int) -> int:
        return self.arm(x, y) + self.leg(x, y) + 1

    def content(self, x: int, y: int) -> int:
        return y - x

    def hook_product(self) -> int:
        return reduce(lambda acc, b: acc * self.hook(*b), self.boxes(), 1)

    def corners(self) -> list[tuple[int, int]]:
        """Boxes with nothing below and nothing to the right."""
        out = []
        for x, r in enumerate(self.rows, start=1):
            if r > 0 and (x == len(self.rows) or self.rows[x] < r):
                out.append((x, r))
        return out

    def remove_box(self, box: tuple[int, int]) -> "YoungDiagram":
        if box not in self.corners():
            raise ValueError(f"{box} is not a corner of {self.rows}")
        x, _ = box
        rows = list(self.rows)
        rows[x - 1] -= 1
        while rows and rows[-1] == 0:
            rows.pop()
        return YoungDiagram(tuple(rows))

    def rim(self) -> list[tuple[int, int]]:
        """Boxes (x, y) of the southeast boundary: (x+1, y+1) is outside."""
        return [b for b in self.boxes() if (b[0] + 1, b[1] + 1) not in self]

    def remove_rim(self) -> "YoungDiagram":
        rows = tuple(r - 1 for r in self.rows[1:] if r - 1 > 0)
        return YoungDiagram(rows)

    def rim_decomposition(self) -> list[list[tuple[int, int]]]:
        """Successive rims, outermost first; their union is every box."""
        rims = []
        cur = self
        while cur.rows:
            rims.append(cur.rim())
            cur = cur.remove_rim()
        return rims

    def fits_in_staircase(self, n: int) -> bool:
        return all(r <= n - x for x, r in enumerate(self.rows, start=1))


@dataclass(frozen=True)
class DiagramStats:
    hooks: dict[tuple[int, int], int]
    contents: dict[tuple[int, int], int]
    H: int
    corners: list[tuple[int, int]]
    rims: list[list[tuple[int, int]]]


def diagram_stats(Y: YoungDiagram) -> DiagramStats:
    hooks = {b: Y.hook(*b) for b in Y.boxes()}
    contents = {b: Y.content(*b) for b in Y.boxes()}
    return DiagramStats(
        hooks=hooks,
        contents=contents,
        H=Y.hook_product(),
        corners=Y.corners(),
        rims=Y.rim_decomposition(),
    )


# -- parsing -------------------------------------------------------------


def parse_matching(text: str) -> Matching:
    """Parse a parenthesis word, an ``a:``-prefixed sequence, or an
    ``m:``-prefixed arch list.  Whitespace is ignored everywhere."""
    s = "".join(text.split())
    if s.startswith("a:"):
        try:
            seq = [int(x) for x in s[2:].split(",")]
        except ValueError as exc:
            raise InvalidSequenceError(f"bad sequence syntax: {text!r}") from exc
        return Matching.from_sequence(seq)
    if s.startswith("m:"):
        arches = []
        for part in s[2:].split(";"):
            bits = part.split("-")
            if len(bits) != 2:
                raise InvalidArchesError(f"bad arch syntax: {part!r}")
            try:
                arches.append((int(bits[0]), int(bits[1])))
            except ValueError as exc:
                raise InvalidArchesError(f"bad arch syntax: {part!r}") from exc
        return Matching.from_arches(arches)
    return Matching.from_word(s)


# -- structural operations ------------------------------------------------


def young_of(pi: Matching) -> YoungDiagram:
    """Young diagram of a matching: row lengths a_i - i in decreasing order."""
    rows = sorted((a - i for i, a in enumerate(pi.sequence, start=1)), reverse=True)
    return YoungDiagram(tuple(r for r in rows if r > 0))


def d_of(pi: Matching) -> int:
    return sum(a - i for i, a in enumerate(pi.sequence, start=1))


def conjugate(pi: Matching) -> Matching:
    """Mirror image: {i,j} is an arch iff {2n+1-j, 2n+1-i} is one in pi."""
    swapped = {"(": ")", ")": "("}
    return Matching.from_word("".join(swapped[c] for c in reversed(pi.word)))


def rotate(pi: Matching) -> Matching:
    """One-step rotation: i,j linked in the result iff i+1,j+1 linked in pi."""
    n2 = 2 * pi.n

    def shift(x: int) -> int:
        return n2 if x == 1 else x - 1

    return Matching.from_arches(
        (shift(i), shift(j)) for i, j in pi.arches
    )


def nest(pi: Matching, p: int) -> Matching:
    """Surround pi with p nested arches; sequence becomes {1..p} + (p + a)."""
    if p < 0:
        raise ValueError("p must be nonnegative")
    if p == 0:
        return pi
    seq = tuple(range(1, p + 1)) + tuple(a + p for a in pi.sequence)
    return Matching.from_sequence(seq)


def compose(alpha: Matching, beta: Matching) -> Matching:
    """The matching whose outer p points on each side form alpha and whose
    middle 2|beta| points form beta, p = |alpha|."""
    p = alpha.n
    m = beta.n
    shift_in = 2 * m

    def relab(x: int) -> int:
        return x if x <= p else x + shift_in

    arches = [(relab(i), relab(j)) for i, j in alpha.arches]
    arches += [(i + p, j + p) for i, j in beta.arches]
    return Matching.from_arches(arches)


def leq(sigma: Matching, pi: Matching) -> bool:
    """Partial order: Y(sigma) contained in Y(pi), i.e. a_i(sigma) <= a_i(pi)."""
    if sigma.n != pi.n:
        raise ValueError(f"size mismatch: {sigma.n} vs {pi.n}")
    return all(s <= p for s, p in zip(sigma.sequence, pi.sequence))


def enumerate_matchings(n: int) -> list[Matching]:
    """All matchings of size n in lexicographic order of their a-sequences."""
    if n < 1:
        raise ValueError("n must be positive")
    out: list[Matching] = []
    seq = [0] * n

    def rec(i: int) -> None:
        if i == n:
            out.append(Matching.from_sequence(seq))
            return
        lo = seq[i - 1] + 1 if i > 0 else 1
        for a in range(lo, 2 * i + 2):  # a_{i+1} <= 2(i+1) - 1
            seq[i] = a
            rec(i + 1)

    rec(0)
    return out


def catalan(n: int) -> int:
    c = 1
    for i in range(n):
        c = c * 2 * (2 * i + 1) // (i + 2)
    return c


def fully_nested(n: int) -> Matching:
    """The minimal matching ()_n = ((( ... )))."""
    return Matching.from_sequence(range(1, n + 1))


def side_by_side(n: int) -> Matching:
    """The maximal matching ()()...() of n adjacent arches."""
    return Matching.from_sequence(range(1, 2 * n, 2))

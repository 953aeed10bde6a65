"""Conjectured root multiplicities m_p of a matching, two equivalent ways.

``m_rule_a`` counts arches that separate the first/last p points from the
middle; ``m_rule_b`` reads multiplicities off the rim decomposition of the
Young diagram with boxes labeled n+1-x-y.  The two always agree; ``m``
computes both and insists on it.

m_p is defined for 1 <= p <= n-1 and is 0 outside that range.
"""

from __future__ import annotations

from collections import Counter

from .matchings import Matching, YoungDiagram, compose, d_of, young_of


class MultiplicityVector:
    """m_1 .. m_{n-1} for a size-n matching; zero outside the stored range."""

    __slots__ = ("n", "m")

    def __init__(self, n: int, m: tuple[int, ...]):
        assert len(m) == max(n - 1, 0)
        self.n = n
        self.m = m

    def __getitem__(self, p: int) -> int:
        if 1 <= p <= self.n - 1:
            return self.m[p - 1]
        return 0

    def __eq__(self, other: object) -> bool:
        return isinstance(other, MultiplicityVector) and (self.n, self.m) == (
            other.n,
            other.m,
        )

    def __hash__(self) -> int:
        return hash((self.n, self.m))

    def __repr__(self) -> str:
        return f"MultiplicityVector({self.n}, {self.m})"

    def total(self) -> int:
        return sum(self.m)

    def as_multiset(self) -> Counter:
        return Counter({p: mult for p, mult in enumerate(self.m, start=1) if mult})

    def to_json(self) -> list[int]:
        return list(self.m)


def m_rule_a(pi: Matching) -> MultiplicityVector:
    """Half the number of arches linking {1..p} or {p^..2n} to the middle,
    where p^ = 2n+1-p."""
    n = pi.n
    n2 = 2 * n
    vals = []
    for p in range(1, n):
        phat = n2 + 1 - p
        left = sum(
            1 for a1, a2 in pi.arches if a1 <= p and p < a2 < phat
        )
        right = sum(
            1 for a1, a2 in pi.arches if p < a1 < phat and a2 >= phat
        )
        assert (left + right) % 2 == 0, (
            f"odd separating-arch count for {pi} at p={p}; matching invariant broken"
        )
        vals.append((left + right) // 2)
    return MultiplicityVector(n, tuple(vals))


def rim_label_multiset(Y: YoungDiagram, n: int) -> Counter:
    """Label multiset of the outermost rim of Y inside size n.

    Boxes carry the label n+1-x-y.  With i the bottom-left label, j the
    top-right label and k the minimal label on the rim, the multiset is
    {k} + {i, i-1, ..., k+1} + {j, j-1, ..., k+1}.
    """
    rim = Y.rim()
    labels = {b: n + 1 - b[0] - b[1] for b in rim}
    bottom_left = (len(Y.rows), 1)
    top_right = (1, Y.rows[0])
    i = labels[bottom_left]
    j = labels[top_right]
    k = min(labels.values())
    out = Counter({k: 1})
    out.update(range(k + 1, i + 1))
    out.update(range(k + 1, j + 1))
    return out


def m_rule_b(pi: Matching) -> MultiplicityVector:
    """Multiplicities read off the rim decomposition of Y(pi)."""
    n = pi.n
    Y = young_of(pi)
    bag: Counter = Counter()
    while Y.rows:
        bag += rim_label_multiset(Y, n)
        Y = Y.remove_rim()
    return MultiplicityVector(n, tuple(bag.get(p, 0) for p in range(1, n)))


def m(pi: Matching) -> MultiplicityVector:
    """The common value of the two rules; disagreement is a hard failure."""
    va = m_rule_a(pi)
    vb = m_rule_b(pi)
    if va != vb:
        raise AssertionError(
            f"multiplicity rules disagree on {pi}: A={va.m} B={vb.m}"
        )
    return va


def remove_rim(pi: Matching) -> tuple[Matching, Counter]:
    """Peel the outermost rim of Y(pi) off the matching.

    On the word this replaces the leftmost ')' by '(' and the rightmost
    '(' by ')'.  Returns the smaller matching and the removed rim's label
    multiset.
    """
    if d_of(pi) == 0:
        raise ValueError(f"{pi} has an empty diagram; no rim to remove")
    word = list(pi.word)
    word[pi.word.index(")")] = "("
    word[pi.word.rindex("(")] = ")"
    labels = rim_label_multiset(young_of(pi), pi.n)
    return Matching.from_word("".join(word)), labels


def decompose_at(pi: Matching, p: int) -> tuple[Matching, Matching] | None:
    """Split pi into outer/inner parts at cut p, if no arch separates them.

    Returns (alpha, beta) with compose(alpha, beta) == pi when m_p(pi) = 0,
    and None otherwise.
    """
    n = pi.n
    if not 1 <= p <= n - 1:
        raise ValueError(f"p={p} out of range 1..{n - 1}")
    n2 = 2 * n
    phat = n2 + 1 - p
    outer = []
    inner = []
    for a1, a2 in pi.arches:
        out1, out2 = a1 <= p or a1 >= phat, a2 <= p or a2 >= phat
        if out1 != out2:
            return None  # a separating arch: m_p(pi) > 0
        if out1:
            outer.append((a1, a2))
        else:
            inner.append((a1, a2))

    def relab_outer(x: int) -> int:
        return x if x <= p else x - 2 * (n - p)

    alpha = Matching.from_arches(
        (relab_outer(a1), relab_outer(a2)) for a1, a2 in outer
    )
    beta = Matching.from_arches((a1 - p, a2 - p) for a1, a2 in inner)
    assert compose(alpha, beta) == pi
    return alpha, beta

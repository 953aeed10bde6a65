"""Exact polynomial kernel: rational polynomials in one and two variables,
Lagrange interpolation, Sturm root counting, and integer-root extraction.

No floating point appears anywhere; every coefficient is a Fraction and
every division is exact or an error.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence

Rat = Fraction

NEG_INF = float("-inf")


def _rat(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


class RatPoly:
    """Dense univariate polynomial over the rationals, ascending coefficients.

    The zero polynomial has an empty coefficient list and degree -inf.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_rat(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @staticmethod
    def const(c) -> "RatPoly":
        return RatPoly([c])

    @staticmethod
    def x() -> "RatPoly":
        return RatPoly([0, 1])

    @staticmethod
    def from_roots(roots: Iterable) -> "RatPoly":
        p = RatPoly([1])
        for r in roots:
            p = p * RatPoly([-_rat(r), 1])
        return p

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Fraction:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, RatPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == RatPoly([other])
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other) -> "RatPoly":
        o = other if isinstance(other, RatPoly) else RatPoly([other])
        n = max(len(self.coeffs), len(o.coeffs))
        return RatPoly(
            [self[k] + o[k] for k in range(n)]
        )

    __radd__ = __add__

    def __neg__(self) -> "RatPoly":
        return RatPoly([-c for c in self.coeffs])

    def __sub__(self, other) -> "RatPoly":
        return self + (-other if isinstance(other, RatPoly) else RatPoly([-_rat(other)]))

    def __rsub__(self, other) -> "RatPoly":
        return -(self - other)

    def __mul__(self, other) -> "RatPoly":
        if isinstance(other, (int, Fraction)):
            return RatPoly([c * other for c in self.coeffs])
        if not isinstance(other, RatPoly):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return RatPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return RatPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "RatPoly":
        assert k >= 0
        out = RatPoly([1])
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def divmod(self, other: "RatPoly") -> tuple["RatPoly", "RatPoly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dv = other.coeffs
        dd = len(dv) - 1
        lead = dv[-1]
        q = [Fraction(0)] * max(len(rem) - dd, 0)
        for k in range(len(rem) - 1, dd - 1, -1):
            c = rem[k] / lead
            if c:
                q[k - dd] = c
                for j in range(dd + 1):
                    rem[k - dd + j] -= c * dv[j]
        return RatPoly(q), RatPoly(rem[:dd] if dd else [])

    def exact_div(self, other: "RatPoly") -> "RatPoly":
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ValueError(f"inexact polynomial division: remainder {r}")
        return q

    def __call__(self, x):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "RatPoly":
        return RatPoly([k * c for k, c in enumerate(self.coeffs)][1:])

    def shift_arg(self, c) -> "RatPoly":
        """p(t) -> p(t + c), exactly."""
        c = _rat(c)
        out = RatPoly()
        base = RatPoly([c, 1])
        pw = RatPoly([1])
        for a in self.coeffs:
            out = out + pw * a
            pw = pw * base
        return out

    def content_scaled_integer(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def __repr__(self) -> str:
        if self.is_zero():
            return "RatPoly(0)"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c:
                parts.append(f"{c}*t^{k}" if k else f"{c}")
        return "RatPoly(" + " + ".join(parts) + ")"

    def to_json(self) -> dict:
        return {"var": "t", "coeffs": [str(c) for c in self.coeffs]}

    @staticmethod
    def from_json(obj: dict) -> "RatPoly":
        return RatPoly([Fraction(s) for s in obj["coeffs"]])


def interpolate(points: Sequence[tuple]) -> RatPoly:
    """Unique polynomial of degree < len(points) through the given points,
    by Newton divided differences over exact rationals."""
    xs = [_rat(x) for x, _ in points]
    ys = [_rat(y) for _, y in points]
    if len(set(xs)) != len(xs):
        raise ValueError("duplicate abscissa in interpolation nodes")
    n = len(points)
    coef = ys[:]
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    out = RatPoly()
    basis = RatPoly([1])
    for j in range(n):
        out = out + basis * coef[j]
        basis = basis * RatPoly([-xs[j], 1])
    return out


def binom_poly(k: int, shift: int = 0) -> RatPoly:
    """Binomial coefficient C(t + shift, k) as a polynomial in t.

    Zero polynomial for k < 0, matching the convention needed at negative
    integer arguments.
    """
    if k < 0:
        return RatPoly()
    p = RatPoly([1])
    for i in range(k):
        p = p * RatPoly([Fraction(shift - i), 1])
    return p * Fraction(1, math.factorial(k))


def binom_value(x, k: int) -> Fraction:
    if k < 0:
        return Fraction(0)
    x = _rat(x)
    num = Fraction(1)
    for i in range(k):
        num *= x - i
    return num / math.factorial(k)


def binomial_basis_coeffs(p: RatPoly) -> list[Fraction]:
    """Coefficients c_0..c_d of p in the basis C(t+d-i, d), i = 0..d.

    The change of basis is triangular in the values p(0), p(1), ..., p(d):
    C(j+d-i, d) vanishes for j < i.
    """
    if p.is_zero():
        return []
    d = int(p.degree)
    cs: list[Fraction] = []
    for j in range(d + 1):
        acc = p(Fraction(j))
        for i in range(j):
            acc -= cs[i] * binom_value(j + d - i, d)
        cs.append(acc)  # C(j+d-j, d) = C(d, d) = 1
    return cs


# -- Sturm sequences ------------------------------------------------------


def _sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)


def _poly_gcd(a: RatPoly, b: RatPoly) -> RatPoly:
    while not b.is_zero():
        a, b = b, a.divmod(b)[1]
        if not b.is_zero():
            b = b * (1 / b.leading)  # keep coefficients small
    return a


def squarefree_part(p: RatPoly) -> RatPoly:
    if p.is_zero() or p.degree == 0:
        return p
    g = _poly_gcd(p, p.derivative())
    if g.degree <= 0:
        return p
    return p.exact_div(g * (1 / g.leading) if g.leading != 1 else g)


def _sturm_chain(p: RatPoly) -> list[RatPoly]:
    chain = [p, p.derivative()]
    while not chain[-1].is_zero() and chain[-1].degree > 0:
        rem = chain[-2].divmod(chain[-1])[1]
        if rem.is_zero():
            break
        chain.append(-rem)
    return [c for c in chain if not c.is_zero()]

def _sign_at(p: RatPoly, x) -> int:
    if p.is_zero():
        return 0
    if x == NEG_INF:
        s = _sign(p.leading)
        return s if int(p.degree) % 2 == 0 else -s
    if x == float("inf"):
        return _sign(p.leading)
    return _sign(p(_rat(x)))


def _sign_changes(chain: list[RatPoly], x) -> int:
    signs = [s for s in (_sign_at(c, x) for c in chain) if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def sturm_real_roots(p: RatPoly, a=None, b=None) -> int:
    """Exact number of distinct real roots of p in the interval (a, b].

    ``a=None`` means -infinity and ``b=None`` means +infinity.  The
    polynomial is replaced by its squarefree part internally, so
    multiplicities are not counted.
    """
    if p.is_zero():
        raise ValueError("root counting on the zero polynomial")
    if p.degree == 0:
        return 0
    sf = squarefree_part(p)
    if sf.degree == 0:
        return 0
    chain = _sturm_chain(sf)
    lo = NEG_INF if a is None else _rat(a)
    hi = float("inf") if b is None else _rat(b)
    return _sign_changes(chain, lo) - _sign_changes(chain, hi)


# -- bivariate polynomials -------------------------------------------------


class TauTPoly:
    """Polynomial in two variables (tau, t) with rational coefficients,
    stored sparsely as {(i, j): coeff of tau^i t^j}."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict | None = None):
        self.terms = {}
        if terms:
            for k, v in terms.items():
                v = _rat(v)
                if v:
                    self.terms[(int(k[0]), int(k[1]))] = v

    @staticmethod
    def const(c) -> "TauTPoly":
        return TauTPoly({(0, 0): c})

    @staticmethod
    def from_t_poly(p: RatPoly, tau_power: int = 0) -> "TauTPoly":
        return TauTPoly({(tau_power, j): c for j, c in enumerate(p.coeffs)})

    @staticmethod
    def from_tau_poly(p: RatPoly) -> "TauTPoly":
        return TauTPoly({(i, 0): c for i, c in enumerate(p.coeffs)})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other: object) -> bool:
        if isinstance(other, TauTPoly):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == TauTPoly.const(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __add__(self, other) -> "TauTPoly":
        o = other if isinstance(other, TauTPoly) else TauTPoly.const(other)
        out = dict(self.terms)
        for k, v in o.terms.items():
            w = out.get(k, Fraction(0)) + v
            if w:
                out[k] = w
            else:
                out.pop(k, None)
        res = TauTPoly()
        res.terms = out
        return res

    __radd__ = __add__

    def __neg__(self) -> "TauTPoly":
        res = TauTPoly()
        res.terms = {k: -v for k, v in self.terms.items()}
        return res

    def __sub__(self, other) -> "TauTPoly":
        o = other if isinstance(other, TauTPoly) else TauTPoly.const(other)
        return self + (-o)

    def __mul__(self, other) -> "TauTPoly":
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return TauTPoly()
            res = TauTPoly()
            res.terms = {k: v * other for k, v in self.terms.items()}
            return res
        if not isinstance(other, TauTPoly):
            return NotImplemented
        out: dict = {}
        for (i1, j1), v1 in self.terms.items():
            for (i2, j2), v2 in other.terms.items():
                k = (i1 + i2, j1 + j2)
                w = out.get(k, Fraction(0)) + v1 * v2
                if w:
                    out[k] = w
                else:
                    out.pop(k, None)
        res = TauTPoly()
        res.terms = out
        return res

    __rmul__ = __mul__

    @property
    def degree_tau(self):
        return max((i for i, _ in self.terms), default=NEG_INF)

    @property
    def degree_t(self):
        return max((j for _, j in self.terms), default=NEG_INF)

    def coeff_of_tau(self, i: int) -> RatPoly:
        d = max((j for (ti, j) in self.terms if ti == i), default=-1)
        return RatPoly([self.terms.get((i, j), Fraction(0)) for j in range(d + 1)])

    def coeff_of_t(self, j: int) -> RatPoly:
        d = max((i for (i, tj) in self.terms if tj == j), default=-1)
        return RatPoly([self.terms.get((i, j), Fraction(0)) for i in range(d + 1)])

    def eval_tau(self, tau0) -> RatPoly:
        """Substitute a rational value for tau; polynomial in t remains."""
        tau0 = _rat(tau0)
        if self.is_zero():
            return RatPoly()
        out = [Fraction(0)] * (int(self.degree_t) + 1)
        for (i, j), v in self.terms.items():
            out[j] += v * tau0**i
        return RatPoly(out)

    def eval_t(self, t0) -> RatPoly:
        """Substitute a rational value for t; polynomial in tau remains."""
        t0 = _rat(t0)
        if self.is_zero():
            return RatPoly()
        out = [Fraction(0)] * (int(self.degree_tau) + 1)
        for (i, j), v in self.terms.items():
            out[i] += v * t0**j
        return RatPoly(out)

    def flip_tau(self) -> "TauTPoly":
        """tau -> -tau."""
        res = TauTPoly()
        res.terms = {k: (v if k[0] % 2 == 0 else -v) for k, v in self.terms.items()}
        return res

    def exact_div_t_linear(self, c) -> "TauTPoly":
        """Divide exactly by (t + c), c rational; synthetic division in t
        with tau-polynomial coefficients.  Raises on nonzero remainder."""
        c = _rat(c)
        if self.is_zero():
            return TauTPoly()
        dt = int(self.degree_t)
        cols = {j: self.coeff_of_t(j) for j in range(dt + 1)}
        out: dict = {}
        acc = RatPoly()
        for j in range(dt, 0, -1):
            acc = cols.get(j, RatPoly()) + acc
            for i, v in enumerate(acc.coeffs):  # quotient column t^{j-1}
                if v:
                    out[(i, j - 1)] = v
            acc = acc * (-c)
        rem = cols.get(0, RatPoly()) + acc
        if not rem.is_zero():
            raise ValueError(f"(t + {c}) does not divide exactly")
        res = TauTPoly()
        res.terms = out
        return res

    def __repr__(self) -> str:
        if self.is_zero():
            return "TauTPoly(0)"
        parts = [
            f"{v}*tau^{i}*t^{j}"
            for (i, j), v in sorted(self.terms.items())
        ]
        return "TauTPoly(" + " + ".join(parts) + ")"

    def to_json(self) -> dict:
        dtau = int(self.degree_tau) if not self.is_zero() else -1
        dt = int(self.degree_t) if not self.is_zero() else -1
        matrix = [
            [str(self.terms.get((i, j), Fraction(0))) for j in range(dt + 1)]
            for i in range(dtau + 1)
        ]
        return {"vars": ["tau", "t"], "coeffs": matrix}

    @staticmethod
    def from_json(obj: dict) -> "TauTPoly":
        terms = {}
        for i, row in enumerate(obj["coeffs"]):
            for j, s in enumerate(row):
                v = Fraction(s)
                if v:
                    terms[(i, j)] = v
        return TauTPoly(terms)

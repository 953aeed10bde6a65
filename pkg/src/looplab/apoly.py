"""The interpolation route to the loop polynomials A_pi(t).

A_pi(p) equals the groundstate component at pi under p extra nested
arches, and is a polynomial in p of degree d(pi) with leading coefficient
1/H_pi.  We interpolate it from the values p = 0..d and then check the
prediction at two further guard nodes, so a wrong groundstate value
surfaces as a hard failure instead of a silently wrong polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import cpl
from .exactalg import RatPoly, interpolate, sturm_real_roots
from .matchings import Matching, d_of, young_of


class PolynomialContractError(AssertionError):
    """Interpolated polynomial violates its known degree or leading term."""


def a_poly(
    pi: Matching,
    guards: int = 2,
    directory: str | None = None,
    practical_bound: int | None = None,
) -> RatPoly:
    """Exact polynomial through the nested-arch component counts of pi."""
    d = d_of(pi)
    values = [
        cpl.psi_of(pi, p, directory, practical_bound) for p in range(d + 1 + guards)
    ]
    poly = interpolate(list(enumerate(values[: d + 1])))
    if poly.degree != d:
        raise PolynomialContractError(
            f"degree {poly.degree} != {d} for {pi}"
        )
    H = young_of(pi).hook_product()
    if poly.leading != Fraction(1, H):
        raise PolynomialContractError(
            f"leading coefficient {poly.leading} != 1/{H} for {pi}"
        )
    for p in range(d + 1, d + 1 + guards):
        if poly(p) != values[p]:
            raise PolynomialContractError(
                f"guard node p={p} mismatch for {pi}: "
                f"interpolant gives {poly(p)}, groundstate gives {values[p]}"
            )
    return poly


def g_value(
    pi: Matching,
    directory: str | None = None,
    practical_bound: int | None = None,
) -> int:
    """The integer A_pi(-n) for n = |pi|."""
    val = a_poly(pi, directory=directory, practical_bound=practical_bound)(-pi.n)
    if val.denominator != 1:
        raise AssertionError(f"A_pi(-n) = {val} is not an integer for {pi}")
    return val.numerator


@dataclass
class RootReport:
    """Integer-root factorization of a polynomial over a root range 1..pmax.

    multiplicity[p] is the exact multiplicity of the root -p; residual is
    what remains after dividing those factors out, scaled by ``scale``;
    real_roots_residual counts its distinct real roots by Sturm chains.
    """

    multiplicity: dict[int, int]
    residual: RatPoly
    real_roots_residual: int
    integer_after_scaling: bool

    def to_json(self) -> dict:
        return {
            "multiplicity": {str(k): v for k, v in self.multiplicity.items()},
            "residual": self.residual.to_json(),
            "real_roots_residual": self.real_roots_residual,
            "integer_after_scaling": self.integer_after_scaling,
        }


def integer_root_report(poly: RatPoly, pmax: int, scale: int = 1) -> RootReport:
    """Extract (t+p) factors for p = 1..pmax by repeated exact division."""
    if poly.is_zero():
        raise ValueError("root report on the zero polynomial")
    mult: dict[int, int] = {}
    rest = poly
    for p in range(1, pmax + 1):
        k = 0
        while True:
            q, r = rest.divmod(RatPoly([p, 1]))
            if not r.is_zero():
                break
            rest = q
            k += 1
        if k:
            mult[p] = k
    residual = rest * scale
    count = sturm_real_roots(residual) if residual.degree >= 1 else 0
    return RootReport(
        multiplicity=mult,
        residual=residual,
        real_roots_residual=count,
        integer_after_scaling=residual.content_scaled_integer(),
    )

"""Radial special functions for harmonic analysis on balls in hyperbolic 3-space.

The degree-ell radial profile of a harmonic function on H^3 (regular at the
center, normalized so psi_ell(r) -> 1 as r -> infinity) is

    psi_ell(r) = Gamma(3/2) Gamma(ell+2) / Gamma(ell+3/2)
                 * tanh^ell(r/2) * 2F1(-1/2, ell; ell+3/2; tanh^2(r/2))

with psi_0 == 1 and the elementary special case

    psi_1(r) = coth(r) - r csch^2(r),     psi_1'(r) = 2 (r coth r - 1) / sinh^2 r.

The squared L^2 norm of the (unit-normalized) degree-ell gradient field over a
ball of radius r is

    N_ell(r) = int_0^r [ (psi_ell'(rho))^2 sinh^2(rho)
                         + ell(ell+1) psi_ell(rho)^2 ] d rho,

and the sharp constant in the pointwise gradient bound for harmonic functions
is nu(r) = 3 pi N_1(r), computed here from the expanded integrand

    nu(r) = 6 pi int_0^r [ coth^2 + 2 csch^2 - 6 rho coth csch^2
                           + rho^2 csch^2 (2 coth^2 + csch^2) ] d rho.

Because psi_ell Y is harmonic, Green's identity collapses N_ell to boundary
flux, N_ell(r) = psi_ell(r) psi_ell'(r) sinh^2(r), which yields the closed form

    nu(r) = 6 pi (coth r - r csch^2 r)(r coth r - 1)

shipped as nu_closed() and cross-checked against the quadrature definition.

Numerical notes.  The hypergeometric series converges like k^-3 tanh^(2k)(r/2),
fast for r <= 2 but uselessly slow near r = 10; for r >= 2 evaluation switches
to an exact elementary route: with x = coth r the radial ODE becomes
u'' = ell(ell+1)/(x^2-1) u, whose regular solution is (1-x^2) Q_ell'(x), and
log((x+1)/(x-1)) = 2r makes the Legendre Q_ell elementary.  That route
cancels catastrophically as r -> 0 (terms ~ r^-ell), so it is used only at
large r; conversely the raw hyperbolic expressions for psi_1, psi_1' and the
nu integrand lose ~2 log10(1/rho) digits to csch^2 cancellation as rho -> 0
and are replaced below TAYLOR_SWITCH by 5-term Taylor polynomials (exact
rational coefficients; error at the switch ~ 4e-12 relative, while the raw
forms are still good to ~3e-13 there, so both sides of the switch stay well
inside the 1e-10 cross-check tolerances).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

from scipy.integrate import quad

__all__ = [
    "RadialMode",
    "TAYLOR_SWITCH",
    "dpsi",
    "mode_norm",
    "mode_norm_flux",
    "nu",
    "nu_closed",
    "nu_integrand",
    "psi",
    "psi_series",
    "dpsi_series",
]

# Exact Taylor coefficients (sympy-derived, frozen).  psi_1 on odd powers
# r, r^3, ..., r^9; its derivative on even powers 1, r^2, ..., r^8; the
# 6pi-normalized nu integrand on rho^2, ..., rho^10.
_PSI1_TAYLOR = (2 / 3, -4 / 45, 4 / 315, -8 / 4725, 4 / 18711, -5528 / 212837625)
_DPSI1_TAYLOR = (2 / 3, -4 / 15, 4 / 63, -8 / 675, 4 / 2079, -5528 / 19348875)
_NU_INTEGRAND_TAYLOR = (2 / 3, -2 / 9, 4 / 75, -2 / 189, 2764 / 1488375, -4 / 13365)

#: Radius below which the small-r Taylor branches replace the raw hyperbolic
#: expressions (see module docstring for the error budget).
TAYLOR_SWITCH = 0.15

# Crossover from the hypergeometric series to the Legendre route; the series
# needs ~60 terms here, the Legendre route has no cancellation this far out.
_SERIES_MAX_R = 2.0

_QUAD_OPTS = dict(epsabs=1e-12, epsrel=1e-10, limit=200)


def _require_nonneg(r: float) -> None:
    if r < 0:
        raise ValueError(f"radius must be nonnegative, got {r}")


def psi_series(ell: int, r: float, max_terms: int = 500) -> float:
    """Gamma-prefactored tanh^ell(r/2) * 2F1 series for psi_ell.

    Terms are generated by ratio recursion and summed until the next term
    drops below 1e-16 of the partial sum, capped at max_terms.  The cap is
    generous for r <= 2 (geometric ratio tanh^2(r/2) <= 0.58) and a genuine
    truncation for r >> 2; callers needing large radii go through psi(),
    which switches evaluation route instead of raising the cap.
    """
    if ell < 0:
        raise ValueError(f"mode index must be nonnegative, got {ell}")
    _require_nonneg(r)
    if ell == 0:
        return 1.0
    t = math.tanh(r / 2.0)
    x = t * t
    pref = math.gamma(1.5) * math.gamma(ell + 2) / math.gamma(ell + 1.5)
    a, b, c = -0.5, float(ell), ell + 1.5
    term = 1.0
    total = 1.0
    for k in range(max_terms):
        term *= (a + k) * (b + k) / ((c + k) * (1.0 + k)) * x
        total += term
        if abs(term) < 1e-16 * abs(total):
            break
    return pref * t**ell * total


def dpsi_series(ell: int, r: float, max_terms: int = 500) -> float:
    """Termwise derivative of psi_series (same recursion, same cap)."""
    if ell < 0:
        raise ValueError(f"mode index must be nonnegative, got {ell}")
    _require_nonneg(r)
    if ell == 0:
        return 0.0
    t = math.tanh(r / 2.0)
    x = t * t
    pref = math.gamma(1.5) * math.gamma(ell + 2) / math.gamma(ell + 1.5)
    if t == 0.0:
        # only the leading t^(ell-1) term survives, and only for ell = 1
        return 0.5 * pref if ell == 1 else 0.0
    dtdr = (1.0 - x) / 2.0
    a, b, c = -0.5, float(ell), ell + 1.5
    # d/dr [ t^ell sum_k c_k x^k ] = t^(ell-1) sum_k c_k (ell+2k) x^k * dt/dr;
    # coeff accumulates c_k x^k exactly as in psi_series.
    coeff = 1.0
    total = float(ell)
    for k in range(1, max_terms + 1):
        coeff *= (a + k - 1) * (b + k - 1) / ((c + k - 1) * k) * x
        term = coeff * (ell + 2 * k)
        total += term
        if abs(term) < 1e-16 * abs(total):
            break
    return pref * t ** (ell - 1) * total * dtdr


def _legendre_trio(ell: int, x: float) -> tuple[list, list, list]:
    """P_0..P_ell and first two derivatives at x, by the standard recurrences."""
    P = [1.0, x]
    dP = [0.0, 1.0]
    ddP = [0.0, 0.0]
    for n in range(1, ell + 1):
        P.append(((2 * n + 1) * x * P[n] - n * P[n - 1]) / (n + 1))
        dP.append(((2 * n + 1) * (P[n] + x * dP[n]) - n * dP[n - 1]) / (n + 1))
        ddP.append(((2 * n + 1) * (2 * dP[n] + x * ddP[n]) - n * ddP[n - 1]) / (n + 1))
    return P, dP, ddP


def _psi_large(ell: int, r: float) -> float:
    # psi_ell = P_ell(coth r) - csch^2 r (r P_ell'(coth r) - W'(coth r)),
    # W = sum_{k=1}^{ell} P_{k-1} P_{ell-k} / k  (the polynomial part of Q_ell).
    x = 1.0 / math.tanh(r)
    s = 1.0 / math.sinh(r) ** 2
    P, dP, _ = _legendre_trio(ell, x)
    Wp = sum((dP[k - 1] * P[ell - k] + P[k - 1] * dP[ell - k]) / k for k in range(1, ell + 1))
    return P[ell] - s * (r * dP[ell] - Wp)


def _dpsi_large(ell: int, r: float) -> float:
    x = 1.0 / math.tanh(r)
    s = 1.0 / math.sinh(r) ** 2
    P, dP, ddP = _legendre_trio(ell, x)
    Wp = sum((dP[k - 1] * P[ell - k] + P[k - 1] * dP[ell - k]) / k for k in range(1, ell + 1))
    Wpp = sum(
        (ddP[k - 1] * P[ell - k] + 2 * dP[k - 1] * dP[ell - k] + P[k - 1] * ddP[ell - k]) / k
        for k in range(1, ell + 1)
    )
    return -2 * s * dP[ell] + 2 * s * x * (r * dP[ell] - Wp) + s * s * (r * ddP[ell] - Wpp)


def _poly_eval_odd(coeffs, r: float) -> float:
    # sum coeffs[k] * r^(2k+1)
    r2 = r * r
    acc = 0.0
    for c in reversed(coeffs):
        acc = acc * r2 + c
    return acc * r


def _poly_eval_even(coeffs, r: float, lead_power: int) -> float:
    # sum coeffs[k] * r^(lead_power + 2k)
    r2 = r * r
    acc = 0.0
    for c in reversed(coeffs):
        acc = acc * r2 + c
    return acc * r**lead_power if lead_power else acc


def _psi1_closed(r: float) -> float:
    if r < TAYLOR_SWITCH:
        return _poly_eval_odd(_PSI1_TAYLOR, r)
    return 1.0 / math.tanh(r) - r / math.sinh(r) ** 2


def _dpsi1_closed(r: float) -> float:
    if r < TAYLOR_SWITCH:
        return _poly_eval_even(_DPSI1_TAYLOR, r, 0)
    return 2.0 * (r / math.tanh(r) - 1.0) / math.sinh(r) ** 2


def psi(ell: int, r: float) -> float:
    """psi_ell(r), with the evaluation route chosen for accuracy.

    ell = 0 is the constant 1; ell = 1 uses the elementary form (Taylor below
    TAYLOR_SWITCH); other ell use the series for r < 2 and the Legendre route
    beyond.  All routes agree to better than 1e-12 relative on their overlaps
    (asserted in the test suite).
    """
    if ell < 0:
        raise ValueError(f"mode index must be nonnegative, got {ell}")
    _require_nonneg(r)
    if ell == 0:
        return 1.0
    if ell == 1:
        return _psi1_closed(r)
    if r < _SERIES_MAX_R:
        return psi_series(ell, r)
    return _psi_large(ell, r)


def dpsi(ell: int, r: float) -> float:
    """d psi_ell / dr, same route selection as psi()."""
    if ell < 0:
        raise ValueError(f"mode index must be nonnegative, got {ell}")
    _require_nonneg(r)
    if ell == 0:
        return 0.0
    if ell == 1:
        return _dpsi1_closed(r)
    if r < _SERIES_MAX_R:
        return dpsi_series(ell, r)
    return _dpsi_large(ell, r)


@dataclass(frozen=True)
class RadialMode:
    """A radial mode index plus a pinned evaluation path.

    eval_path "series" forces the hypergeometric sum; "closed_form" is only
    available for ell in {0, 1} where an elementary expression exists.
    """

    ell: int
    eval_path: Literal["series", "closed_form"] = "series"

    def __post_init__(self):
        if self.ell < 0:
            raise ValueError(f"mode index must be nonnegative, got {self.ell}")
        if self.eval_path not in ("series", "closed_form"):
            raise ValueError(f"unknown eval_path {self.eval_path!r}")
        if self.eval_path == "closed_form" and self.ell not in (0, 1):
            raise ValueError("closed_form is only available for ell in {0, 1}")

    def psi(self, r: float) -> float:
        if self.eval_path == "series":
            return psi_series(self.ell, r)
        return 1.0 if self.ell == 0 else _psi1_closed(r)

    def dpsi(self, r: float) -> float:
        if self.eval_path == "series":
            return dpsi_series(self.ell, r)
        return 0.0 if self.ell == 0 else _dpsi1_closed(r)


def mode_norm(ell: int, r: float) -> float:
    """Squared L^2(B_r) norm N_ell(r) of the unit degree-ell gradient field.

    Adaptive quadrature of (psi')^2 sinh^2 + ell(ell+1) psi^2; this is the
    contractual definition.  mode_norm_flux is the independent closed form.
    """
    if ell < 1:
        raise ValueError("mode_norm needs ell >= 1; the ell = 0 field vanishes")
    if r <= 0:
        raise ValueError(f"radius must be positive, got {r}")
    ll1 = ell * (ell + 1)

    def integrand(rho: float) -> float:
        return dpsi(ell, rho) ** 2 * math.sinh(rho) ** 2 + ll1 * psi(ell, rho) ** 2

    val, _ = quad(integrand, 0.0, r, **_QUAD_OPTS)
    return val


def mode_norm_flux(ell: int, r: float) -> float:
    """N_ell(r) as boundary flux, psi_ell(r) psi_ell'(r) sinh^2(r).

    Equal to mode_norm by Green's identity (the degree-ell field is the
    differential of a harmonic function); kept as a separate route so the
    quadrature definition has an exact oracle.
    """
    if ell < 1:
        raise ValueError("mode_norm_flux needs ell >= 1")
    if r <= 0:
        raise ValueError(f"radius must be positive, got {r}")
    return psi(ell, r) * dpsi(ell, r) * math.sinh(r) ** 2


def nu_integrand(rho: float) -> float:
    """The 6pi-normalized integrand of nu (Taylor branch below TAYLOR_SWITCH)."""
    if rho < TAYLOR_SWITCH:
        return _poly_eval_even(_NU_INTEGRAND_TAYLOR, rho, 2)
    c = 1.0 / math.tanh(rho)
    s = 1.0 / math.sinh(rho) ** 2
    return c * c + 2.0 * s - 6.0 * rho * c * s + rho * rho * s * (2.0 * c * c + s)


def _nu_taylor_integral(r: float) -> float:
    # exact termwise integral of the Taylor integrand: sum c_k r^(2k+3)/(2k+3)
    coeffs = tuple(c / (2 * k + 3) for k, c in enumerate(_NU_INTEGRAND_TAYLOR))
    return _poly_eval_even(coeffs, r, 3)


def nu(r: float) -> float:
    """The sharp gradient-bound constant nu(r), by quadrature.

    nu(0) = 0; strictly increasing; ~ 4 pi r^3 / 3 as r -> 0 and
    ~ 6 pi r (with additive offset -6 pi) as r -> infinity.  The integral is
    split at TAYLOR_SWITCH: polynomial part integrated exactly, remainder by
    adaptive quadrature of the raw integrand, so no branch point sits inside
    the adaptive interval.
    """
    _require_nonneg(r)
    if r == 0.0:
        return 0.0
    if r <= TAYLOR_SWITCH:
        return 6.0 * math.pi * _nu_taylor_integral(r)
    head = _nu_taylor_integral(TAYLOR_SWITCH)
    tail, _ = quad(nu_integrand, TAYLOR_SWITCH, r, **_QUAD_OPTS)
    return 6.0 * math.pi * (head + tail)


def nu_closed(r: float) -> float:
    """Antiderivative form nu(r) = 6 pi (coth r - r csch^2 r)(r coth r - 1).

    Derived from the boundary-flux identity nu = 3 pi N_1; matches the
    quadrature definition to rel <= 1e-10 everywhere (asserted in tests).
    """
    _require_nonneg(r)
    if r < TAYLOR_SWITCH:
        return 6.0 * math.pi * _nu_taylor_integral(r)
    c = 1.0 / math.tanh(r)
    s = 1.0 / math.sinh(r) ** 2
    return 6.0 * math.pi * (c - r * s) * (r * c - 1.0)

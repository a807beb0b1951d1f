"""The inequality engine: sandwiches, sup-norm factors, and polytope duality.

Numeric bounds are plain records; empirically inconsistent inputs produce
flagged results rather than exceptions, because the same engine runs on model
data where a tripped flag is the interesting output.  Polytope norms are kept
in exact vertex form (rationals), so the duality checks below are limited only
by the LP/hull tolerances of the oracles, not by the representation.

The sup-norm factor has two regimes split at inj = mu/2 (default mu = 0.29,
which needs positive first Betti number): an embedded ball of radius inj for
large injectivity radius, and a degree-counted ball of radius mu/2 below it.
The two formulas do NOT meet at the switch: the small-inj branch is exactly
sqrt(2) larger there (it pays for covering multiplicity), and the factor is
therefore upper semicontinuous only.  Both branches stay below 5/sqrt(inj).
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import NamedTuple, Sequence

import numpy as np
from scipy.optimize import linprog
from scipy.spatial import ConvexHull, HalfspaceIntersection

from .radial import nu

__all__ = [
    "Bracket",
    "MainBounds",
    "NormDatum",
    "PolytopeNorm",
    "area_norm_bounds",
    "bsv_bounds",
    "bsv_witness",
    "degree_bound",
    "dual_norm",
    "inf_of_duals_check",
    "km_lower",
    "polytope_gauge",
    "split_lower_bound",
    "supnorm_factor",
    "thm_main_bounds",
]

MU_DEFAULT = 0.29


class Bracket(NamedTuple):
    lower: float
    upper: float


class MainBounds(NamedTuple):
    lower: float
    upper: float
    flagged: bool


@dataclass(frozen=True)
class NormDatum:
    """Geometric data of one manifold-and-class pair.

    harmonic is optional; when present (and check_consistency is left on) it
    must sit inside the two-sided comparison pi th/sqrt(vol) <= harmonic <=
    10 pi th/sqrt(inj) up to tol, the consistency gate for measured data.
    """

    vol: float
    inj: float
    thurston: float
    harmonic: float | None = None
    check_consistency: bool = True
    tol: float = 1e-9

    def __post_init__(self):
        if self.vol <= 0:
            raise ValueError(f"volume must be positive, got {self.vol}")
        if self.inj <= 0:
            raise ValueError(f"injectivity radius must be positive, got {self.inj}")
        if self.thurston < 0:
            raise ValueError(f"Thurston norm must be nonnegative, got {self.thurston}")
        if self.harmonic is not None:
            if self.harmonic < 0:
                raise ValueError(f"harmonic norm must be nonnegative, got {self.harmonic}")
            if self.check_consistency:
                lo = math.pi * self.thurston / math.sqrt(self.vol)
                hi = 10.0 * math.pi * self.thurston / math.sqrt(self.inj)
                if not lo * (1 - self.tol) <= self.harmonic <= hi * (1 + self.tol):
                    raise ValueError(
                        f"harmonic norm {self.harmonic} outside the sandwich "
                        f"[{lo}, {hi}] for this datum"
                    )


def thm_main_bounds(d: NormDatum) -> MainBounds:
    """Two-sided comparison pi th/sqrt(vol) <= ||phi|| <= 10 pi th/sqrt(inj).

    flagged signals lower > upper, which happens exactly when inj > 100 vol;
    no hyperbolic manifold does that, so a tripped flag means the input datum
    is not geometric.
    """
    if d.thurston <= 0:
        raise ValueError("thm_main_bounds needs a nonzero class (thurston > 0)")
    lower = math.pi * d.thurston / math.sqrt(d.vol)
    upper = 10.0 * math.pi * d.thurston / math.sqrt(d.inj)
    flagged = lower > upper
    if d.inj <= 100.0 * d.vol:
        assert not flagged
    return MainBounds(lower, upper, flagged)


def bsv_bounds(d: NormDatum, C1: float, C2: float) -> Bracket:
    """Cover-stable form: C1 th/vol <= ||phi|| <= C2 th with caller constants."""
    if C1 <= 0 or C2 <= 0:
        raise ValueError(f"constants must be positive, got C1={C1}, C2={C2}")
    return Bracket(C1 * d.thurston / d.vol, C2 * d.thurston)


def bsv_witness(d: NormDatum) -> tuple[float, float]:
    """Constants making bsv_bounds reproduce thm_main_bounds for this datum."""
    return math.pi * math.sqrt(d.vol), 10.0 * math.pi / math.sqrt(d.inj)


def supnorm_factor(inj: float, b1_positive: bool, mu: float | None = None) -> float:
    """Pointwise-over-L2 factor for harmonic 1-forms: |alpha| <= factor ||alpha||.

    mu = None selects the default thick-part constant 0.29, which is only
    available when b1_positive; in that case a False guard makes the bound
    vacuous (returns 0 and warns).  Passing mu explicitly (e.g. the
    unconditional 0.1) computes the same two-branch formula for that value,
    but the <= 5/sqrt(inj) contract is calibrated to the default only.
    """
    if inj <= 0:
        raise ValueError(f"injectivity radius must be positive, got {inj}")
    if mu is None:
        if not b1_positive:
            warnings.warn(
                "sup-norm factor is vacuous without positive first Betti number; "
                "pass mu=0.1 for the unconditional constant",
                RuntimeWarning,
                stacklevel=2,
            )
            return 0.0
        mu = MU_DEFAULT
    if mu <= 0:
        raise ValueError(f"thick-part constant must be positive, got {mu}")
    if inj >= mu / 2.0:
        return 1.0 / math.sqrt(nu(inj))
    return math.sqrt(mu / nu(mu / 2.0)) / math.sqrt(inj)


def degree_bound(mu: float, inj: float) -> float:
    """Max sheet count of a radius-mu/2 ball: mu/min(inj, mu/2), so always >= 2."""
    if mu <= 0 or inj <= 0:
        raise ValueError(f"need mu, inj > 0, got mu={mu}, inj={inj}")
    return mu / min(inj, mu / 2.0)


def area_norm_bounds(thurston: float) -> Bracket:
    """pi th <= ||phi||_A <= 2 pi th (the least-area sandwich)."""
    if thurston < 0:
        raise ValueError(f"Thurston norm must be nonnegative, got {thurston}")
    return Bracket(math.pi * thurston, 2.0 * math.pi * thurston)


def km_lower(vol: float, thurston: float) -> float:
    """Scalar-curvature lower bound 2 pi th/(3 sqrt(vol)); 2/3 of the main one."""
    if vol <= 0:
        raise ValueError(f"volume must be positive, got {vol}")
    if thurston < 0:
        raise ValueError(f"Thurston norm must be nonnegative, got {thurston}")
    return 2.0 * math.pi * thurston / (3.0 * math.sqrt(vol))


def split_lower_bound(piece_norms: Sequence[float]) -> float:
    """Sum of per-piece norms, a lower bound for the glued manifold's norm."""
    if len(piece_norms) == 0:
        raise ValueError("need at least one piece")
    if any(x < 0 for x in piece_norms):
        raise ValueError("piece norms must be nonnegative")
    return float(sum(piece_norms))


def _as_fraction_vector(v) -> tuple[Fraction, ...]:
    out = []
    for c in v:
        if isinstance(c, (Rational, int, str)):
            out.append(Fraction(c))
        elif isinstance(c, float):
            out.append(Fraction(c))  # exact binary value
        else:
            raise TypeError(f"vertex coordinate {c!r} is not rational-convertible")
    return tuple(out)


@dataclass(frozen=True)
class PolytopeNorm:
    """A polytope norm, stored as the exact vertex set of its unit ball.

    The vertex set must be centrally symmetric, span the space, and consist
    of genuine unit vectors of the induced gauge (no vertex strictly inside
    the hull of the others); all three are validated on construction.
    """

    vertices: tuple[tuple[Fraction, ...], ...]

    def __init__(self, vertices):
        vecs = tuple(_as_fraction_vector(v) for v in vertices)
        object.__setattr__(self, "vertices", vecs)
        if not vecs:
            raise ValueError("vertex list must be nonempty")
        dim = len(vecs[0])
        if any(len(v) != dim for v in vecs):
            raise ValueError("vertices must share one dimension")
        vset = set(vecs)
        for v in vecs:
            if tuple(-c for c in v) not in vset:
                raise ValueError(f"vertex set not centrally symmetric: missing -{v}")
        arr = self.float_vertices()
        if np.linalg.matrix_rank(arr) < dim:
            raise ValueError("vertices do not span the space")
        for i, v in enumerate(arr):
            g = _gauge_lp(arr, v)
            if abs(g - 1.0) > 1e-9:
                raise ValueError(
                    f"listed vertex {vecs[i]} has gauge {g}, not on the unit sphere"
                )

    @property
    def dim(self) -> int:
        return len(self.vertices[0])

    def float_vertices(self) -> np.ndarray:
        return np.array([[float(c) for c in v] for v in self.vertices], dtype=float)


def _gauge_lp(vertex_array: np.ndarray, x: np.ndarray) -> float:
    # gauge(x) = min sum(lam) s.t. V^T lam = x, lam >= 0
    n = vertex_array.shape[0]
    res = linprog(
        c=np.ones(n),
        A_eq=vertex_array.T,
        b_eq=np.asarray(x, dtype=float),
        bounds=(0.0, None),
        method="highs",
    )
    if not res.success:
        raise ValueError(f"gauge LP failed for x={x}: {res.message}")
    return float(res.fun)


def polytope_gauge(p: PolytopeNorm, x) -> float:
    """The norm of x under p (Minkowski gauge of the unit ball)."""
    x = np.asarray(x, dtype=float)
    if x.shape != (p.dim,):
        raise ValueError(f"vector of dimension {x.shape} against {p.dim}-dim norm")
    return _gauge_lp(p.float_vertices(), x)


def dual_norm(p: PolytopeNorm, psi) -> float:
    """sup over the unit ball of <psi, .>, attained at a vertex."""
    psi = np.asarray(psi, dtype=float)
    if psi.shape != (p.dim,):
        raise ValueError(f"vector of dimension {psi.shape} against {p.dim}-dim norm")
    return float(np.max(p.float_vertices() @ psi))


def _sup_ball_vertices(norms: Sequence[PolytopeNorm]) -> np.ndarray:
    # unit ball of sup_n x_n = intersection of the unit balls
    halfspaces = np.vstack([ConvexHull(p.float_vertices()).equations for p in norms])
    hs = HalfspaceIntersection(halfspaces, np.zeros(norms[0].dim))
    return hs.intersections


def inf_of_duals_check(
    norms: Sequence[PolytopeNorm], test_vectors: Sequence, rel_tol: float = 1e-9
) -> bool:
    """Does (sup_n x_n)* equal inf_n x_n* on the given test vectors?

    The left side is computed from the vertex description of the sup-norm
    unit ball (halfspace intersection of the family's balls).  The answer is
    reported honestly: the identity can genuinely fail pointwise (the inf of
    duals need not be convex), and False is a meaningful result, not an error.
    """
    if len(norms) == 0:
        raise ValueError("need at least one norm in the family")
    dim = norms[0].dim
    if any(p.dim != dim for p in norms):
        raise ValueError("all norms must share one dimension")
    if dim < 2:
        raise ValueError("halfspace machinery needs dimension >= 2")
    ball = _sup_ball_vertices(norms)
    for psi in test_vectors:
        psi = np.asarray(psi, dtype=float)
        if psi.shape != (dim,):
            raise ValueError(f"test vector of dimension {psi.shape} against {dim}")
        lhs = float(np.max(ball @ psi))
        rhs = min(dual_norm(p, psi) for p in norms)
        if abs(lhs - rhs) > rel_tol * max(abs(rhs), 1e-30):
            return False
    return True

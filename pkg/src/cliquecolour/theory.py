"""Asymptotic predictions for the clique chromatic number of G(n, p).

With p = n**(x-1), the predicted exponent of the clique chromatic number is
the step function f below: it climbs linearly to 1/2, drops to 1/4, climbs
again to 2/5 at x = 3/5, then decays as 1 - x.  The classifier maps (n, p)
to one of the regimes a..h (h is the dense regime, entered when p clears a
configurable constant threshold), evaluates the matching finite-n bound
formulas, and reports honestly when x falls inside the configurable band
around a breakpoint where the regimes trade places.

All logarithms are natural; bases other than e are expressed as ratios of
natural logs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import ParameterError

BREAKPOINTS = (0.5, 0.6, 2.0 / 3.0)


def f_exponent(x: float) -> float:
    """Predicted exponent of the clique chromatic number at p = n**(x-1).

    Piecewise on (0, 1): x below 1/2, then 1 + 3(x-1)/2, then 1 - x from
    x = 3/5 on.  Continuous at 3/5 (value 2/5); jumps from 1/2 down to 1/4
    at x = 1/2.
    """
    if not 0.0 < x < 1.0:
        raise ParameterError(f"x must be in (0, 1), got {x}")
    if x < 0.5:
        return x
    if x < 0.6:
        return 1.0 + 1.5 * (x - 1.0)
    return 1.0 - x


@dataclass(frozen=True)
class RegimeReport:
    """Classification of (n, p) with the matching finite-n bound values.

    ``label`` is one of a..h or "boundary" when x sits within delta of a
    breakpoint (the bands b, d, f are exactly those breakpoints idealized,
    so they are reported as labels only when delta = 0 hits them exactly).
    Bounds may be None when no finite-n formula is known on that side;
    ``notes`` records which formulas produced them and any honesty caveats.
    """

    label: str
    n: int
    p: float
    x: float | None
    lower_bound: float | None
    upper_bound: float | None
    exponent_prediction: float | None
    notes: tuple[str, ...] = field(default_factory=tuple)


def _value_sparse_sharp(n: int, p: float) -> float:
    pn = p * n
    return pn / (2.0 * math.log(pn))

def _value_mid(n: int, p: float) -> float:
    return p**1.5 * n / math.sqrt(math.log(n))


_GAP_NOTE = "only Omega(1/p) and O(ln n / p) are known here; the gap is open"
_DENSE_GAP_NOTE = "no nontrivial dense lower bound is known; upper bound only"


def classify_regime(
    n: int,
    p: float | None = None,
    x: float | None = None,
    delta: float = 0.02,
    eps_choice: float = 0.01,
    omega_choice: float | None = None,
) -> RegimeReport:
    """Classify (n, p) into a regime and evaluate its bound formulas.

    Exactly one of ``p`` and ``x`` must be given (p = n**(x-1)).  The dense
    test p >= eps_choice is applied first; otherwise x is matched against
    half-open intervals split at 1/2, 3/5, 2/3.  Within ``delta`` of a
    breakpoint the label is "boundary" and both neighbouring regimes'
    bounds are combined conservatively.  ``omega_choice`` (default
    ln ln n) is accepted for completeness; the idealized classification
    does not consume it.
    """
    if n < 3:
        raise ParameterError(f"n must be at least 3, got {n}")
    if (p is None) == (x is None):
        raise ParameterError("give exactly one of p or x")
    if p is None:
        if not 0.0 < x < 1.0:
            raise ParameterError(f"x must be in (0, 1), got {x}")
        p = float(n ** (x - 1.0))
    else:
        if not 0.0 < p < 1.0:
            raise ParameterError(f"p must be in (0, 1), got {p}")
        x = 1.0 + math.log(p) / math.log(n) if p * n > 1.0 else None
    if delta < 0.0:
        raise ParameterError("delta must be nonnegative")
    if omega_choice is None:
        omega_choice = math.log(math.log(n))

    fx = f_exponent(x) if x is not None and 0.0 < x < 1.0 else None

    if p >= eps_choice:
        upper = 0.5 * math.log(n) / -math.log1p(-p)
        return RegimeReport(
            "h", n, p, x, None, upper, fx,
            ("upper = (1/2) ln n / ln(1/(1-p))", _DENSE_GAP_NOTE),
        )

    if x is None or x <= 0.0:
        raise ParameterError(f"pn must exceed 1 to classify; got pn = {p * n}")

    distances = [abs(x - b) for b in BREAKPOINTS]
    nearest = min(range(3), key=lambda i: distances[i])
    if distances[nearest] <= delta:
        if delta == 0.0:
            # exactly on the idealized band
            if nearest == 0:
                return RegimeReport(
                    "b", n, p, x, _value_mid(n, p), _value_sparse_sharp(n, p), fx,
                    ("lower = p^{3/2} n / sqrt(ln n)", "upper = pn / (2 ln pn)"),
                )
            if nearest == 1:
                v = float(n) ** 0.4
                return RegimeReport(
                    "d", n, p, x, v, v, fx,
                    ("n^{2/5}; exponent-only, no finite-n constant is known",),
                )
            v = float(n) ** (1.0 / 3.0)
            return RegimeReport(
                "f", n, p, x, v, v, fx,
                ("n^{1/3}; exponent-only, no finite-n constant is known",),
            )
        if nearest == 0:
            lo, hi = sorted((_value_mid(n, p), _value_sparse_sharp(n, p)))
            notes = (
                "within delta of breakpoint 1/2, between regimes a and c",
                "lower = p^{3/2} n / sqrt(ln n)",
                "upper = pn / (2 ln pn)",
            )
        elif nearest == 1:
            vc = _value_mid(n, p)
            lo, hi = min(vc, 1.0 / p), max(vc, math.log(n) / p)
            notes = (
                "within delta of breakpoint 3/5, between regimes c and e",
                f"band value n^(2/5) = {float(n) ** 0.4:.6g}; exponent-only",
            )
        else:
            lo, hi = 1.0 / p, math.log(n) / p
            notes = (
                "within delta of breakpoint 2/3, between regimes e and g",
                f"band value n^(1/3) = {float(n) ** (1.0 / 3.0):.6g}; exponent-only",
                _GAP_NOTE,
            )
        return RegimeReport("boundary", n, p, x, lo, hi, fx, notes)

    if x < 0.5:
        v = _value_sparse_sharp(n, p)
        return RegimeReport(
            "a", n, p, x, v, v, fx,
            ("pn / (2 ln pn), sharp up to 1 + o(1)",),
        )
    if x < 0.6:
        v = _value_mid(n, p)
        return RegimeReport(
            "c", n, p, x, v, v, fx,
            ("p^{3/2} n / sqrt(ln n), order of magnitude only (Theta constant taken as 1)",),
        )
    if x < 2.0 / 3.0:
        return RegimeReport(
            "e", n, p, x, 1.0 / p, math.log(n) / p, fx,
            ("lower = 1/p", "upper = ln n / p", _GAP_NOTE),
        )
    return RegimeReport(
        "g", n, p, x, 1.0 / p, math.log(n) / p, fx,
        ("lower = 1/p", "upper = ln n / p", _GAP_NOTE),
    )


@dataclass(frozen=True)
class TheoryConstants:
    """Finite-n constants used by the whp statements, with absence reasons.

    Every present field is computed exactly by its defining formula from
    (n, p, k); a field is None exactly when its formula's domain constraint
    fails, and ``reasons`` says why.
    """

    n: int
    p: float
    k: int
    triangles_per_edge_bound: float | None
    eps: float | None
    eps_prime: float | None
    k_cap: float | None
    mcf_bound_sparse: float | None
    mcf_const_dense: float | None
    clique_size_bound: int | None
    maximal_clique_floor: int | None
    reasons: dict[str, str] = field(default_factory=dict)


def theory_constants(n: int, p: float, k: int = 3) -> TheoryConstants:
    """Evaluate the finite-n constants at (n, p, k).

    Included: the triangles-per-edge bound 9 ln n / ln(e/(n p^2)); the
    slack pair eps = 3 (2 e c n p^2)^(1/(2c)) and eps' = max(eps,
    1/ln ln(pn)); the monochromatic-set size cap (2 + eps') ln(pn) / p; the
    sparse mcf bound 3 k p^(-k/2) (ln n)^(1/(k-1)); the dense mcf constant
    (32 k^2 ln n / -ln(p^k n 4 e k ln^2 n))^(1/(k-1)); and the clique-size
    bounds ceil(2 log_{1/p} n + 1) and floor(log_{1/p} n - 3 log_{1/p} ln n).
    """
    if n < 3:
        raise ParameterError(f"n must be at least 3, got {n}")
    if not 0.0 < p < 1.0:
        raise ParameterError(f"p must be in (0, 1), got {p}")
    if k < 3:
        raise ParameterError(f"k must be at least 3, got {k}")

    reasons: dict[str, str] = {}
    ln_n = math.log(n)
    pn = p * n

    c = None
    if n * p * p < math.e:
        c = 9.0 * ln_n / (1.0 - math.log(n * p * p))
    else:
        reasons["triangles_per_edge_bound"] = f"n p^2 = {n * p * p:.6g} >= e; ln(e/(n p^2)) <= 0"

    eps = None
    if c is None:
        reasons["eps"] = "requires the triangles-per-edge bound"
    else:
        eps = 3.0 * (2.0 * math.e * c * n * p * p) ** (1.0 / (2.0 * c))

    eps_prime = None
    if eps is None:
        reasons["eps_prime"] = "requires eps"
    elif pn <= math.e:
        reasons["eps_prime"] = f"pn = {pn:.6g} <= e; ln ln(pn) is not positive"
    else:
        eps_prime = max(eps, 1.0 / math.log(math.log(pn)))

    k_cap = None
    if eps_prime is None:
        reasons["k_cap"] = "requires eps_prime"
    else:
        k_cap = (2.0 + eps_prime) * math.log(pn) / p

    mcf_bound_sparse = 3.0 * k * p ** (-k / 2.0) * ln_n ** (1.0 / (k - 1.0))

    mcf_const_dense = None
    log_arg = k * math.log(p) + math.log(n) + math.log(4.0 * math.e * k) + 2.0 * math.log(ln_n)
    if log_arg < 0.0:
        mcf_const_dense = (32.0 * k * k * ln_n / -log_arg) ** (1.0 / (k - 1.0))
    else:
        reasons["mcf_const_dense"] = (
            f"p^k n 4 e k ln^2 n = {math.exp(log_arg):.6g} >= 1; the log bound degenerates"
        )

    log_base = -math.log(p)  # ln(1/p) > 0
    clique_size_bound = math.ceil(2.0 * ln_n / log_base + 1.0)
    maximal_clique_floor = math.floor((ln_n - 3.0 * math.log(ln_n)) / log_base)

    return TheoryConstants(
        n, p, k, c, eps, eps_prime, k_cap,
        mcf_bound_sparse, mcf_const_dense,
        clique_size_bound, maximal_clique_floor, reasons,
    )


def chernoff_tail(mu: float, delta: float, side: str) -> float:
    """Binomial tail bound exp(-delta^2 mu / 2) below, exp(-delta^2 mu / (2 + delta)) above.

    ``side`` is "lower" (needs 0 < delta < 1) or "upper" (needs delta > 0).
    Returns a probability clamped to [0, 1]; mu = 0 gives the trivial 1.
    """
    if mu < 0.0:
        raise ParameterError(f"mu must be nonnegative, got {mu}")
    if side == "lower":
        if not 0.0 < delta < 1.0:
            raise ParameterError(f"lower tail needs 0 < delta < 1, got {delta}")
        value = math.exp(-delta * delta * mu / 2.0)
    elif side == "upper":
        if delta <= 0.0:
            raise ParameterError(f"upper tail needs delta > 0, got {delta}")
        value = math.exp(-delta * delta * mu / (2.0 + delta))
    else:
        raise ParameterError(f"side must be 'lower' or 'upper', got {side!r}")
    return min(1.0, max(0.0, value))

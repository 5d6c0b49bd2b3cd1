"""Closed-form quantities of the expected-ratio analysis.

Everything here is a pure function of ``beta`` (and optionally the graph scale
``e**alpha``): Riemann zeta values, partial zeta sums, the two lower bounds on
the probability that a high-degree vertex touches a degree-1/2 vertex, the
expected ``x(V*)`` lower bound, the ``x(V)`` upper bound, the threshold
``delta0`` and the two approximation-ratio bounds ``rho_first`` and
``rho_refined``.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from typing import Optional

#: Lower end (exclusive) of the beta range covered by the refined analysis.
REFINED_BETA_MIN = 2.424

DEFAULT_EPS = 1e-12


class DomainError(ValueError):
    """A bound was requested outside the parameter range it is defined on."""


def zeta(s: float, eps: float = DEFAULT_EPS) -> float:
    """Riemann zeta for real ``s > 1`` with absolute error below ``eps``.

    Partial sum up to ``N`` plus the Euler-Maclaurin tail
    ``N^(1-s)/(s-1) - N^(-s)/2 + s N^(-s-1)/12``. For ``x^(-s)`` the remainder
    is bounded by the first omitted term, ``s(s+1)(s+2) N^(-s-3)/720``, and
    ``N`` is grown until that is below ``eps / 2``.
    """
    if not s > 1:
        raise DomainError(f"zeta needs s > 1, got {s}")
    if not eps > 0:
        raise ValueError("eps must be positive")
    c = s * (s + 1) * (s + 2) / 720
    n = 8
    while c * n ** (-s - 3) >= eps / 2:
        n *= 2
    head = math.fsum(i ** -s for i in range(1, n + 1))
    tail = n ** (1 - s) / (s - 1) - 0.5 * n ** -s + s * n ** (-s - 1) / 12
    return head + tail


def partial_zeta(s: float, delta: int) -> float:
    """``sum_{i=1}^{delta} i^(-s)``."""
    if delta < 1:
        raise DomainError(f"delta must be >= 1, got {delta}")
    return math.fsum(i ** -s for i in range(1, int(delta) + 1))


def _check_beta(beta: float) -> None:
    if not beta > 2:
        raise DomainError(f"beta must exceed 2, got {beta}")


def eta_lower_first(beta: float, delta: int) -> float:
    """Lower bound on the chance that a vertex of degree >= 3 hits a degree-2 vertex.

    Looks only at the first copy of the vertex: ``1 / (2^(beta-1) S_{beta-1}(delta))``.
    """
    _check_beta(beta)
    return 1.0 / (2 ** (beta - 1) * partial_zeta(beta - 1, delta))


def eta_lower_refined(deg_u: float, n_copies: float, delta: float) -> float:
    """Refined lower bound on the chance that a high-degree vertex hits a set ``U``.

    ``deg_u`` is the total degree of ``U``, ``n_copies`` the total number of
    vertex copies, ``delta`` the maximum degree:
    ``((N - delta + 1)/N) * (1 - ((N - deg_u - 2)/(N - 2))^3)``.
    """
    if not n_copies > max(2, delta):
        raise DomainError("need n_copies > max(2, delta)")
    if not 0 <= deg_u <= n_copies - 2:
        raise DomainError("need 0 <= deg_u <= n_copies - 2")
    lead = (n_copies - delta + 1) / n_copies
    miss = ((n_copies - deg_u - 2) / (n_copies - 2)) ** 3
    return lead * (1.0 - miss)


def low_degree_mass(beta: float, eps: float = DEFAULT_EPS) -> float:
    """``zeta(beta) - 1 - 2^(-beta)``: vertex mass of degree >= 3 per unit scale."""
    return zeta(beta, eps) - 1.0 - 2.0 ** -beta


def ex_vstar_lower(beta: float, scale: float, eps: float = DEFAULT_EPS) -> float:
    """Lower bound on ``E[x(V*)]`` for graph scale ``scale = e^alpha``."""
    _check_beta(beta)
    return scale / 2 ** beta * low_degree_mass(beta, eps) / zeta(beta - 1, eps)


def xv_upper(beta: float, scale: float, eps: float = DEFAULT_EPS) -> float:
    """All-1/2 upper bound on the LP value: ``zeta(beta) * scale / 2``."""
    _check_beta(beta)
    return 0.5 * zeta(beta, eps) * scale


def delta0(beta: float) -> int:
    """Degree threshold above which the partial-sum ratio beats ``1/(delta+1)``."""
    _check_beta(beta)
    num = 8.0 ** beta + 2 * 4.0 ** beta + 6 * 2.0 ** beta + 7
    return math.ceil(num / (1 + 2.0 ** beta))


def delta0_inequality(beta: float, delta: int) -> tuple[float, float]:
    """Both sides of ``(S_b - 1 - 2^-b) / S_(b-1) >= 1/(delta+1)`` at ``delta``."""
    lhs = (partial_zeta(beta, delta) - 1 - 2.0 ** -beta) / partial_zeta(beta - 1, delta)
    return lhs, 1.0 / (delta + 1)


def rho_first(beta: float, eps: float = DEFAULT_EPS) -> float:
    """Expected approximation-ratio bound valid for every ``beta > 2``."""
    _check_beta(beta)
    zb, zb1 = zeta(beta, eps), zeta(beta - 1, eps)
    return 2.0 - (zb - 1 - 2.0 ** -beta) / (2 ** beta * zb1 * zb)


def rho_refined(beta: float, scale: Optional[float] = None, eps: float = DEFAULT_EPS) -> float:
    """Refined ratio bound for ``beta > 2.424``.

    With ``scale`` (``e^alpha``) the finite-size form is returned, with the
    real maximum degree ``scale^(1/beta)``; without it, the ``alpha -> inf``
    limit.
    """
    if not beta > REFINED_BETA_MIN:
        raise DomainError(f"refined bound needs beta > {REFINED_BETA_MIN}, got {beta}")
    zb, zb1 = zeta(beta, eps), zeta(beta - 1, eps)
    low12 = 1 + 2.0 ** (1 - beta)
    if scale is None:
        lead = low_degree_mass(beta, eps) * zb1 / (zb1 * zb)
        c = (zb1 - low12) / zb1
    else:
        if not scale > 0:
            raise DomainError("scale must be positive")
        max_deg = scale ** (1 / beta)
        lead = low_degree_mass(beta, eps) * (zb1 - max_deg / scale + 1 / scale) / (zb1 * zb)
        c = (zb1 - low12 - 2 / scale) / (zb1 - 2 / scale)
    return 2.0 - lead * (1 - c ** 3)


def refined_threshold_holds(beta: float, eps: float = DEFAULT_EPS) -> bool:
    """The observation behind the 2.424 cutoff: ``zeta(beta) - 2^-b < 1 + 2^-b``."""
    return zeta(beta, eps) - 2.0 ** -beta < 1 + 2.0 ** -beta


@dataclass
class BoundReport:
    beta: float
    alpha: Optional[float]
    zeta_beta: float
    zeta_beta_minus_1: float
    rho_first: float
    rho_refined_finite: Optional[float]
    rho_refined_asymptotic: Optional[float]
    delta0: int
    ex_vstar_lower: Optional[float]
    xv_upper: Optional[float]

    def to_dict(self) -> dict:
        return asdict(self)


def bound_report(beta: float, alpha: Optional[float] = None, eps: float = DEFAULT_EPS) -> BoundReport:
    _check_beta(beta)
    scale = math.exp(alpha) if alpha is not None else None
    refined_ok = beta > REFINED_BETA_MIN
    return BoundReport(
        beta=beta,
        alpha=alpha,
        zeta_beta=zeta(beta, eps),
        zeta_beta_minus_1=zeta(beta - 1, eps),
        rho_first=rho_first(beta, eps),
        rho_refined_finite=rho_refined(beta, scale, eps) if refined_ok and scale is not None else None,
        rho_refined_asymptotic=rho_refined(beta, None, eps) if refined_ok else None,
        delta0=delta0(beta),
        ex_vstar_lower=ex_vstar_lower(beta, scale, eps) if scale is not None else None,
        xv_upper=xv_upper(beta, scale, eps) if scale is not None else None,
    )

"""Exact-rational evaluators for the remoteness upper bounds.

Every evaluator returns :class:`fractions.Fraction`.  Bounds whose hypothesis
restricts the size range return a :class:`BoundReport` that is marked
inapplicable outside that range instead of extrapolating.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from decimal import ROUND_HALF_EVEN, Decimal, localcontext
from enum import Enum
from fractions import Fraction
from math import comb

from .families import (
    FamilyError,
    LambdaFamily,
    enumerate_lambda_pc,
    kappa_pc_size_range,
    lambda_pc_graph,
    pk_lambda_params,
)
from .graphcore import rho


class BoundId(Enum):
    ORDER = "order"
    SIZE = "size"
    KAPPA = "kappa"
    LAMBDA_ORDER = "lambda-order"
    LAMBDA_SIZE = "lambda-size"
    TRIANGLE_FREE = "triangle-free"
    PK_DIRECT = "pk-direct"


@dataclass(frozen=True)
class BoundReport:
    bound_id: BoundId
    inputs: dict[str, int]
    value: Fraction | None
    applicable: bool
    note: str = ""
    extras: dict[str, Fraction | int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.applicable != (self.value is not None):
            raise ValueError("value must be present iff applicable")


def _check_lambda(lam: int) -> None:
    if lam not in (2, 3):
        raise ValueError(f"lambda must be 2 or 3, got {lam}")


def bound_order(n: int) -> Fraction:
    if n < 2:
        raise ValueError("need n >= 2")
    return Fraction(n, 2)


def bound_size(n: int, m: int) -> Fraction:
    if n < 2:
        raise ValueError("need n >= 2")
    if m < n - 1:
        raise ValueError(f"a connected graph of order {n} has at least {n - 1} edges")
    return Fraction(n + 2, 2) - Fraction(m, n - 1)


def m_star(n: int, m: int, kappa: int) -> int:
    """Least integer >= m congruent to C(n-1, 2) modulo kappa."""
    if kappa < 1:
        raise ValueError("kappa must be >= 1")
    return m + (comb(n - 1, 2) - m) % kappa


def bound_kappa(n: int, m: int, kappa: int) -> BoundReport:
    inputs = {"n": n, "m": m, "kappa": kappa}
    try:
        lo, hi, _ = kappa_pc_size_range(n, kappa)
    except FamilyError as exc:
        return BoundReport(BoundId.KAPPA, inputs, None, False, str(exc))
    if not lo <= m <= hi:
        return BoundReport(
            BoundId.KAPPA, inputs, None, False, f"m outside window [{lo}, {hi}]"
        )
    ms = m_star(n, m, kappa)
    value = (
        Fraction(n, 2 * kappa)
        + 2
        - Fraction(1, kappa)
        - Fraction(kappa - 1, n - 1)
        - Fraction(ms, kappa * (n - 1))
    )
    return BoundReport(BoundId.KAPPA, inputs, value, True, f"m*={ms}", {"m_star": ms})


def epsilon_lambda(n: int, lam: int) -> Fraction:
    """Offset in the minimum family size ``c*n - eps`` (c = 5/3 or 9/4)."""
    _check_lambda(lam)
    if lam == 2:
        return (Fraction(2), Fraction(5, 3), Fraction(1, 3))[n % 3]
    return (Fraction(3), Fraction(9, 4), Fraction(1, 2), Fraction(-9, 4))[n % 4]


def lambda_size_range(n: int, lam: int) -> tuple[Fraction, int]:
    """Closed-form ``(min size, max size)`` of the lambda families."""
    slope = Fraction(5, 3) if lam == 2 else Fraction(9, 4)
    return slope * n - epsilon_lambda(n, lam), comb(n, 2) - 1


def bound_lambda_order(n: int, lam: int) -> Fraction:
    _check_lambda(lam)
    if n < lam + 1:
        raise ValueError(f"need n >= {lam + 1}")
    if lam == 2:
        base = Fraction(n, 3)
        return base - Fraction(2, 3 * (n - 1)) if n % 3 == 2 else base
    base = Fraction(n, 4)
    r = n % 4
    if r == 2:
        return base - Fraction(1, 2 * (n - 1))
    if r == 3:
        return base - Fraction(3, 2 * (n - 1))
    return base


def _ceil(x: Fraction) -> int:
    return -((-x.numerator) // x.denominator)


def bound_lambda_size(n: int, m: int, lam: int) -> BoundReport:
    _check_lambda(lam)
    inputs = {"n": n, "m": m, "lambda": lam}
    if n < 2:
        return BoundReport(BoundId.LAMBDA_SIZE, inputs, None, False, "need n >= 2")
    if lam == 2:
        threshold = _ceil(Fraction(5 * n, 3)) - 2
        if m < threshold:
            return BoundReport(BoundId.LAMBDA_SIZE, inputs, Fraction(n, 3), True, "order branch")
        value = Fraction(n, 3) - Fraction(2 * m, 3 * (n - 1)) + Fraction(5, 3)
    else:
        threshold = _ceil(Fraction(9 * n, 4)) - 2
        if m < threshold:
            return BoundReport(BoundId.LAMBDA_SIZE, inputs, Fraction(n, 4), True, "order branch")
        value = Fraction(n, 4) - Fraction(m, 2 * (n - 1)) + Fraction(3, 2)
    return BoundReport(BoundId.LAMBDA_SIZE, inputs, value, True, "size branch")


def lambda_base(n: int, m: int, lam: int) -> Fraction:
    if lam == 2:
        return Fraction(n, 3) - Fraction(2 * m, 3 * (n - 1))
    return Fraction(n, 4) - Fraction(m, 2 * (n - 1))


def epsilon_exact(n: int, m: int, lam: int) -> Fraction:
    """Remoteness of the extremal lambda graph minus its leading terms.

    Computed directly from the realised graph; no closed form is involved.
    """
    _check_lambda(lam)
    members = enumerate_lambda_pc(n, lam)
    if not members[0][1] <= m < comb(n, 2):
        raise ValueError(f"m={m} outside [{members[0][1]}, {comb(n, 2) - 1}]")
    return rho(lambda_pc_graph(pk_lambda_params(n, m, lam))) - lambda_base(n, m, lam)


def epsilon_closed_form(n: int, m: int, lam: int) -> dict[str, Fraction]:
    """Closed-form offsets for lambda = 2, keyed by formula name.

    ``"printed"`` is the form published alongside the bound; for the F2
    family ``"rederived"`` is the algebraically re-derived value.  Both are
    only meaningful when the extremal graph has exactly ``m`` edges.
    """
    if lam != 2:
        return {}
    p = pk_lambda_params(n, m, lam)
    if p.family is LambdaFamily.F1:
        return {"printed": Fraction(4, 3) - Fraction(2 * p.k + p.b, 3 * (n - 1))}
    return {
        "printed": Fraction(5, 3) - Fraction(9 * p.k + p.b + 2, 3 * (n - 1)),
        "rederived": 1 + Fraction(p.k + p.b, 3 * (n - 1)),
    }


def epsilon_window(lam: int) -> tuple[Fraction, Fraction]:
    _check_lambda(lam)
    return (Fraction(2, 3), Fraction(5, 3)) if lam == 2 else (Fraction(1), Fraction(3, 2))


def bound_triangle_free(n: int, m: int) -> Fraction:
    if n < 2:
        raise ValueError("need n >= 2")
    if not n - 1 <= m <= n * n // 4:
        raise ValueError(f"need n-1 <= m <= floor(n^2/4): n={n}, m={m}")
    return Fraction(n, 2) + 2 - Fraction(2 * m, n - 1)


def triangle_free_transmission_cap(n: int, m: int) -> int:
    """Integer cap on any single transmission: (n+4)(n-1)/2 - 2m."""
    return (n + 4) * (n - 1) // 2 - 2 * m


def format_rational(x: Fraction | None) -> str | None:
    return None if x is None else str(x)


def format_decimal(x: Fraction | None, places: int = 6) -> str | None:
    """Round-half-even decimal rendering; display only."""
    if x is None:
        return None
    with localcontext() as ctx:
        ctx.prec = 100
        q = Decimal(x.numerator) / Decimal(x.denominator)
        return str(q.quantize(Decimal(1).scaleb(-places), rounding=ROUND_HALF_EVEN))

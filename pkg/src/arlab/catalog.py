"""Closed-form anti-Ramsey values from the literature, each behind its domain guard.

Every evaluation is exact: halves and thresholds are :class:`fractions.Fraction`
values and floors/ceilings are applied only where the formula prints them.
Families that are only known "for sufficiently large n" need an explicit
``n_min``; without one they default to three times the forest's vertex count,
and anything below the threshold is reported as out of domain rather than
extrapolated.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil, comb, floor
from typing import Callable, Mapping

FAMILIES = (
    "PATH",
    "CYCLE",
    "MATCHING",
    "P3_P2_SMALL",
    "P3_TP2",
    "TWO_P3_TP2",
    "GR_PK1_TP3",
    "GR_KP3_TP2",
    "GR_P2_TP3",
    "GR_P3_TP2",
    "GR_P4_TP2",
    "GR_C3_TP2",
    "GR_TP3",
    "XIE_LINEAR_FOREST",
    "JIE_KP3_TP2",
    "SPANNING_KP3_TP2",
)


class UnknownFamilyError(KeyError):
    pass


class _OutOfDomain(Exception):
    pass


@dataclass(frozen=True)
class FormulaResult:
    family: str
    params: dict
    value: int | None
    branch: str | None = None
    reason: str | None = None

    @property
    def in_domain(self) -> bool:
        return self.value is not None

    def to_dict(self) -> dict:
        out: dict = {"family": self.family, "params": self.params}
        if self.value is None:
            out["out_of_domain"] = self.reason
        else:
            out["value"] = self.value
        out["branch"] = self.branch
        return out


@dataclass(frozen=True)
class IdentityCheck:
    check_id: str
    lhs: str
    rhs: str
    lhs_value: int | None
    rhs_value: int | None
    passed: bool = field(init=False)

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "passed", self.lhs_value is not None and self.lhs_value == self.rhs_value
        )


def _require(cond: bool, reason: str) -> None:
    if not cond:
        raise _OutOfDomain(reason)


def _need(params: Mapping, *names: str) -> list[int]:
    missing = [nm for nm in names if nm not in params]
    if missing:
        raise _OutOfDomain(f"missing parameter(s): {', '.join(missing)}")
    return [params[nm] for nm in names]


def _as_int(x: Fraction) -> int:
    if x.denominator != 1:
        raise ArithmeticError(f"formula produced non-integer {x}")
    return x.numerator


def _large_n(params: Mapping, n: int, vertex_demand: int) -> None:
    n_min = params.get("n_min", 3 * vertex_demand)
    _require(n >= n_min, f"n={n} below n_min={n_min} for an asymptotic family")


def spanning_threshold(k: int, t: int) -> int:
    """½(3k+2t−3)(3k+2t−4) + 1, the value for kP3 ∪ tP2 on exactly 3k+2t vertices."""
    s = 3 * k + 2 * t
    return (s - 3) * (s - 4) // 2 + 1


def _path(p):
    n, t = _need(p, "n", "t")
    _require(t >= 2, "needs t >= 2")
    _large_n(p, n, t)
    m = (t - 1) // 2
    eps = 1 if t % 2 == 0 else 0
    value = comb(m, 2) + (m - 1) * (n - m + 1) + 1 + eps
    _require(value >= 0, f"printed formula is negative ({value}) at t={t}")
    return value, "even" if eps else "odd"


def _cycle(p):
    n, t = _need(p, "n", "t")
    _require(n >= t >= 3, "needs n >= t >= 3")
    d = t - 1
    return comb(d, 2) * (n // d) + -(-n // d) + comb(n % d, 2), "printed"


def _matching(p):
    n, t = _need(p, "n", "t")
    _require(t >= 2, "needs t >= 2")
    regime = p.get("regime")
    if regime is None:
        regime = "C" if n == 2 * t else "B"
    if regime == "A":
        _require(n >= 3 * t + 3, "regime A needs n >= 3t + 3")
        return comb(t - 2, 2) + (t - 2) * (n - t + 2) + 1, "A"
    if regime == "B":
        _require(n >= 2 * t + 1, "regime B needs n >= 2t + 1")
        if n <= Fraction(5 * t - 7, 2):
            return (t - 2) * (2 * t - 3) + 1, "B1"
        return _as_int((t - 2) * (n - Fraction(t - 1, 2)) + 1), "B2"
    if regime == "C":
        _require(n == 2 * t, "regime C needs n = 2t")
        _require(t >= 3, "regime C needs t >= 3")
        if t <= 6:
            return _as_int(Fraction(1, 2) * (t - 2) * (3 * t + 1) + 1), "C1"
        return (t - 2) * (2 * t - 3) + 2, "C2"
    raise _OutOfDomain(f"unknown matching regime {regime!r}")


def _p3_p2_small(p):
    n, t = _need(p, "n", "t")
    if t == 1:
        _require(n >= 5, "P3 ∪ P2 needs n >= 5")
        return 2, "P3uP2"
    if t == 2:
        _require(n >= 7, "P3 ∪ 2P2 needs n >= 7")
        return n, "P3u2P2"
    raise _OutOfDomain("only t in {1, 2} is covered")


def _p3_tp2(p):
    n, t = _need(p, "n", "t")
    _require(t >= 2, "needs t >= 2")
    _require(n >= 2 * t + 3, "needs n >= 2t + 3")
    mu = Fraction(5 * t + 2, 2) + Fraction(1, t - 1)
    if n <= floor(mu):
        return t * (2 * t - 1) + 1, "small"
    assert n >= ceil(mu)
    return _as_int((t - 1) * (n - Fraction(t, 2)) + 1), "large"


def _two_p3_tp2(p):
    n, t = _need(p, "n", "t")
    _require(t >= 2, "needs t >= 2")
    _require(n >= 2 * t + 7, "needs n >= 2t + 7")
    nu = Fraction(5 * t + 11, 2) + Fraction(3, t)
    if n <= floor(nu):
        return (t + 1) * (2 * t + 3) + 1, "small"
    assert n >= ceil(nu)
    return _as_int(Fraction(1, 2) * t * (2 * n - t - 1) + 1), "large"


def _gr_pk1_tp3(p):
    n, k, t = _need(p, "n", "k", "t")
    _require(k >= 3, "needs k >= 3")
    _require(t >= 1, "needs t >= 1")
    _large_n(p, n, (k + 1) + 3 * t)
    h = k // 2
    return _as_int((t + h - 1) * (n - Fraction(t + h, 2)) + 1 + (k % 2)), "asymptotic"


def _gr_kp3_tp2(p):
    n, k, t = _need(p, "n", "k", "t")
    _require(k >= 2 and t >= 2, "needs k, t >= 2")
    _large_n(p, n, 3 * k + 2 * t)
    return _as_int((k + t - 2) * (n - Fraction(t + k - 1, 2)) + 1), "asymptotic"


def _gr_minus_half(min_t: int, demand: Callable[[int], int]):
    def fn(p):
        n, t = _need(p, "n", "t")
        _require(t >= min_t, f"needs t >= {min_t}")
        _large_n(p, n, demand(t))
        return _as_int((t - 1) * (n - Fraction(t, 2)) + 1), "asymptotic"

    return fn


def _gr_plus_half(demand: Callable[[int], int]):
    def fn(p):
        n, t = _need(p, "n", "t")
        _require(t >= 1, "needs t >= 1")
        _large_n(p, n, demand(t))
        return _as_int(t * (n - Fraction(t + 1, 2)) + 1), "asymptotic"

    return fn


def _xie(p):
    (n,) = _need(p, "n")
    parts = list(_need(p, "p")[0])
    _require(len(parts) >= 2, "needs at least two components")
    _require(all(q >= 2 for q in parts), "needs every component order >= 2")
    evens = sum(1 for q in parts if q % 2 == 0)
    _require(evens >= 1, "needs at least one even component")
    _require(n != sum(parts), "n equal to the forest order is not covered")
    _large_n(p, n, sum(parts))
    s = sum(q // 2 for q in parts)
    eps = 1 if evens == 1 else 0
    return comb(s - 2, 2) + (s - 2) * (n - s + 2) + 1 + eps, "one_even" if eps else "multi_even"


def _jie(p):
    n, k, t = _need(p, "n", "k", "t")
    _require(k >= 2, "needs k >= 2")
    _require(t >= Fraction(k * k - k + 4, 2), "needs t >= (k^2 - k + 4)/2")
    _require(n >= 3 * k + 2 * t + 1, "needs n >= 3k + 2t + 1")
    lam = Fraction(9 * k + 5 * t - 7, 2) + Fraction(k * (k + 1), 2 * (k + t - 2))
    if n <= floor(lam):
        return spanning_threshold(k, t), "small"
    assert n >= ceil(lam)
    return _as_int(Fraction(1, 2) * (k + t - 2) * (2 * n - k - t + 1) + 1), "large"


def _spanning(p):
    k, t = _need(p, "k", "t")
    _require(k >= 1 and t >= 2, "needs k >= 1 and t >= 2")
    n = p.get("n", 3 * k + 2 * t)
    _require(n == 3 * k + 2 * t, "needs n = 3k + 2t")
    return spanning_threshold(k, t), "spanning"


_EVALUATORS = {
    "PATH": _path,
    "CYCLE": _cycle,
    "MATCHING": _matching,
    "P3_P2_SMALL": _p3_p2_small,
    "P3_TP2": _p3_tp2,
    "TWO_P3_TP2": _two_p3_tp2,
    "GR_PK1_TP3": _gr_pk1_tp3,
    "GR_KP3_TP2": _gr_kp3_tp2,
    "GR_P2_TP3": _gr_minus_half(1, lambda t: 2 + 3 * t),
    "GR_P3_TP2": _gr_minus_half(2, lambda t: 3 + 2 * t),
    "GR_P4_TP2": _gr_plus_half(lambda t: 4 + 2 * t),
    "GR_C3_TP2": _gr_plus_half(lambda t: 3 + 2 * t),
    "GR_TP3": _gr_minus_half(1, lambda t: 3 * t),
    "XIE_LINEAR_FOREST": _xie,
    "JIE_KP3_TP2": _jie,
    "SPANNING_KP3_TP2": _spanning,
}


def evaluate(family: str, **params) -> FormulaResult:
    """Evaluate ``family`` at ``params``; out-of-domain inputs give ``value=None``.

    Integer parameters are ``n``, ``k``, ``t`` and ``n_min``; ``MATCHING`` also
    takes ``regime`` in ``{"A", "B", "C"}`` and ``XIE_LINEAR_FOREST`` takes the
    component orders as a sequence ``p``.
    """
    try:
        fn = _EVALUATORS[family]
    except KeyError:
        raise UnknownFamilyError(family) from None
    shown = {k: (list(v) if k == "p" else v) for k, v in params.items()}
    try:
        value, branch = fn(params)
    except _OutOfDomain as exc:
        return FormulaResult(family, shown, None, None, str(exc))
    return FormulaResult(family, shown, int(value), branch)


def consistency_report(t_max: int) -> list[IdentityCheck]:
    """Check the spanning formula against He–Jin and Bialostocki at their overlaps."""
    if t_max < 2:
        raise ValueError("t_max must be >= 2")
    rows = []
    for t in range(2, t_max + 1):
        rows.append(
            IdentityCheck(
                f"spanning(1,{t})=p3_tp2({2 * t + 3},{t})",
                f"SPANNING_KP3_TP2(k=1,t={t})",
                f"P3_TP2(n={2 * t + 3},t={t})",
                evaluate("SPANNING_KP3_TP2", k=1, t=t).value,
                evaluate("P3_TP2", n=2 * t + 3, t=t).value,
            )
        )
    rows.append(
        IdentityCheck(
            "spanning(1,2)=p3_p2_small(7)",
            "SPANNING_KP3_TP2(k=1,t=2)",
            "P3_P2_SMALL(n=7,t=2)",
            evaluate("SPANNING_KP3_TP2", k=1, t=2).value,
            evaluate("P3_P2_SMALL", n=7, t=2).value,
        )
    )
    return rows

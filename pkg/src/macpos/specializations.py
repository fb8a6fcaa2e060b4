"""Specializations (homomorphisms Lambda -> Q) stored by their values on g_1..g_N.

The generating series ``Pi(theta) = sum_n theta(g_n) z^n`` carries all the
information; power-sum values are recovered from
``Pi = exp(sum_n (1/n) (1-t^n)/(1-q^n) p_n z^n)``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Optional, Sequence, Union

from .macdonald import (
    SymFunc,
    b_const,
    branching,
    inverse_column,
    macdonald_poly,
    omega as omega_symfunc,
    to_g_basis,
)
from .partitions import (
    Partition,
    contains,
    enumerate_partitions,
    enumerate_strip_extensions,
    has_close_pair,
    partitions_upto,
    prepend_row,
    size,
)
from .qt import (
    QTParams,
    Rational,
    TruncatedSeries,
    exp_linear,
    format_rational,
    parse_rational,
    pochhammer_inf_series,
    qgauss_series,
)


@dataclass(frozen=True)
class Specialization:
    """``theta`` given by ``theta(g_1), ..., theta(g_N)``; ``theta(g_0) = 1``."""

    params: QTParams
    g_values: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "g_values", tuple(Fraction(x) for x in self.g_values))

    @property
    def degree(self) -> int:
        return len(self.g_values)

    def g(self, n: int) -> Fraction:
        if n == 0:
            return Fraction(1)
        if n > self.degree:
            raise ValueError(f"theta(g_{n}) is beyond truncation degree {self.degree}")
        return self.g_values[n - 1]

    def generating_series(self) -> TruncatedSeries:
        return TruncatedSeries((Fraction(1),) + self.g_values)

    @classmethod
    def from_series(cls, params: QTParams, series: TruncatedSeries) -> "Specialization":
        if series[0] != 1:
            raise ValueError("generating series must have constant term 1")
        return cls(params, series.coeffs[1:])

    def p_values(self) -> tuple[Fraction, ...]:
        q, t = self.params.q, self.params.t
        log = self.generating_series().log()
        return tuple(n * (1 - q ** n) / (1 - t ** n) * log[n] for n in range(1, self.degree + 1))

    @classmethod
    def from_p_values(cls, params: QTParams, p_values: Sequence[Rational]) -> "Specialization":
        q, t = params.q, params.t
        exponent = [Fraction(0)] + [Fraction(p) * (1 - t ** n) / ((1 - q ** n) * n)
                                    for n, p in enumerate(p_values, 1)]
        return cls.from_series(params, TruncatedSeries(exponent).exp())

    def g_nu(self, nu: Partition) -> Fraction:
        out = Fraction(1)
        for r in nu:
            out *= self.g(r)
        return out

    def e_values(self) -> tuple[Fraction, ...]:
        """``theta(e_1), ..., theta(e_N)`` from ``sum e_n z^n = exp(sum (-1)^{n-1} p_n z^n / n)``."""
        p = self.p_values()
        exponent = [Fraction(0)] + [(-1) ** (n - 1) * p[n - 1] / n for n in range(1, self.degree + 1)]
        return TruncatedSeries(exponent).exp().coeffs[1:]

    def to_json(self) -> dict:
        return {"q": format_rational(self.params.q), "t": format_rational(self.params.t),
                "g_values": [format_rational(x) for x in self.g_values]}


def trivial_spec(params: QTParams, degree: int) -> Specialization:
    return Specialization(params, (Fraction(0),) * degree)


def _nonneg(x: Rational, name: str) -> Fraction:
    x = parse_rational(x)
    if x < 0:
        raise ValueError(f"{name} must be non-negative, got {x}")
    return x


def alpha_spec(alpha: Rational, params: QTParams, degree: int) -> Specialization:
    """``x_1 -> alpha``: ``theta(g_n) = (t;q)_n / (q;q)_n alpha^n``."""
    alpha = _nonneg(alpha, "alpha")
    return Specialization.from_series(params, qgauss_series(params.t, params, degree).substitute_scaled(alpha))


def beta_dual_spec(beta: Rational, params: QTParams, degree: int) -> Specialization:
    """Dual of ``x_1 -> beta``; generating series ``1 + beta z``."""
    beta = _nonneg(beta, "beta")
    return Specialization.from_series(params, TruncatedSeries([1, beta], degree))


def plancherel_spec(gamma: Rational, params: QTParams, degree: int) -> Specialization:
    """Plancherel specialization; generating series ``exp(gamma z)``."""
    gamma = _nonneg(gamma, "gamma")
    return Specialization.from_series(params, exp_linear(gamma, degree))


_BUILTINS = {"alpha": alpha_spec, "beta_dual": beta_dual_spec, "plancherel": plancherel_spec}


def builtin_spec(kind: str, value: Rational, params: QTParams, degree: int) -> Specialization:
    try:
        make = _BUILTINS[kind]
    except KeyError:
        raise ValueError(f"unknown built-in specialization {kind!r}") from None
    return make(value, params, degree)


def union_spec(*specs: Specialization) -> Specialization:
    """Union: power sums add, generating series multiply."""
    if not specs:
        raise ValueError("union of nothing")
    first = specs[0]
    series = first.generating_series()
    for s in specs[1:]:
        if s.params != first.params or s.degree != first.degree:
            raise ValueError("union needs equal (q, t) and truncation degree")
        series = series * s.generating_series()
    return Specialization.from_series(first.params, series)


@dataclass(frozen=True)
class KerovParams:
    alphas: tuple[Fraction, ...] = ()
    betas: tuple[Fraction, ...] = ()
    gamma: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "alphas", tuple(_nonneg(a, "alpha") for a in self.alphas))
        object.__setattr__(self, "betas", tuple(_nonneg(b, "beta") for b in self.betas))
        object.__setattr__(self, "gamma", _nonneg(self.gamma, "gamma"))

    @classmethod
    def from_json(cls, data: Mapping) -> "KerovParams":
        return cls(tuple(data.get("alphas", ())), tuple(data.get("betas", ())), data.get("gamma", 0))

    def to_json(self) -> dict:
        return {"alphas": [format_rational(a) for a in self.alphas],
                "betas": [format_rational(b) for b in self.betas],
                "gamma": format_rational(self.gamma)}

    def p_values(self, params: QTParams, degree: int) -> tuple[Fraction, ...]:
        """Power-sum values of the Kerov specialization."""
        q, t = params.q, params.t
        out = []
        for k in range(1, degree + 1):
            v = sum((a ** k for a in self.alphas), Fraction(0))
            v += (-1) ** (k - 1) * (1 - q ** k) / (1 - t ** k) * sum((b ** k for b in self.betas), Fraction(0))
            if k == 1:
                v += (1 - q) / (1 - t) * self.gamma
            out.append(v)
        return tuple(out)


def kerov_spec(kp: KerovParams, params: QTParams, degree: int) -> Specialization:
    """The specialization with ``Pi = e^{gamma z} prod_i (t a_i z;q)/(a_i z;q) prod_j (1 + b_j z)``."""
    series = exp_linear(kp.gamma, degree)
    base = qgauss_series(params.t, params, degree)
    for a in kp.alphas:
        series = series * base.substitute_scaled(a)
    for b in kp.betas:
        series = series * TruncatedSeries([1, b], degree)
    return Specialization.from_series(params, series)


def rescale(theta: Specialization, c: Rational) -> Specialization:
    """``p_k -> c^k p_k``, i.e. ``Pi(z) -> Pi(c z)``."""
    return Specialization.from_series(theta.params, theta.generating_series().substitute_scaled(c))


def normalize(theta: Specialization) -> Specialization:
    """Rescale so that ``theta(g_1) = 1``."""
    g1 = theta.g(1)
    if g1 == 0:
        raise ValueError("cannot normalize: theta(g_1) = 0")
    return rescale(theta, 1 / g1)


def omega_dual(x: Union[Specialization, SymFunc], params: Optional[QTParams] = None):
    """Duality.

    On a specialization ``theta`` with parameters ``(q, t)`` returns
    ``theta ∘ omega_{t,q}``, a specialization with parameters ``(t, q)`` whose
    ``g``-values are ``theta(e_n)``.  On a :class:`SymFunc` applies
    ``omega_{q,t}`` for the given ``params``.
    """
    if isinstance(x, Specialization):
        return Specialization(x.params.swapped(), x.e_values())
    if params is None:
        raise ValueError("omega on a symmetric function needs params")
    return omega_symfunc(x, params)


# --- evaluation ---------------------------------------------------------------

def eval_Q(theta: Specialization, lam: Partition) -> Fraction:
    """``theta(Q_lam) = sum_nu (M^{-1})_{nu, lam} theta(g_nu)``."""
    lam = tuple(lam)
    if size(lam) > theta.degree:
        raise ValueError(f"|lam| = {size(lam)} exceeds truncation degree {theta.degree}")
    return sum((c * theta.g_nu(nu) for nu, c in inverse_column(lam, theta.params).items()), Fraction(0))


def eval_P(theta: Specialization, lam: Partition) -> Fraction:
    return eval_Q(theta, lam) / b_const(tuple(lam), theta.params)


def evaluate(theta: Specialization, f: SymFunc) -> Fraction:
    """``theta(f)`` through the expansion of ``f`` on products of ``g``'s."""
    if f.degree_bound > theta.degree and any(size(mu) > theta.degree for mu in f.coeffs):
        raise ValueError("symmetric function degree exceeds truncation degree")
    return sum((c * theta.g_nu(nu) for nu, c in to_g_basis(f, theta.params).items()), Fraction(0))


def eval_skew(theta: Specialization, lam: Partition, mu: Partition, kind: str = "Q") -> Fraction:
    return evaluate(theta, macdonald_poly(lam, mu, kind, theta.params))


def positivity_scan(theta: Specialization, max_size: int) -> list[tuple[Partition, Fraction]]:
    """All ``lam`` with ``|lam| <= max_size`` and ``theta(Q_lam) < 0``."""
    if max_size > theta.degree:
        raise ValueError("max_size exceeds truncation degree")
    out = []
    for lam in partitions_upto(max_size):
        v = eval_Q(theta, lam)
        if v < 0:
            out.append((lam, v))
    return out


@dataclass
class HarmonicityReport:
    checked: int = 0
    failures: list[tuple[Partition, Fraction, Fraction]] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return not self.failures


def harmonicity_check(theta: Specialization, max_size: int) -> HarmonicityReport:
    """Check ``f(mu) = sum_{mu -> lam} psi_{lam/mu} f(lam)`` with ``f = theta(Q_.)``
    for every ``|mu| < max_size``.  ``theta`` must satisfy ``theta(g_1) = 1``."""
    if theta.g(1) != 1:
        raise ValueError("harmonicity needs a normalized specialization, theta(g_1) = 1")
    if max_size > theta.degree:
        raise ValueError("max_size exceeds truncation degree")
    report = HarmonicityReport()
    values = {lam: eval_Q(theta, lam) for lam in partitions_upto(max_size)}
    for mu in partitions_upto(max_size - 1):
        rhs = sum((branching(mu, lam, "psi", theta.params) * values[lam]
                   for lam in enumerate_strip_extensions(mu, 1, "horizontal")), Fraction(0))
        report.checked += 1
        if rhs != values[mu]:
            report.failures.append((mu, values[mu], rhs))
    return report


# --- pole removal and the limit identity ------------------------------------------

def pole_removal(theta: Specialization, alpha: Rational) -> Specialization:
    """Multiply ``Pi(theta)`` by ``(alpha z; q)_inf / (t alpha z; q)_inf``."""
    alpha = parse_rational(alpha)
    if alpha <= 0:
        raise ValueError("pole removal needs alpha > 0")
    n, p = theta.degree, theta.params
    factor = pochhammer_inf_series(alpha, p, n) / pochhammer_inf_series(p.t * alpha, p, n)
    return Specialization.from_series(p, theta.generating_series() * factor)


@dataclass
class LimitReport:
    lam: Partition
    alpha: Fraction
    reference: Fraction
    trajectory: list[tuple[int, Fraction]]

    def relative_error(self, n: Optional[int] = None) -> float:
        """``|r_N - reference| / |reference|`` at ``N = n`` (default: last)."""
        values = dict(self.trajectory)
        r = values[n] if n is not None else self.trajectory[-1][1]
        if self.reference == 0:
            return float(abs(r))
        return float(abs(r - self.reference) / abs(self.reference))

    def to_json(self) -> dict:
        from .partitions import format_partition
        return {
            "lambda": format_partition(self.lam),
            "alpha": format_rational(self.alpha),
            "reference": format_rational(self.reference),
            "reference_decimal": float(self.reference),
            "trajectory": [{"N": n, "ratio": format_rational(r), "ratio_decimal": float(r)}
                           for n, r in self.trajectory],
        }


def main_limit_check(theta: Specialization, alpha: Rational, lam: Partition,
                     n_max: int) -> LimitReport:
    """Ratios ``theta(Q_{(N) ∪ lam}) / theta(g_N)`` for ``N = |lam|+1 .. n_max``,
    with the pole-removed value ``theta~(Q_lam)`` as reference."""
    lam = tuple(lam)
    alpha = parse_rational(alpha)
    if n_max + size(lam) > theta.degree:
        raise ValueError(f"truncation degree {theta.degree} < N_max + |lam| = {n_max + size(lam)}")
    reference = eval_Q(pole_removal(theta, alpha), lam)
    trajectory = []
    for n in range(size(lam) + 1, n_max + 1):
        gn = theta.g(n)
        if gn == 0:
            raise ZeroDivisionError(f"theta(g_{n}) = 0")
        trajectory.append((n, eval_Q(theta, prepend_row(n, lam)) / gn))
    return LimitReport(lam, alpha, reference, trajectory)


def close_step_search(theta: Specialization, d: int, s: int = 2, max_size: int = 8,
                    epsilon: Rational = 1) -> list[tuple[Partition, Fraction]]:
    """Partitions ``mu`` (``|mu| <= max_size``, ``theta(Q_mu) > 0``) with
    ``sum theta(Q_lam) < epsilon theta(Q_mu)`` over ``lam`` obtained from ``mu``
    by adding ``s`` boxes two of which are within distance ``d``.

    Returns ``(mu, ratio)`` pairs, ratio being that sum over ``theta(Q_mu)``.
    """
    if max_size + s > theta.degree:
        raise ValueError("truncation degree too small")
    eps = parse_rational(epsilon)
    values = {lam: eval_Q(theta, lam) for lam in partitions_upto(max_size + s)}
    out = []
    for mu in partitions_upto(max_size):
        if values[mu] <= 0:
            continue
        bad = sum((values[lam] for lam in enumerate_partitions(size(mu) + s)
                   if contains(mu, lam) and has_close_pair(mu, lam, d)), Fraction(0))
        ratio = bad / values[mu]
        if ratio < eps:
            out.append((mu, ratio))
    return out

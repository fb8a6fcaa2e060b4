"""Exact identity suites driven by ``macpos check``.

Each suite returns a :class:`SuiteReport`; any failure carries enough
context to reproduce the counterexample.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .macdonald import (
    PIERI_RULES,
    SymFunc,
    e_poly,
    g_poly,
    macdonald_poly,
    omega,
    pieri_expand,
    schur_jacobi_trudi,
)
from .partitions import conjugate, contains, format_partition, partitions_upto, size
from .qt import QTParams, pochhammer_inf_series, qgauss_series
from .specializations import (
    KerovParams,
    alpha_spec,
    beta_dual_spec,
    evaluate,
    harmonicity_check,
    kerov_spec,
    normalize,
    plancherel_spec,
    union_spec,
)


@dataclass
class SuiteReport:
    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def expect(self, ok: bool, message: str) -> None:
        self.checked += 1
        if not ok:
            self.failures.append(message)

    def to_json(self) -> dict:
        return {"suite": self.name, "passed": self.passed, "checked": self.checked,
                "failures": self.failures}


def _multiplier(kind: str, r: int, params: QTParams) -> SymFunc:
    return g_poly(r, params) if kind == "g" else e_poly(r)


def pieri_suite(params: QTParams, max_size: int = 6, max_r: int = 4) -> SuiteReport:
    """All four Pieri rules as m-basis identities for ``|mu| <= max_size``, ``r <= max_r``."""
    rep = SuiteReport("pieri")
    for which, (mult, basis, _, _) in PIERI_RULES.items():
        for mu in partitions_upto(max_size):
            left = macdonald_poly(mu, (), basis, params)
            for r in range(1, max_r + 1):
                lhs = left * _multiplier(mult, r, params)
                rhs = SymFunc({}, size(mu) + r)
                for lam, c in pieri_expand(mu, r, which, params):
                    rhs = rhs + macdonald_poly(lam, (), basis, params).scale(c)
                rep.expect(lhs == rhs, f"{which}: mu={format_partition(mu)}, r={r}")
    return rep


def duality_suite(params: QTParams, max_size: int = 5, max_r: int = 8) -> SuiteReport:
    rep = SuiteReport("duality")
    swapped = params.swapped()
    for r in range(1, max_r + 1):
        g = g_poly(r, params)
        rep.expect(omega(g, params) == e_poly(r), f"omega(g_{r}) != e_{r}")
        rep.expect(omega(omega(g, params), swapped) == g, f"omega_tq omega_qt (g_{r}) != g_{r}")
    for lam in partitions_upto(max_size):
        for mu in partitions_upto(size(lam)):
            if not contains(mu, lam):
                continue
            lhs = omega(macdonald_poly(lam, mu, "Q", params), params)
            rhs = macdonald_poly(conjugate(lam), conjugate(mu), "P", swapped)
            rep.expect(lhs == rhs, f"omega Q_{{{format_partition(lam)}/{format_partition(mu)}}}")
    return rep


def qgauss_suite(params: QTParams, degree: int = 12,
                 a_values: tuple[Fraction, ...] = (Fraction(0), Fraction(1, 2), Fraction(-2, 3))
                 ) -> SuiteReport:
    """``(az;q)_inf / (z;q)_inf`` from Euler's expansion against the closed coefficients."""
    rep = SuiteReport("qgauss")
    one = pochhammer_inf_series(1, params, degree)
    for a in a_values + (params.t,):
        series = qgauss_series(a, params, degree)
        rep.expect(series * one == pochhammer_inf_series(a, params, degree),
                   f"q-Gauss at a={a}")
    for alpha in (Fraction(1, 2), Fraction(3, 7)):
        lhs = pochhammer_inf_series(params.t * alpha, params, degree) / pochhammer_inf_series(alpha, params, degree)
        rep.expect(lhs == qgauss_series(params.t, params, degree).substitute_scaled(alpha),
                   f"(t alpha z;q)/(alpha z;q) at alpha={alpha}")
    return rep


def schur_suite(value: Fraction, max_size: int = 6) -> SuiteReport:
    """At ``q = t = value``: ``P = Q = S`` (also skew) against Jacobi-Trudi."""
    rep = SuiteReport("schur-degeneration")
    params = QTParams(value, value)
    for lam in partitions_upto(max_size):
        s = schur_jacobi_trudi(lam)
        rep.expect(macdonald_poly(lam, (), "Q", params) == s, f"Q_{format_partition(lam)} != S")
        rep.expect(macdonald_poly(lam, (), "P", params) == s, f"P_{format_partition(lam)} != S")
    for lam in partitions_upto(min(max_size, 5)):
        for mu in partitions_upto(size(lam)):
            if mu and mu != lam and contains(mu, lam):
                rep.expect(macdonald_poly(lam, mu, "Q", params) == schur_jacobi_trudi(lam, mu),
                           f"Q_{{{format_partition(lam)}/{format_partition(mu)}}} != S")
    return rep


def sample_specs(params: QTParams, degree: int):
    """A few specializations used by the harmonicity and union suites."""
    return {
        "alpha(1/2)": alpha_spec(Fraction(1, 2), params, degree),
        "beta_dual(1/3)": beta_dual_spec(Fraction(1, 3), params, degree),
        "plancherel(2/5)": plancherel_spec(Fraction(2, 5), params, degree),
        "kerov": kerov_spec(KerovParams((Fraction(1, 2), Fraction(1, 5)), (Fraction(1, 3),), Fraction(1, 4)),
                            params, degree),
    }


def harmonicity_suite(params: QTParams, max_size: int = 6) -> SuiteReport:
    rep = SuiteReport("harmonicity")
    for name, theta in sample_specs(params, max_size).items():
        h = harmonicity_check(normalize(theta), max_size)
        rep.checked += h.checked
        for mu, lhs, rhs in h.failures:
            rep.failures.append(f"{name}: mu={format_partition(mu)}: {lhs} != {rhs}")
    return rep


def union_suite(params: QTParams, max_size: int = 5) -> SuiteReport:
    """``(th1, th2)(Q_{lam/mu}) = sum_nu th1(Q_{lam/nu}) th2(Q_{nu/mu})``."""
    rep = SuiteReport("union")
    specs = list(sample_specs(params, max_size).items())
    parts = partitions_upto(max_size)
    for k, (n1, t1) in enumerate(specs):
        for n2, t2 in specs[k:]:
            th = union_spec(t1, t2)
            skew = {}

            def val(theta, lam, mu):
                key = (id(theta), lam, mu)
                if key not in skew:
                    skew[key] = evaluate(theta, macdonald_poly(lam, mu, "Q", params))
                return skew[key]

            for lam in parts:
                for mu in parts:
                    if not contains(mu, lam):
                        continue
                    rhs = sum((val(t1, lam, nu) * val(t2, nu, mu) for nu in parts
                               if contains(mu, nu) and contains(nu, lam)), Fraction(0))
                    rep.expect(val(th, lam, mu) == rhs,
                               f"{n1} u {n2}: {format_partition(lam)}/{format_partition(mu)}")
    return rep


SUITES: dict[str, Callable[..., SuiteReport]] = {
    "pieri": pieri_suite,
    "duality": duality_suite,
    "qgauss": qgauss_suite,
    "schur-degeneration": schur_suite,
    "harmonicity": harmonicity_suite,
    "union": union_suite,
}

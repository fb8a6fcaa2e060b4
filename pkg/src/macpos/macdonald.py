"""Macdonald functions in the monomial basis at fixed rational (q, t).

Every symmetric function is a :class:`SymFunc`, a finite combination of
monomial symmetric functions ``m_mu``.  Coefficients of ``P_lam`` and
``Q_lam`` come from the tableau sum, organised as sums over chains of
horizontal strips (:func:`chain_sums`); the (q, t)-dependence enters only
through the branching coefficients.
"""
from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .partitions import (
    Box,
    Partition,
    conjugate,
    contains,
    dominates,
    enumerate_partitions,
    enumerate_strip_extensions,
    format_partition,
    in_shape,
    is_horizontal_strip,
    is_vertical_strip,
    order_key,
    parse_partition,
    part,
    partitions_upto,
    size,
    skew_boxes,
)
from .qt import QTParams, Rational, format_rational, parse_rational, q_pochhammer


# --- monomial structure constants ------------------------------------------

def _distinct_permutations(items: Sequence[int]) -> Iterable[tuple[int, ...]]:
    counts: dict[int, int] = defaultdict(int)
    for x in items:
        counts[x] += 1
    keys = sorted(counts)
    n = len(items)
    out: list[int] = []

    def rec():
        if len(out) == n:
            yield tuple(out)
            return
        for k in keys:
            if counts[k]:
                counts[k] -= 1
                out.append(k)
                yield from rec()
                out.pop()
                counts[k] += 1

    yield from rec()


@lru_cache(maxsize=None)
def monomial_product(alpha: Partition, beta: Partition) -> Mapping[Partition, int]:
    """Integer structure constants: ``m_alpha m_beta = sum_gamma N[gamma] m_gamma``.

    ``N[gamma]`` counts exponent vectors ``b``, a rearrangement of ``beta``
    padded to the length of ``gamma``, for which ``gamma - b`` rearranges to
    ``alpha``.
    """
    if len(alpha) < len(beta):
        alpha, beta = beta, alpha
    if not beta:
        return {alpha: 1}
    n = size(alpha) + size(beta)
    target = sorted(alpha)
    out: dict[Partition, int] = {}
    for gamma in enumerate_partitions(n):
        L = len(gamma)
        if L < len(alpha) or L > len(alpha) + len(beta):
            continue
        count = 0
        for b in _distinct_permutations(tuple(beta) + (0,) * (L - len(beta))):
            diff = [g - x for g, x in zip(gamma, b)]
            if min(diff) < 0:
                continue
            if sorted(x for x in diff if x) == target:
                count += 1
        if count:
            out[gamma] = count
    return out


# --- symmetric functions ----------------------------------------------------

class SymFunc:
    """A symmetric function ``sum coeffs[mu] m_mu`` with ``|mu| <= degree_bound``.

    Equality compares coefficients only.  Instances are treated as immutable.
    """

    __slots__ = ("degree_bound", "coeffs")

    def __init__(self, coeffs: Mapping[Partition, Rational] | None = None,
                 degree_bound: int | None = None):
        clean = {tuple(mu): Fraction(c) for mu, c in (coeffs or {}).items() if c != 0}
        top = max((size(mu) for mu in clean), default=0)
        if degree_bound is None:
            degree_bound = top
        elif top > degree_bound:
            raise ValueError(f"term of degree {top} exceeds degree bound {degree_bound}")
        self.degree_bound = degree_bound
        self.coeffs: dict[Partition, Fraction] = clean

    @classmethod
    def one(cls) -> "SymFunc":
        return cls({(): 1})

    def coeff(self, mu: Partition) -> Fraction:
        return self.coeffs.get(tuple(mu), Fraction(0))

    def __eq__(self, other) -> bool:
        if not isinstance(other, SymFunc):
            return NotImplemented
        return self.coeffs == other.coeffs

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        if not self.coeffs:
            return "SymFunc(0)"
        terms = " + ".join(f"({c})·m[{format_partition(mu)}]"
                           for mu, c in sorted(self.coeffs.items(), key=lambda kv: order_key(kv[0])))
        return f"SymFunc({terms})"

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "SymFunc") -> "SymFunc":
        out = dict(self.coeffs)
        for mu, c in other.coeffs.items():
            out[mu] = out.get(mu, 0) + c
        return SymFunc(out, max(self.degree_bound, other.degree_bound))

    def __neg__(self) -> "SymFunc":
        return SymFunc({mu: -c for mu, c in self.coeffs.items()}, self.degree_bound)

    def __sub__(self, other: "SymFunc") -> "SymFunc":
        return self + (-other)

    def scale(self, c: Rational) -> "SymFunc":
        return SymFunc({mu: c * x for mu, x in self.coeffs.items()}, self.degree_bound)

    def __mul__(self, other) -> "SymFunc":
        if not isinstance(other, SymFunc):
            return self.scale(other)
        out: dict[Partition, Fraction] = defaultdict(Fraction)
        for a, ca in self.coeffs.items():
            for b, cb in other.coeffs.items():
                cab = ca * cb
                for g, n in monomial_product(a, b).items():
                    out[g] += n * cab
        return SymFunc(out, self.degree_bound + other.degree_bound)

    def __rmul__(self, other) -> "SymFunc":
        return self.scale(other)

    def homogeneous(self, n: int) -> "SymFunc":
        return SymFunc({mu: c for mu, c in self.coeffs.items() if size(mu) == n}, self.degree_bound)

    def to_json(self) -> dict:
        terms = [{"partition": format_partition(mu), "coeff": format_rational(c)}
                 for mu, c in sorted(self.coeffs.items(), key=lambda kv: order_key(kv[0]))]
        return {"degree_bound": self.degree_bound, "terms": terms}

    @classmethod
    def from_json(cls, data: Mapping) -> "SymFunc":
        coeffs = {parse_partition(t["partition"]): parse_rational(t["coeff"]) for t in data["terms"]}
        return cls(coeffs, int(data["degree_bound"]))


def monomial(mu: Partition) -> SymFunc:
    return SymFunc({tuple(mu): 1})


def e_poly(r: int) -> SymFunc:
    """Elementary ``e_r = m_{(1^r)}``."""
    return SymFunc({(1,) * r: 1}, r)


def h_poly(r: int) -> SymFunc:
    """Complete homogeneous ``h_r``: every monomial of degree ``r`` once."""
    if r < 0:
        return SymFunc({}, 0)
    return SymFunc({mu: 1 for mu in enumerate_partitions(r)}, r)


def p_poly(r: int) -> SymFunc:
    """Power sum ``p_r = m_{(r)}``."""
    return SymFunc({(r,): 1} if r else {(): 1}, r)


# --- b-factors and branching coefficients ------------------------------------

def b_factor(lam: Partition, box: Box, params: QTParams) -> Fraction:
    """Arm/leg factor ``(1 - q^a t^{l+1}) / (1 - q^{a+1} t^l)``; 1 outside ``lam``."""
    lam = tuple(lam)
    if not in_shape(lam, box):
        return Fraction(1)
    i, j = box
    arm = lam[i - 1] - j
    leg = conjugate(lam)[j - 1] - i
    q, t = params.q, params.t
    return (1 - q ** arm * t ** (leg + 1)) / (1 - q ** (arm + 1) * t ** leg)


@lru_cache(maxsize=None)
def b_const(lam: Partition, params: QTParams) -> Fraction:
    out = Fraction(1)
    for i, row in enumerate(lam, 1):
        for j in range(1, row + 1):
            out *= b_factor(lam, (i, j), params)
    return out


BRANCHING_KINDS = ("psi", "phi", "psi_prime", "phi_prime")


@lru_cache(maxsize=None)
def branching(mu: Partition, lam: Partition, kind: str, params: QTParams) -> Fraction:
    """Branching coefficients ``psi, phi`` (horizontal strips) and
    ``psi', phi'`` (vertical strips) of the skew shape ``lam / mu``."""
    mu, lam = tuple(mu), tuple(lam)
    if kind in ("psi", "phi"):
        if not is_horizontal_strip(mu, lam):
            raise ValueError(f"{format_partition(lam)}/{format_partition(mu)} is not a horizontal strip")
    elif kind in ("psi_prime", "phi_prime"):
        if not is_vertical_strip(mu, lam):
            raise ValueError(f"{format_partition(lam)}/{format_partition(mu)} is not a vertical strip")
    else:
        raise ValueError(f"unknown branching kind {kind!r}")
    added = skew_boxes(lam, mu)
    rows = {i for i, _ in added}
    cols = {j for _, j in added}
    lam_boxes = [(i, j) for i, r in enumerate(lam, 1) for j in range(1, r + 1)]
    in_r = [s for s in lam_boxes if s[0] in rows]
    in_c = [s for s in lam_boxes if s[1] in cols]

    def ratio(s: Box) -> Fraction:  # b_mu(s) / b_lam(s)
        return b_factor(mu, s, params) / b_factor(lam, s, params)

    out = Fraction(1)
    if kind == "psi":
        for s in in_r:
            if s[1] not in cols:
                out *= ratio(s)
    elif kind == "phi":
        for s in in_c:
            out /= ratio(s)
    elif kind == "psi_prime":
        for s in in_c:
            if s[0] not in rows:
                out /= ratio(s)
    else:
        for s in in_r:
            out *= ratio(s)
    return out


@lru_cache(maxsize=None)
def chain_sums(start: Partition, content: Partition, weight: str,
               params: QTParams) -> Mapping[Partition, Fraction]:
    """Sum over chains ``start = T0 ⊆ T1 ⊆ ...`` of horizontal strips of sizes
    ``content``, weighted by the product of ``psi`` or ``phi`` along the chain.

    The value at ``lam`` is the coefficient of ``x^content`` in ``P_{lam/start}``
    (weight ``"psi"``) or ``Q_{lam/start}`` (weight ``"phi"``).  The returned
    mapping is shared by the cache and must not be mutated.
    """
    if not content:
        return {start: Fraction(1)}
    prev = chain_sums(start, content[:-1], weight, params)
    out: dict[Partition, Fraction] = defaultdict(Fraction)
    for kappa, c in prev.items():
        for lam in enumerate_strip_extensions(kappa, content[-1], "horizontal"):
            out[lam] += c * branching(kappa, lam, weight, params)
    return dict(out)


# --- Macdonald functions ------------------------------------------------------

def macdonald_poly(lam: Partition, inner: Partition = (), kind: str = "P",
                   params: QTParams | None = None, degree: int | None = None) -> SymFunc:
    """``P_{lam/inner}`` or ``Q_{lam/inner}`` in the monomial basis."""
    if params is None:
        raise ValueError("macdonald_poly needs QTParams")
    lam, inner = tuple(lam), tuple(inner)
    if not contains(inner, lam):
        raise ValueError(f"{inner} is not contained in {lam}")
    if kind not in ("P", "Q"):
        raise ValueError(f"kind must be 'P' or 'Q', got {kind!r}")
    n = size(lam) - size(inner)
    if degree is None:
        degree = n
    if degree < n:
        raise ValueError(f"degree bound {degree} below {n}")
    weight = "psi" if kind == "P" else "phi"
    coeffs = {nu: chain_sums(inner, nu, weight, params).get(lam, 0)
              for nu in enumerate_partitions(n)}
    return SymFunc(coeffs, degree)


def g_poly(r: int, params: QTParams, degree: int | None = None) -> SymFunc:
    """``g_r = Q_{(r)}`` directly from the product of Pochhammer ratios."""
    q, t = params.q, params.t
    ratio = [q_pochhammer(t, q, k) / q_pochhammer(q, q, k) for k in range(r + 1)]
    coeffs = {}
    for mu in enumerate_partitions(r):
        c = Fraction(1)
        for p in mu:
            c *= ratio[p]
        coeffs[mu] = c
    return SymFunc(coeffs, r if degree is None else degree)


PIERI_RULES = {
    # multiplier, basis, strip kind, coefficient
    "g_times_Q": ("g", "Q", "horizontal", "psi"),
    "g_times_P": ("g", "P", "horizontal", "phi"),
    "e_times_Q": ("e", "Q", "vertical", "phi_prime"),
    "e_times_P": ("e", "P", "vertical", "psi_prime"),
}


def pieri_expand(mu: Partition, r: int, which: str,
                 params: QTParams) -> list[tuple[Partition, Fraction]]:
    """Coefficients of ``basis_mu * multiplier_r`` in the same basis."""
    if r < 1:
        raise ValueError("Pieri needs r >= 1")
    try:
        _, _, strip, kind = PIERI_RULES[which]
    except KeyError:
        raise ValueError(f"unknown Pieri rule {which!r}") from None
    return [(lam, branching(tuple(mu), lam, kind, params))
            for lam in enumerate_strip_extensions(tuple(mu), r, strip)]


# --- transition matrix g_mu = sum_nu c(nu, mu) Q_nu ----------------------------

def transition_entry(nu: Partition, mu: Partition, params: QTParams) -> Fraction:
    """``c(nu, mu)``, summed over tableaux of shape ``nu`` and content ``mu``."""
    return chain_sums((), tuple(mu), "psi", params).get(tuple(nu), Fraction(0))


class TransitionMatrix:
    """``c(nu, mu)`` and its inverse over all partitions of size ``<= D``."""

    def __init__(self, degree: int, params: QTParams):
        self.degree = degree
        self.params = params
        self.order = partitions_upto(degree)
        self.entries: dict[tuple[Partition, Partition], Fraction] = {}
        self.inverse: dict[tuple[Partition, Partition], Fraction] = {}
        for n in range(degree + 1):
            block = enumerate_partitions(n)
            for mu in block:
                for nu, c in chain_sums((), mu, "psi", params).items():
                    if c:
                        self.entries[(nu, mu)] = c
            for mu in block:
                for nu, c in _inverse_block_column(mu, block, params).items():
                    self.inverse[(nu, mu)] = c

    def c(self, nu: Partition, mu: Partition) -> Fraction:
        return self.entries.get((tuple(nu), tuple(mu)), Fraction(0))

    def inv(self, nu: Partition, mu: Partition) -> Fraction:
        return self.inverse.get((tuple(nu), tuple(mu)), Fraction(0))

    def as_rows(self, inverse: bool = False) -> list[list[Fraction]]:
        get = self.inv if inverse else self.c
        return [[get(a, b) for b in self.order] for a in self.order]


def transition_matrix(degree: int, params: QTParams) -> TransitionMatrix:
    return TransitionMatrix(degree, params)


def _inverse_block_column(lam: Partition, block: Sequence[Partition],
                          params: QTParams) -> dict[Partition, Fraction]:
    """Column ``lam`` of the inverse, by back-substitution over ``block``
    (an upward-closed set of partitions in canonical order)."""
    idx = block.index(lam)
    x: dict[Partition, Fraction] = {lam: Fraction(1)}
    # rows after lam in the order vanish; solve upwards
    for k in range(idx - 1, -1, -1):
        nu = block[k]
        acc = Fraction(0)
        for kappa, xk in x.items():
            c = transition_entry(nu, kappa, params)
            if c:
                acc += c * xk
        if acc:
            x[nu] = -acc
    return x


@lru_cache(maxsize=None)
def inverse_column(lam: Partition, params: QTParams) -> Mapping[Partition, Fraction]:
    """``(M^{-1})_{nu, lam}`` for all ``nu``, so ``Q_lam = sum_nu M^{-1}[nu, lam] g_nu``.

    Only ``nu`` dominating ``lam`` can contribute, and that set is closed
    upwards, so the restricted system is solved directly.
    """
    lam = tuple(lam)
    block = [nu for nu in enumerate_partitions(size(lam)) if dominates(nu, lam)]
    return _inverse_block_column(lam, block, params)


# --- change of basis ----------------------------------------------------------

def expand_in_P(f: SymFunc, params: QTParams) -> dict[Partition, Fraction]:
    """Coefficients of ``f`` in the ``P`` basis.

    ``P_kappa = m_kappa + (lower terms)`` with lower meaning dominated, so
    peeling off the lexicographically largest monomial each time works.
    """
    remaining = dict(f.coeffs)
    out: dict[Partition, Fraction] = {}
    for n in sorted({size(mu) for mu in remaining}):
        for kappa in enumerate_partitions(n):
            c = remaining.get(kappa)
            if not c:
                continue
            out[kappa] = c
            for nu, x in macdonald_poly(kappa, (), "P", params).coeffs.items():
                remaining[nu] = remaining.get(nu, 0) - c * x
    return out


def expand_in_Q(f: SymFunc, params: QTParams) -> dict[Partition, Fraction]:
    return {lam: c / b_const(lam, params) for lam, c in expand_in_P(f, params).items()}


def to_g_basis(f: SymFunc, params: QTParams) -> dict[Partition, Fraction]:
    """Coefficients of ``f`` on the products ``g_nu = prod_i g_{nu_i}``."""
    out: dict[Partition, Fraction] = defaultdict(Fraction)
    for lam, c in expand_in_Q(f, params).items():
        for nu, x in inverse_column(lam, params).items():
            out[nu] += c * x
    return {nu: c for nu, c in out.items() if c}


def _product_of(factors: Iterable[SymFunc]) -> SymFunc:
    out = SymFunc.one()
    for f in factors:
        out = out * f
    return out


def from_g_basis(coeffs: Mapping[Partition, Rational], params: QTParams) -> SymFunc:
    out = SymFunc({})
    for nu, c in coeffs.items():
        out = out + _product_of(g_poly(r, params) for r in nu).scale(c)
    return out


def omega(f: SymFunc, params: QTParams) -> SymFunc:
    """The involution ``omega_{q,t}`` (``g_r -> e_r``) applied to ``f``.

    The result is a symmetric function to be read with parameters ``(t, q)``.
    """
    out = SymFunc({}, f.degree_bound)
    for nu, c in to_g_basis(f, params).items():
        out = out + _product_of(e_poly(r) for r in nu).scale(c)
    return SymFunc(out.coeffs, f.degree_bound)


def lr_coefficient(lam: Partition, mu: Partition, nu: Partition, params: QTParams) -> Fraction:
    """``c^nu_{lam, mu}`` in ``P_mu P_lam = sum_nu c^nu_{lam,mu} P_nu``."""
    lam, mu, nu = tuple(lam), tuple(mu), tuple(nu)
    if size(nu) != size(lam) + size(mu):
        raise ValueError("need |nu| = |lam| + |mu|")
    prod = macdonald_poly(lam, (), "P", params) * macdonald_poly(mu, (), "P", params)
    return expand_in_P(prod, params).get(nu, Fraction(0))


def lr_expansion(lam: Partition, mu: Partition, params: QTParams) -> dict[Partition, Fraction]:
    prod = macdonald_poly(lam, (), "P", params) * macdonald_poly(mu, (), "P", params)
    return expand_in_P(prod, params)


# --- Schur functions by Jacobi-Trudi --------------------------------------------

def schur_jacobi_trudi(lam: Partition, mu: Partition = (), degree: int | None = None) -> SymFunc:
    """Skew Schur function ``det(h_{lam_i - mu_j - i + j})`` by cofactor expansion.

    Uses only ``h_r`` in the monomial basis, independent of any Macdonald data.
    """
    lam, mu = tuple(lam), tuple(mu)
    n_boxes = size(lam) - size(mu)
    if degree is None:
        degree = max(n_boxes, 0)
    if not contains(mu, lam):
        return SymFunc({}, degree)
    n = len(lam)
    h_cache: dict[int, SymFunc] = {}

    def h(r: int) -> SymFunc:
        if r not in h_cache:
            h_cache[r] = h_poly(r) if r >= 0 else SymFunc({}, 0)
        return h_cache[r]

    memo: dict[tuple[int, tuple[int, ...]], SymFunc] = {}

    def minor(row: int, cols: tuple[int, ...]) -> SymFunc:
        # determinant of rows row..n-1 against the given columns
        if row == n:
            return SymFunc.one()
        key = (row, cols)
        if key in memo:
            return memo[key]
        acc = SymFunc({})
        for k, col in enumerate(cols):
            entry = h(part(lam, row + 1) - part(mu, col + 1) - (row + 1) + (col + 1))
            if entry.is_zero():
                continue
            term = entry * minor(row + 1, cols[:k] + cols[k + 1:])
            acc = acc + (term if k % 2 == 0 else -term)
        memo[key] = acc
        return acc

    return SymFunc(minor(0, tuple(range(n))).coeffs, degree)

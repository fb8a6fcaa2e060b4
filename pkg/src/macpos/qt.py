"""Exact rationals at fixed (q, t) and truncated power series in z."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

Rational = Union[Fraction, int]

DEFAULT_DEGREE = 12
MAX_DEGREE = 64


def parse_rational(text: Union[str, Rational]) -> Fraction:
    """Parse ``"p/q"``, an integer literal, or a finite decimal into a ``Fraction``."""
    if isinstance(text, (Fraction, int)):
        return Fraction(text)
    try:
        return Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational literal: {text!r}") from exc


def format_rational(x: Rational) -> str:
    return str(Fraction(x))


@dataclass(frozen=True)
class QTParams:
    """Fixed rational Macdonald parameters with ``|q|, |t| < 1``."""

    q: Fraction
    t: Fraction

    def __post_init__(self):
        object.__setattr__(self, "q", parse_rational(self.q))
        object.__setattr__(self, "t", parse_rational(self.t))
        if not (abs(self.q) < 1 and abs(self.t) < 1):
            raise ValueError(f"need |q| < 1 and |t| < 1, got q={self.q}, t={self.t}")

    def swapped(self) -> "QTParams":
        return QTParams(self.t, self.q)

    def __str__(self) -> str:
        return f"q={self.q}, t={self.t}"


def q_pochhammer(a: Rational, q: Rational, k: int) -> Fraction:
    """``(a; q)_k = prod_{m=1..k} (1 - a q^{m-1})``."""
    if k < 0:
        raise ValueError("Pochhammer length must be non-negative")
    out = Fraction(1)
    qm = Fraction(1)
    for _ in range(k):
        out *= 1 - a * qm
        qm *= q
    return out


class TruncatedSeries:
    """Power series ``sum_{n<=N} c_n z^n`` with exact coefficients.

    Binary operations truncate at the smaller of the two degrees.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Rational], degree: int | None = None):
        cs = [Fraction(c) for c in coeffs]
        if degree is not None:
            if degree < 0:
                raise ValueError("degree must be non-negative")
            cs = (cs + [Fraction(0)] * (degree + 1))[: degree + 1]
        if not cs:
            raise ValueError("a series needs at least a constant term")
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def one(cls, degree: int) -> "TruncatedSeries":
        return cls([1], degree)

    @classmethod
    def zero(cls, degree: int) -> "TruncatedSeries":
        return cls([0], degree)

    def __getitem__(self, n: int) -> Fraction:
        return self.coeffs[n]

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"TruncatedSeries([{', '.join(map(str, self.coeffs))}])"

    def truncate(self, degree: int) -> "TruncatedSeries":
        return TruncatedSeries(self.coeffs, degree)

    def _common(self, other: "TruncatedSeries") -> int:
        return min(self.degree, other.degree)

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        n = self._common(other)
        return TruncatedSeries(a + b for a, b in zip(self.coeffs[: n + 1], other.coeffs[: n + 1]))

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return self + (-other)

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(-c for c in self.coeffs)

    def scale(self, c: Rational) -> "TruncatedSeries":
        return TruncatedSeries(c * x for x in self.coeffs)

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return self.scale(other)
        n = self._common(other)
        a, b = self.coeffs, other.coeffs
        return TruncatedSeries(sum((a[k] * b[m - k] for k in range(m + 1)), Fraction(0))
                               for m in range(n + 1))

    __rmul__ = scale

    def __truediv__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return self.scale(Fraction(1) / Fraction(other))
        if other.coeffs[0] == 0:
            raise ZeroDivisionError("series division needs a nonzero constant term")
        n = self._common(other)
        a, b = self.coeffs, other.coeffs
        inv0 = 1 / b[0]
        out: list[Fraction] = []
        for m in range(n + 1):
            acc = a[m] - sum((b[k] * out[m - k] for k in range(1, m + 1)), Fraction(0))
            out.append(acc * inv0)
        return TruncatedSeries(out)

    def substitute_scaled(self, c: Rational) -> "TruncatedSeries":
        """The series in ``c z``: coefficient ``n`` becomes ``c^n a_n``."""
        out, cn = [], Fraction(1)
        for x in self.coeffs:
            out.append(x * cn)
            cn *= c
        return TruncatedSeries(out)

    def exp(self) -> "TruncatedSeries":
        """``exp`` of a series with zero constant term.

        Uses ``n f_n = sum_{k=1..n} k g_k f_{n-k}`` from ``f' = g' f``.
        """
        if self.coeffs[0] != 0:
            raise ValueError("exp needs a zero constant term")
        g = self.coeffs
        f = [Fraction(1)]
        for n in range(1, len(g)):
            f.append(sum((k * g[k] * f[n - k] for k in range(1, n + 1)), Fraction(0)) / n)
        return TruncatedSeries(f)

    def log(self) -> "TruncatedSeries":
        """``log`` of a series with constant term 1."""
        if self.coeffs[0] != 1:
            raise ValueError("log needs constant term 1")
        f = self.coeffs
        g = [Fraction(0)]
        for n in range(1, len(f)):
            acc = n * f[n] - sum((k * g[k] * f[n - k] for k in range(1, n)), Fraction(0))
            g.append(acc / n)
        return TruncatedSeries(g)

    def to_json(self) -> list[str]:
        return [format_rational(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence[str]) -> "TruncatedSeries":
        return cls(parse_rational(x) for x in data)


def qgauss_series(a: Rational, params: QTParams, degree: int) -> TruncatedSeries:
    """Truncation of ``(a z; q)_inf / (z; q)_inf``: coefficients ``(a;q)_n / (q;q)_n``."""
    q = params.q
    out, num, den, qn = [], Fraction(1), Fraction(1), Fraction(1)
    for n in range(degree + 1):
        out.append(num / den)
        num *= 1 - a * qn
        qn *= q
        den *= 1 - qn
    return TruncatedSeries(out)


def pochhammer_inf_series(alpha: Rational, params: QTParams, degree: int) -> TruncatedSeries:
    """Truncation of ``(alpha z; q)_inf`` by Euler's expansion
    ``sum_n (-1)^n q^{n(n-1)/2} alpha^n z^n / (q;q)_n``."""
    q = params.q
    out = []
    den = Fraction(1)
    for n in range(degree + 1):
        if n:
            den *= 1 - q ** n
        out.append((-1) ** n * q ** (n * (n - 1) // 2) * Fraction(alpha) ** n / den)
    return TruncatedSeries(out)


def exp_linear(gamma: Rational, degree: int) -> TruncatedSeries:
    """Truncation of ``exp(gamma z)``."""
    return TruncatedSeries([0, gamma], degree).exp()

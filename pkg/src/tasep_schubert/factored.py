"""Partially factored polynomials: monomial * product of linear binomials * core.

The z-deformed stationary polynomials are dominated by linear factors
(z_i - x_j), (z_i - y_j), (x_i - y_j); keeping those factors unexpanded keeps
every intermediate object desk-sized even at ring size 5 with general y.
The factored form is canonical: the core has no remaining candidate binomial
divisor, no monomial content, and a positive leading coefficient, so two
equal polynomials always have structurally equal factored forms.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from .polyring import (
    Polynomial, VarRef, X, Y, Z, NotDivisible,
    divide_linear, divide_monomial, divided_difference_pair, evaluate,
    leading_coeff_z, swap_vars, var_name, xvar, yvar, zvar,
)

# A linear factor (a, b) stands for the binomial (v_a - v_b); (a, None) is v_a.
Factor = tuple


def factor_poly(f: Factor) -> Polynomial:
    a, b = f
    return Polynomial.linear(a, b)


def factor_name(f: Factor) -> str:
    a, b = f
    return f"({var_name(a)}-{var_name(b)})" if b else var_name(a)


def _factor_key(f: Factor):
    a, b = f
    return (a, b if b is not None else ("", 0))


@dataclass(frozen=True)
class FactoredPolynomial:
    """sign * monomial * prod(factors) * core, with core canonical."""

    sign: int
    monomial: tuple            # ((VarRef, exp), ...) sorted
    factors: tuple             # ((Factor, mult), ...) sorted
    core: Polynomial

    @staticmethod
    def one() -> "FactoredPolynomial":
        return FactoredPolynomial(1, (), (), Polynomial.const(1))

    def factor_counter(self) -> Counter:
        return Counter(dict(self.factors))

    def is_zero(self) -> bool:
        return self.core.is_zero()

    def degree(self) -> int:
        return (
            sum(e for _, e in self.monomial)
            + sum(m for _, m in self.factors)
            + self.core.total_degree()
        )

    def expand(self) -> Polynomial:
        p = Polynomial.monomial(self.monomial, self.sign) * self.core
        for f, mult in self.factors:
            p = p * factor_poly(f) ** mult
        return p

    def lc_z(self) -> Polynomial:
        """LC_z distributes over the factorization.

        Factors (z_i - v) contribute 1, z-free factors contribute themselves,
        the z-part of the monomial contributes 1, and the core contributes
        its own LC_z.
        """
        p = leading_coeff_z(self.core) if self.core else Polynomial.zero()
        mono = [(v, e) for v, e in self.monomial if v[0] != Z]
        p = Polynomial.monomial(mono, self.sign) * p
        for (a, b), mult in self.factors:
            if a[0] != Z:
                p = p * factor_poly((a, b)) ** mult
        return p

    def evaluate(self, point: Mapping[VarRef, int | Fraction]) -> Fraction:
        val = Fraction(self.sign)
        for v, e in self.monomial:
            val *= Fraction(point[v]) ** e
        for f, mult in self.factors:
            val *= Fraction(evaluate(factor_poly(f), point)) ** mult
        return val * evaluate(self.core, point)

    def text(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        if self.sign < 0:
            parts.append("-1")
        for v, e in self.monomial:
            parts.append(var_name(v) + (f"^{e}" if e > 1 else ""))
        for f, mult in sorted(self.factors, key=lambda t: _factor_key(t[0])):
            parts.append(factor_name(f) + (f"^{mult}" if mult > 1 else ""))
        if self.core != 1:
            parts.append("(" + self.core.text() + ")")
        return "*".join(parts) if parts else "1"

    def __mul__(self, other: "FactoredPolynomial") -> "FactoredPolynomial":
        mono = Counter(dict(self.monomial))
        mono.update(dict(other.monomial))
        fac = Counter(dict(self.factors))
        fac.update(dict(other.factors))
        return FactoredPolynomial(
            self.sign * other.sign,
            tuple(sorted(mono.items())),
            tuple(sorted(fac.items(), key=lambda t: _factor_key(t[0]))),
            self.core * other.core,
        )


def candidate_factors(n: int, y_zero: bool) -> list[Factor]:
    """All linear binomials the canonical form factors against, ring size n."""
    out: list[Factor] = []
    for i in range(1, n + 1):
        for j in range(1, n):
            out.append((zvar(i), xvar(j)))
            if not y_zero:
                out.append((zvar(i), yvar(j)))
    if not y_zero:
        for i in range(1, n):
            for j in range(1, n):
                out.append((xvar(i), yvar(j)))
    return out


def _divides_linear(core: Polynomial, a: VarRef, b: VarRef) -> bool:
    """Cheap test: (v_a - v_b) | core  iff  core|_{a=b} == 0."""
    acc: dict[int, int] = {}
    from .polyring import _shift_of, _EXP_MASK  # fast-path internals
    sa, sb = _shift_of(a), _shift_of(b)
    for m, c in core.terms.items():
        e = (m >> sa) & _EXP_MASK
        if e:
            m = m - (e << sa) + (e << sb)
        nc = acc.get(m, 0) + c
        if nc:
            acc[m] = nc
        else:
            del acc[m]
    return not acc


def normalize(sign: int, mono: Counter, fac: Counter, core: Polynomial,
              candidates: Iterable[Factor]) -> FactoredPolynomial:
    """Canonicalize: strip content, pull out every candidate binomial."""
    if core.is_zero():
        return FactoredPolynomial(1, (), (), Polynomial.zero())
    from .polyring import max_monomial_factor
    mono = Counter(mono)
    for block in (Z, X, Y):
        for v, e in max_monomial_factor(core, block):
            mono[v] += e
            core = divide_monomial(core, [(v, e)])
    fac = Counter(fac)
    for cand in candidates:
        a, b = cand
        while _divides_linear(core, a, b):
            q = divide_linear(core, a, b)
            assert q is not None
            core = q
            fac[cand] += 1
    lead = _leading_sign(core)
    if lead < 0:
        core = -core
        sign = -sign
    return FactoredPolynomial(
        sign,
        tuple(sorted({v: e for v, e in mono.items() if e}.items())),
        tuple(sorted(({f: m for f, m in fac.items() if m}).items(),
                     key=lambda t: _factor_key(t[0]))),
        core,
    )


def _leading_sign(p: Polynomial) -> int:
    from .polyring import _mono_key
    lead = min(p.terms, key=_mono_key)
    return 1 if p.terms[lead] > 0 else -1

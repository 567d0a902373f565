"""Exact sparse multivariate polynomial arithmetic over three variable blocks.

Polynomials live in Z[x_1..x_{n-1}; y_1..y_{n-1}; z_1..z_n] for whatever ring
size n the caller needs.  A monomial is packed into a single Python integer:
each variable owns an 8-bit exponent field (fields are allocated on demand by
a process-global registry), so multiplying monomials is integer addition.
Coefficients are arbitrary-precision signed integers; zero coefficients and
zero exponents are never stored.

Block order for the canonical term order is z, then x, then y; terms compare
graded-lexicographically (total degree first).
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Iterable, Mapping, Union

# Variable blocks.  The numeric values fix the canonical precedence z < x < y
# (z-block variables come first in the term order).
Z, X, Y = 0, 1, 2
_BLOCK_NAMES = {Z: "z", X: "x", Y: "y"}
_NAME_BLOCKS = {"z": Z, "x": X, "y": Y}

# VarRef: (block, index) with 1-based index.
VarRef = tuple

_EXP_BITS = 8
_EXP_MASK = (1 << _EXP_BITS) - 1
_MAX_EXP = _EXP_MASK


class PolynomialError(Exception):
    pass


class NotDivisible(PolynomialError):
    """Exact division left a nonzero remainder."""


class BlockMismatch(PolynomialError):
    """Variable swap across different blocks."""


class NonUniqueLeadingTerm(PolynomialError):
    """Max z-degree part involves more than one z-monomial."""


class ZeroPolynomial(PolynomialError):
    pass


def var(block: int, index: int) -> VarRef:
    if index < 1:
        raise ValueError(f"variable index must be >= 1, got {index}")
    return (block, index)


def xvar(i: int) -> VarRef:
    return var(X, i)


def yvar(i: int) -> VarRef:
    return var(Y, i)


def zvar(i: int) -> VarRef:
    return var(Z, i)


def var_name(v: VarRef) -> str:
    return f"{_BLOCK_NAMES[v[0]]}{v[1]}"


def parse_var(name: str) -> VarRef:
    return var(_NAME_BLOCKS[name[0]], int(name[1:]))


# ---------------------------------------------------------------------------
# Global variable registry: VarRef -> bit shift.  Append-only, shared by all
# polynomials in the process; packed-integer monomials are only comparable
# through the canonical (block, index) decode, never by raw slot order.
# ---------------------------------------------------------------------------

_SHIFT: dict[VarRef, int] = {}
_SLOT_VARS: list[VarRef] = []


def _shift_of(v: VarRef) -> int:
    s = _SHIFT.get(v)
    if s is None:
        s = len(_SLOT_VARS) * _EXP_BITS
        _SHIFT[v] = s
        _SLOT_VARS.append(v)
    return s


def _mono_from_pairs(pairs: Iterable[tuple[VarRef, int]]) -> int:
    m = 0
    for v, e in pairs:
        if e < 0 or e > _MAX_EXP:
            raise ValueError(f"exponent {e} out of range for {var_name(v)}")
        if e:
            m += e << _shift_of(v)
    return m


def _mono_decode(m: int) -> list[tuple[VarRef, int]]:
    """Decode a packed monomial to [(VarRef, exp)] sorted by (block, index)."""
    out = []
    slot = 0
    while m:
        e = m & _EXP_MASK
        if e:
            out.append((_SLOT_VARS[slot], e))
        m >>= _EXP_BITS
        slot += 1
    out.sort()
    return out


def _mono_exp(m: int, v: VarRef) -> int:
    return (m >> _shift_of(v)) & _EXP_MASK


def _mono_without(m: int, v: VarRef) -> tuple[int, int]:
    """Split off the exponent of v: returns (exponent, monomial with v removed)."""
    s = _shift_of(v)
    e = (m >> s) & _EXP_MASK
    return e, m - (e << s)


def _mono_key(m: int):
    """Graded-lex sort key (z-block first, then x, then y; higher degree first)."""
    pairs = _mono_decode(m)
    deg = sum(e for _, e in pairs)
    # For lex-descending comparison we want the exponent vector in canonical
    # variable order; missing variables count as 0, so encode as a tuple of
    # (var, -exp) and rely on tuple comparison after sorting.
    vec = tuple((v, -e) for v, e in pairs)
    return (-deg, vec)


class Polynomial:
    """Immutable sparse polynomial with integer coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[int, int] | None = None, _trusted: bool = False):
        if terms is None:
            object.__setattr__(self, "terms", {})
        elif _trusted:
            object.__setattr__(self, "terms", terms)
        else:
            object.__setattr__(self, "terms", {m: c for m, c in terms.items() if c})

    def __setattr__(self, *a):
        raise AttributeError("Polynomial is immutable")

    # -- constructors -------------------------------------------------------

    @staticmethod
    def zero() -> "Polynomial":
        return _ZERO

    @staticmethod
    def const(c: int) -> "Polynomial":
        return Polynomial({0: int(c)})

    @staticmethod
    def variable(v: VarRef) -> "Polynomial":
        return Polynomial({_mono_from_pairs([(v, 1)]): 1}, _trusted=True)

    @staticmethod
    def monomial(pairs: Iterable[tuple[VarRef, int]], coeff: int = 1) -> "Polynomial":
        if coeff == 0:
            return _ZERO
        return Polynomial({_mono_from_pairs(pairs): coeff}, _trusted=True)

    @staticmethod
    def linear(a: VarRef, b: VarRef | None = None) -> "Polynomial":
        """The binomial (v_a - v_b), or just v_a when b is None."""
        if b is None:
            return Polynomial.variable(a)
        ma = _mono_from_pairs([(a, 1)])
        mb = _mono_from_pairs([(b, 1)])
        return Polynomial({ma: 1, mb: -1}, _trusted=True)

    # -- basics --------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self.terms == ({0: other} if other else {})
        if isinstance(other, Polynomial):
            return self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __neg__(self) -> "Polynomial":
        return Polynomial({m: -c for m, c in self.terms.items()}, _trusted=True)

    def __add__(self, other) -> "Polynomial":
        if isinstance(other, int):
            other = Polynomial.const(other)
        r = dict(self.terms)
        for m, c in other.terms.items():
            nc = r.get(m, 0) + c
            if nc:
                r[m] = nc
            else:
                del r[m]
        return Polynomial(r, _trusted=True)

    __radd__ = __add__

    def __sub__(self, other) -> "Polynomial":
        if isinstance(other, int):
            other = Polynomial.const(other)
        r = dict(self.terms)
        for m, c in other.terms.items():
            nc = r.get(m, 0) - c
            if nc:
                r[m] = nc
            else:
                del r[m]
        return Polynomial(r, _trusted=True)

    def __rsub__(self, other) -> "Polynomial":
        return (-self) + other

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, int):
            if other == 0:
                return _ZERO
            return Polynomial({m: c * other for m, c in self.terms.items()}, _trusted=True)
        p, q = self.terms, other.terms
        if len(p) > len(q):
            p, q = q, p
        r: dict[int, int] = {}
        for m1, c1 in p.items():
            for m2, c2 in q.items():
                m = m1 + m2
                nc = r.get(m, 0) + c1 * c2
                if nc:
                    r[m] = nc
                else:
                    del r[m]
        return Polynomial(r, _trusted=True)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Polynomial":
        if k < 0:
            raise ValueError("negative power")
        result = Polynomial.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e for _, e in _mono_decode(m)) for m in self.terms)

    def degree_in(self, v: VarRef) -> int:
        if not self.terms:
            return -1
        s = _shift_of(v)
        return max((m >> s) & _EXP_MASK for m in self.terms)

    def variables(self) -> set[VarRef]:
        seen: set[VarRef] = set()
        for m in self.terms:
            for v, _ in _mono_decode(m):
                seen.add(v)
        return seen

    # -- canonical forms -----------------------------------------------------

    def sorted_terms(self) -> list[tuple[list[tuple[VarRef, int]], int]]:
        """Terms as (decoded monomial, coeff), graded-lex descending."""
        return [
            (_mono_decode(m), self.terms[m])
            for m in sorted(self.terms, key=_mono_key)
        ]

    def text(self) -> str:
        """Canonical text form: `+c*x1^2*z3 -d*y2 ...` (leading `+` elided)."""
        if not self.terms:
            return "0"
        parts = []
        for pairs, c in self.sorted_terms():
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            factors = [
                var_name(v) + (f"^{e}" if e > 1 else "") for v, e in pairs
            ]
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = str(mag) + "*" + "*".join(factors)
            parts.append(sign + body)
        out = " ".join(parts)
        return out[1:] if out.startswith("+") else out

    def to_json(self) -> dict:
        return {
            "terms": [
                {
                    "coeff": str(c),
                    "exps": {var_name(v): e for v, e in pairs},
                }
                for pairs, c in self.sorted_terms()
            ]
        }

    @staticmethod
    def from_json(obj: Union[dict, str]) -> "Polynomial":
        if isinstance(obj, str):
            obj = json.loads(obj)
        terms: dict[int, int] = {}
        for t in obj["terms"]:
            m = _mono_from_pairs(
                [(parse_var(name), e) for name, e in t["exps"].items()]
            )
            terms[m] = terms.get(m, 0) + int(t["coeff"])
        return Polynomial(terms)

    def __repr__(self):
        return f"Polynomial({self.text()})"


_ZERO = Polynomial({}, _trusted=True)


def poly_sum(ps: Iterable[Polynomial]) -> Polynomial:
    r: dict[int, int] = {}
    for p in ps:
        for m, c in p.terms.items():
            nc = r.get(m, 0) + c
            if nc:
                r[m] = nc
            else:
                del r[m]
    return Polynomial(r, _trusted=True)


def poly_prod(ps: Iterable[Polynomial]) -> Polynomial:
    r = Polynomial.const(1)
    for p in ps:
        r = r * p
    return r


# ---------------------------------------------------------------------------
# Spec operations
# ---------------------------------------------------------------------------

def add(p: Polynomial, q: Polynomial) -> Polynomial:
    return p + q


def mul(p: Polynomial, q: Polynomial) -> Polynomial:
    return p * q


def swap_vars(p: Polynomial, a: VarRef, b: VarRef) -> Polynomial:
    """Exchange two variables of the same block throughout p."""
    if a[0] != b[0]:
        raise BlockMismatch(f"cannot swap {var_name(a)} with {var_name(b)}")
    if a == b:
        return p
    sa, sb = _shift_of(a), _shift_of(b)
    r: dict[int, int] = {}
    for m, c in p.terms.items():
        ea = (m >> sa) & _EXP_MASK
        eb = (m >> sb) & _EXP_MASK
        if ea != eb:
            m = m + ((eb - ea) << sa) + ((ea - eb) << sb)
        nc = r.get(m, 0) + c
        if nc:
            r[m] = nc
        else:
            del r[m]
    return Polynomial(r, _trusted=True)


def substitute(p: Polynomial, bindings: Mapping[VarRef, Union["Polynomial", int]]) -> Polynomial:
    """Substitute polynomials (or integer constants) for variables, exactly.

    For rational-point evaluation use `evaluate`.
    """
    if not bindings:
        return p
    norm = {
        v: (val if isinstance(val, Polynomial) else Polynomial.const(val))
        for v, val in bindings.items()
    }
    shifts = {v: _shift_of(v) for v in norm}
    pow_cache: dict[tuple[VarRef, int], Polynomial] = {}

    def powered(v: VarRef, e: int) -> Polynomial:
        key = (v, e)
        if key not in pow_cache:
            pow_cache[key] = norm[v] ** e
        return pow_cache[key]

    acc: dict[int, int] = {}
    for m, c in p.terms.items():
        rest = m
        term = None
        for v, s in shifts.items():
            e = (rest >> s) & _EXP_MASK
            if e:
                rest -= e << s
                q = powered(v, e)
                term = q if term is None else term * q
        if term is None:
            nc = acc.get(m, 0) + c
            if nc:
                acc[m] = nc
            else:
                del acc[m]
            continue
        for mm, cc in term.terms.items():
            mm += rest
            nc = acc.get(mm, 0) + cc * c
            if nc:
                acc[mm] = nc
            else:
                del acc[mm]
    return Polynomial(acc, _trusted=True)


def evaluate(p: Polynomial, point: Mapping[VarRef, Union[int, Fraction]]) -> Fraction:
    """Full rational-point evaluation; every variable of p must be bound."""
    shifts = [(v, _shift_of(v), Fraction(val)) for v, val in point.items()]
    total = Fraction(0)
    for m, c in p.terms.items():
        rest = m
        val = Fraction(c)
        for v, s, x in shifts:
            e = (rest >> s) & _EXP_MASK
            if e:
                rest -= e << s
                val *= x ** e
        if rest:
            missing = [var_name(v) for v, _ in _mono_decode(rest)]
            raise PolynomialError(f"unbound variables in evaluation: {missing}")
        total += val
    return total


def divide_monomial(p: Polynomial, pairs: Iterable[tuple[VarRef, int]]) -> Polynomial:
    """Exact division by a monomial; raises NotDivisible on underflow."""
    m0 = _mono_from_pairs(pairs)
    if m0 == 0:
        return p
    decoded = _mono_decode(m0)
    r: dict[int, int] = {}
    for m, c in p.terms.items():
        for v, e in decoded:
            if _mono_exp(m, v) < e:
                raise NotDivisible(f"monomial {var_name(v)}^{e} does not divide")
        r[m - m0] = c
    return Polynomial(r, _trusted=True)


def divide_linear(p: Polynomial, a: VarRef, b: VarRef) -> Polynomial | None:
    """p / (v_a - v_b) by synthetic division in v_a; None if not exact."""
    if not p.terms:
        return _ZERO
    sa = _shift_of(a)
    sb = _shift_of(b)
    by_deg: dict[int, dict[int, int]] = {}
    maxd = 0
    for m, c in p.terms.items():
        e = (m >> sa) & _EXP_MASK
        by_deg.setdefault(e, {})[m - (e << sa)] = c
        if e > maxd:
            maxd = e
    if maxd == 0:
        return None
    quot: dict[int, int] = {}
    carry: dict[int, int] = {}
    for k in range(maxd, 0, -1):
        qk = dict(by_deg.get(k, {}))
        for m, c in carry.items():
            nc = qk.get(m, 0) + c
            if nc:
                qk[m] = nc
            else:
                del qk[m]
        for m, c in qk.items():
            mm = m + ((k - 1) << sa)
            nc = quot.get(mm, 0) + c
            if nc:
                quot[mm] = nc
            else:
                del quot[mm]
        carry = {m + (1 << sb): c for m, c in qk.items()}
    rem = dict(by_deg.get(0, {}))
    for m, c in carry.items():
        nc = rem.get(m, 0) + c
        if nc:
            rem[m] = nc
        else:
            del rem[m]
    if rem:
        return None
    return Polynomial(quot, _trusted=True)


def exact_divide(p: Polynomial, d: Polynomial) -> Polynomial:
    """Exact multivariate division p / d w.r.t. the graded-lex order.

    Raises NotDivisible if the remainder is nonzero; that always signals a
    bug or theorem violation upstream, never a recoverable condition.
    """
    if d.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if p.is_zero():
        return _ZERO
    if len(d.terms) == 1:
        ((md, cd),) = d.terms.items()
        q = divide_monomial(p, _mono_decode(md))
        terms = {}
        for m, c in q.terms.items():
            if c % cd:
                raise NotDivisible("coefficient not divisible")
            terms[m] = c // cd
        return Polynomial(terms, _trusted=True)
    rem = dict(p.terms)
    d_sorted = sorted(d.terms.items(), key=lambda t: _mono_key(t[0]))
    md, cd = d_sorted[0]
    md_dec = _mono_decode(md)
    quot: dict[int, int] = {}
    while rem:
        mlead = min(rem, key=_mono_key)
        clead = rem[mlead]
        for v, e in md_dec:
            if _mono_exp(mlead, v) < e:
                raise NotDivisible(p.text()[:80] + " not divisible by " + d.text()[:80])
        if clead % cd:
            raise NotDivisible("leading coefficient not divisible")
        mq = mlead - md
        cq = clead // cd
        quot[mq] = quot.get(mq, 0) + cq
        for m, c in d.terms.items():
            mm = m + mq
            nc = rem.get(mm, 0) - c * cq
            if nc:
                rem[mm] = nc
            else:
                del rem[mm]
    return Polynomial(quot, _trusted=True)


def divided_difference(p: Polynomial, i: int, block: int = X) -> Polynomial:
    """(p - s_i p) / (v_i - v_{i+1}) on the chosen block, computed termwise."""
    if i < 1:
        raise ValueError("divided difference index must be >= 1")
    return divided_difference_pair(p, var(block, i), var(block, i + 1))


def divided_difference_pair(p: Polynomial, a: VarRef, b: VarRef) -> Polynomial:
    """(p - p|swap(a,b)) / (v_a - v_b), exact by construction."""
    sa, sb = _shift_of(a), _shift_of(b)
    r: dict[int, int] = {}
    for m, c in p.terms.items():
        ea = (m >> sa) & _EXP_MASK
        eb = (m >> sb) & _EXP_MASK
        if ea == eb:
            continue
        base = m - (ea << sa) - (eb << sb)
        if ea > eb:
            lo, hi, sgn = eb, ea, c
        else:
            lo, hi, sgn = ea, eb, -c
        # (a^hi b^lo - a^lo b^hi)/(a-b) = sum_{k=lo..hi-1} a^k b^{hi+lo-1-k}
        for k in range(lo, hi):
            mm = base + (k << sa) + ((hi + lo - 1 - k) << sb)
            nc = r.get(mm, 0) + sgn
            if nc:
                r[mm] = nc
            else:
                del r[mm]
    return Polynomial(r, _trusted=True)


def isobaric_pi(g: Polynomial, l: int, beta: int, alpha: int, n: int,
                y_zero: bool = False) -> Polynomial:
    """Cantini's isobaric operator on the z-block, indices mod n.

    pi_l(beta, alpha; n) G = (z_l - y_{n+1-beta})(z_{l+1} - x_alpha)
                             / (x_alpha - y_{n+1-beta})
                             * (G - s_l G)/(z_l - z_{l+1})
    with z_{n+1} identified with z_1.  With y_zero the y's are specialized
    to 0 before dividing, so the divisor is the monomial x_alpha.
    """
    if not 1 <= l <= n:
        raise ValueError(f"position {l} out of range for ring size {n}")
    if not alpha < beta:
        raise ValueError("isobaric_pi requires alpha < beta")
    l2 = l % n + 1
    dd = divided_difference_pair(g, zvar(l), zvar(l2))
    if y_zero:
        num = dd * Polynomial.monomial([(zvar(l), 1)]) * Polynomial.linear(zvar(l2), xvar(alpha))
        return divide_monomial(num, [(xvar(alpha), 1)])
    num = dd * Polynomial.linear(zvar(l), yvar(n + 1 - beta))
    num = num * Polynomial.linear(zvar(l2), xvar(alpha))
    q = divide_linear(num, xvar(alpha), yvar(n + 1 - beta))
    if q is None:
        raise NotDivisible(
            f"pi_{l}({beta},{alpha};{n}) produced a non-polynomial result"
        )
    return q


def z_degree(m: int) -> int:
    return sum(e for v, e in _mono_decode(m) if v[0] == Z)


def leading_coeff_z(p: Polynomial) -> Polynomial:
    """Coefficient of the unique maximal z-monomial (LC_z).

    Raises NonUniqueLeadingTerm when the top z-degree part mixes distinct
    z-monomials, and ZeroPolynomial on 0.
    """
    if p.is_zero():
        raise ZeroPolynomial("LC_z of the zero polynomial")
    split = []
    best_deg = -1
    for m, c in p.terms.items():
        zm = 0
        deg = 0
        for v, e in _mono_decode(m):
            if v[0] == Z:
                zm += e << _shift_of(v)
                deg += e
        split.append((deg, zm, m, c))
        if deg > best_deg:
            best_deg = deg
    best_zmono = None
    coeff: dict[int, int] = {}
    for deg, zm, m, c in split:
        if deg != best_deg:
            continue
        if best_zmono is None:
            best_zmono = zm
        elif zm != best_zmono:
            raise NonUniqueLeadingTerm(
                "max z-degree part is not a single z-monomial"
            )
        coeff[m - zm] = c
    return Polynomial(coeff, _trusted=True)


def max_monomial_factor(p: Polynomial, block: int = X) -> list[tuple[VarRef, int]]:
    """Largest block-monomial dividing p: componentwise min of exponents."""
    if p.is_zero():
        raise ZeroPolynomial("monomial factor of the zero polynomial")
    common: dict[VarRef, int] | None = None
    for m in p.terms:
        exps = {v: e for v, e in _mono_decode(m) if v[0] == block}
        if common is None:
            common = exps
        else:
            for v in list(common):
                e = exps.get(v, 0)
                if e < common[v]:
                    if e == 0:
                        del common[v]
                    else:
                        common[v] = e
        if not common:
            return []
    assert common is not None
    return sorted(common.items())

"""The inhomogeneous TASEP on a ring: z-deformed stationary polynomials.

The distribution is generated from the identity state by the isobaric
recursion: for every cyclic descent w_l > w_{l+1} the polynomial of s_l w is
pi_l(w_l, w_{l+1}; n) applied to that of w.  The breadth-first sweep keeps
every intermediate value in canonical factored form (see factored.py); a
state reached along two paths must produce identical values, which doubles
as a correctness check of the whole pipeline.

Verification routines check the product formulas for special states: the
z-deformed factorization into a trivial factor times shifted z-Schubert
polynomials, its leading-coefficient form in double Schubert polynomials,
the y = 0 flagged-Schur form, the largest-monomial factorization, and the
partition function identity.
"""

from __future__ import annotations

from collections import Counter
from itertools import combinations_with_replacement
from math import comb

from . import combinat as cb
from . import schubert as sch
from . import zschubert as zs
from .combinat import Perm
from .factored import FactoredPolynomial, candidate_factors, normalize
from .polyring import (
    Polynomial, X, Y, Z, divide_linear, divide_monomial,
    divided_difference_pair, leading_coeff_z, max_monomial_factor, poly_prod,
    poly_sum, substitute, swap_vars, var, xvar, yvar, zvar,
)


class Inconsistent(Exception):
    """Two recursion paths disagreed; fatal."""


class Mismatch(Exception):
    """A verified identity failed; fatal."""


def total_degree_expected(n: int) -> int:
    return n * (n - 1) * (n + 4) // 6


def cyclic_descents(w: Perm) -> list[int]:
    n = len(w)
    return [l for l in range(1, n + 1) if w[l - 1] > w[l % n]]


def apply_cyclic_s(w: Perm, l: int) -> Perm:
    n = len(w)
    wl = list(w)
    wl[l - 1], wl[l % n] = wl[l % n], wl[l - 1]
    return tuple(wl)


# -- trivial factors ----------------------------------------------------------

def _cyclic_order(w: Perm, a: int, b: int, c: int) -> bool:
    """True iff reading w cyclically from the position of a meets b before c."""
    n = len(w)
    i = w.index(a)
    for t in range(1, n):
        letter = w[(i + t) % n]
        if letter == b:
            return True
        if letter == c:
            return False
    return False


def xy_fact(w: Perm, y_zero: bool = False) -> FactoredPolynomial:
    n = len(w)
    fac: Counter = Counter()
    mono: Counter = Counter()
    for i in range(1, n - 1):
        for k in range(i + 2, n + 1):
            if _cyclic_order(w, i, i + 1, k):
                for j in range(1, i + 1):
                    if y_zero:
                        mono[xvar(j)] += 1
                    else:
                        fac[(xvar(j), yvar(n + 1 - k))] += 1
    return FactoredPolynomial(
        1, tuple(sorted(mono.items())), tuple(sorted(fac.items())),
        Polynomial.const(1))


def xz_fact(w: Perm, i: int | None = None) -> FactoredPolynomial:
    """Factors (z_i - x_j) for j a new minimum reading leftward from i."""
    n = len(w)
    fac: Counter = Counter()
    positions = range(1, n + 1) if i is None else [i]
    for p in positions:
        running = w[p - 1]
        for t in range(1, n):
            a = w[(p - 1 - t) % n]
            if a < running:
                fac[(zvar(p), xvar(a))] += 1
                running = a
    return FactoredPolynomial(1, (), tuple(sorted(fac.items())),
                              Polynomial.const(1))


def yz_fact(w: Perm, i: int | None = None, y_zero: bool = False) -> FactoredPolynomial:
    """Factors (z_i - y_{n+1-k}) for k a new maximum reading rightward from i."""
    n = len(w)
    fac: Counter = Counter()
    mono: Counter = Counter()
    positions = range(1, n + 1) if i is None else [i]
    for p in positions:
        running = w[p - 1]
        for t in range(1, n):
            a = w[(p - 1 + t) % n]
            if a > running:
                if y_zero:
                    mono[zvar(p)] += 1
                else:
                    fac[(zvar(p), yvar(n + 1 - a))] += 1
                running = a
    return FactoredPolynomial(1, tuple(sorted(mono.items())),
                              tuple(sorted(fac.items())), Polynomial.const(1))


def tf(w: Perm, y_zero: bool = False) -> FactoredPolynomial:
    return xy_fact(w, y_zero) * xz_fact(w) * yz_fact(w, y_zero=y_zero)


# -- the recursion ------------------------------------------------------------

def seed_identity(n: int, y_zero: bool) -> FactoredPolynomial:
    """psi for the identity state: the normalization product times the
    z-linear factors of the seed formula."""
    fac: Counter = Counter()
    mono: Counter = Counter()
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            for _ in range(j - i - 1):
                if y_zero:
                    mono[xvar(i)] += 1
                else:
                    fac[(xvar(i), yvar(n + 1 - j))] += 1
    for i in range(1, n + 1):
        for j in range(1, i):
            fac[(zvar(i), xvar(j))] += 1
        for j in range(i + 1, n + 1):
            if y_zero:
                mono[zvar(i)] += 1
            else:
                fac[(zvar(i), yvar(n + 1 - j))] += 1
    return FactoredPolynomial(
        1, tuple(sorted(mono.items())), tuple(sorted(fac.items())),
        Polynomial.const(1))


def _swap_factor(f, za, zb):
    a, b = f
    if a == za:
        a = zb
    elif a == zb:
        a = za
    if b == za:
        b = zb
    elif b == zb:
        b = za
    return (a, b)


def pi_factored(f: FactoredPolynomial, l: int, beta: int, alpha: int, n: int,
                y_zero: bool, candidates) -> FactoredPolynomial:
    """Apply pi_l(beta, alpha; n) to a canonical factored polynomial."""
    l2 = l % n + 1
    za, zb = zvar(l), zvar(l2)
    fac = f.factor_counter()
    swapped = Counter({_swap_factor(g, za, zb): m for g, m in fac.items()})
    common = fac & swapped
    rest = fac - common
    mono = Counter(dict(f.monomial))
    ea, eb = mono.get(za, 0), mono.get(zb, 0)
    keep = min(ea, eb)
    mono[za], mono[zb] = keep, keep
    spill = []
    if ea > keep:
        spill.append((za, ea - keep))
    if eb > keep:
        spill.append((zb, eb - keep))
    # R carries the non-symmetric factors and spilled monomial part
    r = Polynomial.monomial(spill, f.sign)
    for g, m in rest.items():
        from .factored import factor_poly
        r = r * factor_poly(g) ** m
    c = f.core
    # Leibniz: d(R C) = dR * C + sR * dC  for the z_l / z_{l+1} difference
    dr = divided_difference_pair(r, za, zb)
    sr = swap_vars(r, za, zb)
    dc = divided_difference_pair(c, za, zb)
    quot = dr * c + sr * dc
    out_fac = Counter(common)
    out_fac[(zb, xvar(alpha))] += 1
    if y_zero:
        mono[za] += 1
        xa = xvar(alpha)
        q = None
        try:
            q = divide_monomial(quot, [(xa, 1)])
        except Exception:
            q = None
        if q is not None:
            quot = q
        else:
            if mono.get(xa, 0) < 1:
                raise Inconsistent(f"x_{alpha} does not divide pi result")
            mono[xa] -= 1
    else:
        yv = yvar(n + 1 - beta)
        out_fac[(za, yv)] += 1
        key = (xvar(alpha), yv)
        if common.get(key, 0) > 0:
            out_fac[key] -= 1
        else:
            q = divide_linear(quot, xvar(alpha), yv)
            if q is None:
                raise Inconsistent(
                    f"(x_{alpha} - y_{n + 1 - beta}) does not divide pi result")
            quot = q
    return normalize(1, mono, out_fac, quot, candidates)


def psi_z_factored(n: int, y_zero: bool = False) -> dict[Perm, FactoredPolynomial]:
    """All z-deformed stationary polynomials, canonical factored form.

    Breadth-first from the identity; states inside one level are processed
    in lexicographic order; every revisit must reproduce the stored value.
    """
    cands = candidate_factors(n, y_zero)
    table: dict[Perm, FactoredPolynomial] = {
        cb.identity(n): seed_identity(n, y_zero)
    }
    frontier = [cb.identity(n)]
    while frontier:
        nxt = []
        for w in sorted(frontier):
            fw = table[w]
            for l in cyclic_descents(w):
                w2 = apply_cyclic_s(w, l)
                g = pi_factored(fw, l, w[l - 1], w[l % n], n, y_zero, cands)
                prev = table.get(w2)
                if prev is None:
                    table[w2] = g
                    nxt.append(w2)
                elif prev != g:
                    raise Inconsistent(
                        f"state {w2} reached with two different polynomials")
        frontier = nxt
    missing = _factorial(n) - len(table)
    if missing:
        raise Inconsistent(f"{missing} states unreachable from the identity")
    return table


def _factorial(n: int) -> int:
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


def psi_z_all(n: int, y_zero: bool = False) -> dict[Perm, Polynomial]:
    """Expanded z-deformed polynomials (desk-sized for n <= 4 general y,
    n <= 6 with y = 0; use psi_z_factored beyond that)."""
    return {w: f.expand() for w, f in psi_z_factored(n, y_zero).items()}


def psi_all(n: int, y_zero: bool = False,
            table: dict[Perm, FactoredPolynomial] | None = None) -> dict[Perm, Polynomial]:
    """Stationary polynomials psi_w = LC_z(psi_w(z))."""
    if table is None:
        table = psi_z_factored(n, y_zero)
    return {w: f.lc_z() for w, f in table.items()}


def check_cyclic_covariance(table: dict[Perm, FactoredPolynomial], n: int) -> None:
    """psi_{sigma(w)}(z) equals psi_w(z) with z_i -> z_{i-1} (indices mod n)."""
    cands = candidate_factors(n, True) + candidate_factors(n, False)
    sub = {zvar(i): Polynomial.variable(zvar((i - 2) % n + 1))
           for i in range(1, n + 1)}

    def shift_factored(f: FactoredPolynomial) -> FactoredPolynomial:
        mono = Counter()
        for v, e in f.monomial:
            if v[0] == Z:
                v = zvar((v[1] - 2) % n + 1)
            mono[v] += e
        fac = Counter()
        for (a, b), m in f.factors:
            if a[0] == Z:
                a = zvar((a[1] - 2) % n + 1)
            if b is not None and b[0] == Z:
                b = zvar((b[1] - 2) % n + 1)
            fac[(a, b)] += m
        core = substitute(f.core, sub)
        return normalize(f.sign, mono, fac, core, cands)

    for w, fw in table.items():
        got = table[cb.cyclic_shift(w, 1)]
        want = shift_factored(fw)
        if got != want:
            raise Mismatch(f"cyclic covariance fails at {w}")


# -- verification of the product formulas -------------------------------------

def verify_z_product(n: int, y_zero: bool = False,
                     table: dict[Perm, FactoredPolynomial] | None = None,
                     states=None) -> list[Perm]:
    """psi_w(z) = TF(w) * prod_i S^n_{lam^i}(sigma^{a_i} z) for special states.

    Returns the list of states checked; raises Mismatch on any failure.
    """
    if table is None:
        table = psi_z_factored(n, y_zero)
    cands = candidate_factors(n, y_zero)
    if states is None:
        states = cb.special_states(n)
    checked = []
    for w in states:
        seq = cb.psi(w)
        shifts = cb.shifting_vector(seq, n)
        core = Polynomial.const(1)
        for lam, a in zip(seq, shifts):
            part = zs.z_schubert_shifted(lam, n, a)
            if y_zero:
                part = substitute(
                    part, {v: 0 for v in part.variables() if v[0] == Y})
            core = core * part
        rhs = tf(w, y_zero)
        want = normalize(rhs.sign, Counter(dict(rhs.monomial)),
                         rhs.factor_counter(), core * rhs.core, cands)
        if table[w] != want:
            raise Mismatch(f"z-deformed product formula fails at {w}")
        checked.append(w)
    return checked


def verify_schubert_product(n: int, y_zero: bool = False,
                            table: dict[Perm, FactoredPolynomial] | None = None,
                            states=None) -> list[Perm]:
    """psi_w = xyFact(w) * prod_i Schubert(c^{-1}(g_n(lam^i)))."""
    if table is None:
        table = psi_z_factored(n, y_zero)
    if states is None:
        states = cb.special_states(n)
    checked = []
    for w in states:
        lhs = table[w].lc_z()
        rhs = xy_fact(w, y_zero).expand()
        for lam in cb.psi(w):
            p = sch.double_schubert_dd(cb.code_inverse(cb.g_n(lam, n)), n)
            if y_zero:
                p = substitute(p, {v: 0 for v in p.variables() if v[0] == Y})
            rhs = rhs * p
        if lhs != rhs:
            raise Mismatch(f"Schubert product formula fails at {w}")
        checked.append(w)
    return checked


def mu_vector(seq, n: int) -> list[tuple]:
    """Exponents of the monomial prefactor at y = 0:
    (C(n-1,2), ..., C(2,2)) minus the componentwise sum of the partitions."""
    vec = [comb(n - 1 - i, 2) for i in range(n - 2)]
    for lam in seq:
        for i, a in enumerate(lam):
            vec[i] -= a
    if any(v < 0 for v in vec):
        raise Mismatch("monomial exponent went negative")
    return [(xvar(i + 1), v) for i, v in enumerate(vec) if v]


def verify_flagged_schur_product(n: int,
                                 table: dict[Perm, FactoredPolynomial] | None = None,
                                 states=None) -> list[Perm]:
    """y = 0 form: psi_w = x^mu * prod_i s_{lam^i}(X_{n-lam_1}, ...)."""
    if table is None:
        table = psi_z_factored(n, True)
    if states is None:
        states = cb.special_states(n)
    checked = []
    for w in states:
        seq = cb.psi(w)
        rhs = Polynomial.monomial(mu_vector(seq, n))
        for lam in seq:
            rhs = rhs * sch.flagged_schur(lam, sch.schur_flags(lam, n))
        if table[w].lc_z() != rhs:
            raise Mismatch(f"flagged Schur formula fails at {w}")
        checked.append(w)
    return checked


def eta_exponents(w: Perm) -> list[tuple]:
    """Predicted largest monomial factor: x_i^(alpha_i + ... + alpha_{n-2})."""
    a = cb.alpha(w)
    out = []
    suffix = 0
    exps = []
    for i in range(len(a) - 1, -1, -1):
        suffix += a[i]
        exps.append((xvar(i + 1), suffix))
    return [(v, e) for v, e in sorted(exps) if e]


def verify_monomial_factor(n: int,
                           table: dict[Perm, FactoredPolynomial] | None = None) -> int:
    """At y = 0 the largest x-monomial dividing psi_w is the alpha-product,
    and distinct monomials imply distinct cyclic classes."""
    if table is None:
        table = psi_z_factored(n, True)
    seen: dict[tuple, Perm] = {}
    for w, fw in table.items():
        got = max_monomial_factor(fw.lc_z(), X)
        want = eta_exponents(w)
        if got != want:
            raise Mismatch(f"monomial factor fails at {w}: {got} vs {want}")
        key = tuple(want)
        rep = cb.cyclic_standard(w)
        if key in seen and seen[key] != rep:
            raise Mismatch(f"equal monomial factors across cyclic classes: {w}")
        seen[key] = rep
    return len(table)


def homogeneous_sym(degree: int, variables) -> Polynomial:
    """Complete homogeneous symmetric polynomial in an explicit variable list
    (repeats allowed)."""
    if degree == 0:
        return Polynomial.const(1)
    out: dict = {}
    acc = Polynomial.zero()
    for pick in combinations_with_replacement(variables, degree):
        prs: Counter = Counter()
        for v in pick:
            prs[v] += 1
        acc = acc + Polynomial.monomial(sorted(prs.items()))
    return acc


def verify_partition_function(n: int,
                              table: dict[Perm, FactoredPolynomial] | None = None) -> int:
    """Sum of all psi_w at y = 0 equals prod_i h_{n-i}(x_1, ..., x_i, x_i),
    with prod_i C(n, i) monomials."""
    if table is None:
        table = psi_z_factored(n, True)
    zn = poly_sum(fw.lc_z() for fw in table.values())
    want = Polynomial.const(1)
    for i in range(1, n + 1):
        vs = [xvar(j) for j in range(1, i)] + [xvar(i), xvar(i)]
        want = want * homogeneous_sym(n - i, vs)
    if zn != want:
        raise Mismatch(f"partition function mismatch at n={n}")
    terms = 1
    for i in range(0, n + 1):
        terms *= comb(n, i)
    if len(zn) != terms:
        raise Mismatch(f"partition function has {len(zn)} terms, not {terms}")
    return len(zn)

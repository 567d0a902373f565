"""z-Schubert polynomials via the first-part-removal recursion.

S^n_lam(z; x; y) is defined by peeling off the first part of lam: apply
x-block divided differences d_1 .. d_{n - lam_1 - mul(lam)} to
S^{n-1}_{lam'}(sigma^{lam_1-lam_2+1} z; x-hat-1; y) times explicit linear
products.  The leading z-coefficient is the double Schubert polynomial of
the permutation with code g_n(lam); at y = 0 it is a flagged Schur function.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations

from . import combinat as cb
from . import schubert as sch
from .combinat import NotValid
from .polyring import (
    Polynomial, VarRef, X, Z, divided_difference, divided_difference_pair,
    evaluate, leading_coeff_z, poly_prod, substitute, xvar, yvar, zvar,
)


class Mismatch(Exception):
    """A checked identity failed; fatal for verification suites."""


def shift_z(p: Polynomial, a: int, ring: int | None = None) -> Polynomial:
    """sigma^a on z-variables: z_i -> z_{i+a}, reduced mod the ring size
    (into 1..ring) when one is given."""
    if a == 0:
        return p
    zs = sorted(v for v in p.variables() if v[0] == Z)
    bind = {}
    for v in zs:
        j = v[1] + a
        if ring is not None:
            j = (j - 1) % ring + 1
        elif j < 1:
            raise ValueError("negative z-index needs a ring size")
        bind[v] = Polynomial.variable(zvar(j))
    return substitute(p, bind)


def delete_x(p: Polynomial, deleted: tuple[int, ...]) -> Polynomial:
    """Evaluate p on the x-list with the given indices removed: the j-th
    x-variable of p becomes the j-th surviving x-variable, order kept."""
    if not deleted:
        return p
    deleted = tuple(sorted(set(deleted)))
    xs = sorted(v[1] for v in p.variables() if v[0] == X)
    if not xs:
        return p
    survivors = [i for i in range(1, max(xs) + len(deleted) + 1) if i not in deleted]
    bind = {
        xvar(j): Polynomial.variable(xvar(survivors[j - 1])) for j in xs
    }
    return substitute(p, bind)


_cache: dict[tuple[int, tuple], Polynomial] = {}


def z_schubert(lam, n: int) -> Polynomial:
    """S^n_lam(z; x; y) for lam valid for n (or empty -> 1), unshifted."""
    lam = tuple(lam)
    if not lam:
        return Polynomial.const(1)
    if not cb.is_valid_for(lam, n):
        raise NotValid(f"{lam} is not valid for ring size {n}")
    key = (n, lam)
    got = _cache.get(key)
    if got is None:
        got = _cache[key] = _z_schubert_rec(lam, n)
    return got


def _z_schubert_rec(lam: tuple, n: int) -> Polynomial:
    lam1 = lam[0]
    rest = lam[1:]
    lam2 = rest[0] if rest else 0
    b = cb.mul_largest(lam)
    inner = z_schubert(rest, n - 1)
    inner = delete_x(inner, (1,))
    inner = shift_z(inner, lam1 - lam2 + 1)
    xy = poly_prod(
        Polynomial.linear(xvar(1), yvar(l)) for l in range(1, n - b + 1)
    )
    zx = poly_prod(
        Polynomial.linear(zvar(i), xvar(m))
        for i in range(1, lam1 - lam2 + 2)
        for m in range(2, n - lam1 - b + 2)
    )
    p = inner * xy * zx
    for i in range(1, n - lam1 - b + 1):
        p = divided_difference(p, i, X)
    return p


def z_schubert_shifted(lam, n: int, shift: int = 0) -> Polynomial:
    """S^n_lam with z-indices translated by sigma^shift, wrapped mod n."""
    return shift_z(z_schubert(lam, n), shift, ring=n)


def lc_equals_schubert(lam, n: int) -> None:
    """LC_z(S^n_lam) must equal the double Schubert polynomial whose code
    is g_n(lam); raises Mismatch otherwise."""
    lhs = leading_coeff_z(z_schubert(lam, n))
    rhs = sch.double_schubert_dd(cb.code_inverse(cb.g_n(lam, n)), n)
    if lhs != rhs:
        raise Mismatch(f"LC_z(S^{n}_{lam}) != Schubert of g_{n}({lam})")


def check_specialization(lam, n: int, a: int) -> None:
    """z_1 := x_a specialization identity (1 <= a <= n - lam_1)."""
    lam = tuple(lam)
    if not 1 <= a <= n - lam[0]:
        raise ValueError("need 1 <= a <= n - lam_1")
    lam1 = lam[0]
    rest = lam[1:]
    lam2 = rest[0] if rest else 0
    b = cb.mul_largest(lam)
    lhs = substitute(z_schubert(lam, n), {zvar(1): Polynomial.variable(xvar(a))})
    inner = z_schubert(rest, n - 1)
    inner = delete_x(inner, (a,))
    inner = shift_z(inner, lam1 - lam2 + 1)
    xy = poly_prod(
        Polynomial.linear(xvar(a), yvar(l)) for l in range(1, n - b + 1)
    )
    zx = poly_prod(
        Polynomial.linear(zvar(i), xvar(m))
        for i in range(2, lam1 - lam2 + 2)
        for m in range(1, n - lam1 - b + 2)
        if m != a
    )
    rhs = inner * xy * zx
    if lhs != rhs:
        raise Mismatch(f"z1 := x_{a} specialization fails for {lam}, n={n}")


def _composite_mul(shape: tuple, n: int, b: int) -> int:
    """Multiplicity of the largest part of the decremented shape; when the
    shape degenerates to empty (lam = (1^b)) the identities need n - b + 1."""
    return cb.mul_largest(shape) if shape else n - b + 1


def check_first_part_increment(lam, n: int) -> None:
    """For lam_1 > lam_2: relate S^n_lam to S^n_{(lam_1 - 1, lam')} through
    a z-block divided difference (identity used by the stationary proof)."""
    lam = tuple(lam)
    lam1 = lam[0]
    rest = lam[1:]
    lam2 = rest[0] if rest else 0
    if lam1 <= lam2:
        raise ValueError("needs lam_1 > lam_2")
    lower = tuple(p for p in (lam1 - 1,) + rest if p)
    b_low = _composite_mul(lower, n, 1)
    lhs = z_schubert(lam, n) * poly_prod(
        Polynomial.linear(zvar(i), xvar(n + 1 - lam1))
        for i in range(3, lam1 - lam2 + 2)
    )
    inner = shift_z(z_schubert(lower, n), 1)
    rhs_arg = inner * poly_prod(
        Polynomial.linear(zvar(1), xvar(i)) for i in range(1, n - lam1 + 1)
    ) * poly_prod(
        Polynomial.linear(zvar(2), yvar(n - i)) for i in range(1, b_low)
    )
    rhs = divided_difference(rhs_arg, 1, Z)
    if lhs != rhs:
        raise Mismatch(f"first-part increment identity fails for {lam}, n={n}")


def check_multiplicity_increment(lam, n: int) -> None:
    """For mul(lam) = b > 1: relate S^n_lam to the shape with one copy of
    the largest part decremented, through the z-block d_b."""
    lam = tuple(lam)
    b = cb.mul_largest(lam)
    if b <= 1:
        raise ValueError("needs mul(lam) > 1")
    lam1 = lam[0]
    tilde = lam[b:]
    tilde1 = tilde[0] if tilde else 0
    composite = tuple(p for p in (lam1 - 1,) + tilde if p)
    lower = (lam1,) * (b - 1) + composite
    b_low = _composite_mul(composite, n, b)
    lhs = z_schubert(lam, n) * poly_prod(
        Polynomial.linear(zvar(i), yvar(n + 1 - b)) for i in range(1, b)
    ) * poly_prod(
        Polynomial.linear(zvar(i), xvar(n + 1 - lam1))
        for i in range(b + 2, b + lam1 - tilde1 + 1)
    )
    rhs_arg = z_schubert(lower, n) * poly_prod(
        Polynomial.linear(zvar(b + 1), yvar(n + 1 - b - i))
        for i in range(1, b_low)
    )
    rhs = divided_difference(rhs_arg, b, Z)
    if lhs != rhs:
        raise Mismatch(f"multiplicity increment identity fails for {lam}, n={n}")


def check_subset_sum(lam, n: int, k: int, trials: int = 20,
                     seed: int = 20240601) -> None:
    """Symmetrized subset-sum expansion of S^n_lam for k <= mul(lam),
    verified at random rational points with pairwise-distinct x-values."""
    lam = tuple(lam)
    b = cb.mul_largest(lam)
    if not 1 <= k <= b:
        raise ValueError("needs 1 <= k <= mul(lam)")
    lam1 = lam[0]
    tilde = lam[k:]
    lam_k1 = lam[k] if len(lam) > k else 0
    m = n - lam1 - b + k
    shift = lam1 - lam_k1 + k
    inner_base = z_schubert(tilde, n - k)
    whole = z_schubert(lam, n)
    rng = random.Random(seed)
    primes = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43]
    nvar_x = n - 1
    for _ in range(trials):
        xs = rng.sample(primes, nvar_x)
        point: dict[VarRef, Fraction] = {}
        for i in range(1, n):
            point[xvar(i)] = Fraction(xs[i - 1])
            point[yvar(i)] = Fraction(rng.randint(-9, 9))
        for i in range(1, n + 1):
            point[zvar(i)] = Fraction(rng.randint(-20, 20))
        lhs = evaluate(whole, point)
        rhs = Fraction(0)
        for subset in combinations(range(1, m + 1), k):
            others = [j for j in range(1, m + 1) if j not in subset]
            inner = shift_z(delete_x(inner_base, subset), shift)
            num = evaluate(inner, point)
            for i in subset:
                for l in range(1, n - b + 1):
                    num *= point[xvar(i)] - point[yvar(l)]
            for i in range(1, shift + 1):
                for j in others:
                    num *= point[zvar(i)] - point[xvar(j)]
            den = Fraction(1)
            for i in subset:
                for j in others:
                    den *= point[xvar(i)] - point[xvar(j)]
            rhs += num / den
        if lhs != rhs:
            raise Mismatch(
                f"subset-sum identity fails for {lam}, n={n}, k={k} at {point}"
            )


def check_x_symmetry(lam, n: int) -> None:
    """S^n_lam is symmetric in x_1, ..., x_{n - lam_1}."""
    p = z_schubert(lam, n)
    from .polyring import swap_vars
    for i in range(1, n - lam[0]):
        if swap_vars(p, xvar(i), xvar(i + 1)) != p:
            raise Mismatch(f"S^{n}_{lam} not symmetric in x_{i}, x_{i + 1}")


def z_support_bound(lam, n: int) -> bool:
    """Only z_1 .. z_{lam_1 + length(lam)} may appear before shifting."""
    p = z_schubert(lam, n)
    zs = [v[1] for v in p.variables() if v[0] == Z]
    return max(zs, default=0) <= lam[0] + len(lam)

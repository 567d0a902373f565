"""Double Schubert polynomials by two independent routes, plus flagged Schur.

Route one applies divided differences to the staircase product
Delta = prod_{i+j<=n} (x_i - y_j); route two sums cell weights (x_i - y_j)
over the ladder-move closure of the initial diagram (the rc-graphs of w).
Vexillary detection, flags, and flagged Schur functions via direct tableau
enumeration round out the module.
"""

from __future__ import annotations

from functools import lru_cache

from . import combinat as cb
from .combinat import Perm
from .polyring import (
    Polynomial, X, Y, divided_difference, poly_prod, poly_sum, substitute,
    xvar, yvar,
)


class NotVexillary(Exception):
    pass


class HypothesisFails(Exception):
    pass


def staircase_product(n: int) -> Polynomial:
    """Delta(x, y) = prod_{i+j <= n} (x_i - y_j)."""
    return poly_prod(
        Polynomial.linear(xvar(i), yvar(j))
        for i in range(1, n)
        for j in range(1, n - i + 1)
    )


def _ascent_word(w: Perm, largest_first: bool = True) -> list[int]:
    """Positions lifting w up to w0 one ascent at a time.

    Applying divided differences in this recorded order brings Delta back
    down to S_w; any choice of ascents gives the same polynomial (the
    operators satisfy the braid relations), which the tests exercise.
    """
    v = list(w)
    word = []
    n = len(v)
    while True:
        ascents = [i for i in range(1, n) if v[i - 1] < v[i]]
        if not ascents:
            return word
        i = max(ascents) if largest_first else min(ascents)
        v[i - 1], v[i] = v[i], v[i - 1]
        word.append(i)


def double_schubert_dd(w: Perm, n: int | None = None,
                       largest_first: bool = True) -> Polynomial:
    """S_w(x, y) via divided differences from the staircase product."""
    w = cb.trim(tuple(w))
    if n is None or n < len(w):
        n = len(w)
    w = cb.extend(w, n)
    p = staircase_product(n)
    for i in reversed(_ascent_word(w, largest_first)):
        p = divided_difference(p, i, X)
    return p


@lru_cache(maxsize=None)
def _schubert_cached(w: Perm) -> Polynomial:
    return double_schubert_dd(w)


def double_schubert(w: Perm) -> Polynomial:
    """Memoized double Schubert polynomial of the trimmed permutation."""
    return _schubert_cached(cb.trim(tuple(w)))


def schubert_x(w: Perm) -> Polynomial:
    """Single Schubert polynomial: the y = 0 specialization."""
    p = double_schubert(w)
    ys = {v: 0 for v in p.variables() if v[0] == Y}
    return substitute(p, ys) if ys else p


# -- rc-graphs ----------------------------------------------------------------

Diagram = frozenset  # of (row, col) pairs, 1-based


def initial_diagram(w: Perm) -> Diagram:
    c = cb.code(w)
    return frozenset(
        (i + 1, j) for i, ci in enumerate(c) for j in range(1, ci + 1)
    )


def ladder_moves(d: Diagram) -> set[Diagram]:
    """All diagrams reachable from d by a single ladder move L_{i,j}:
    requires (i,j) in d, (i,j+1) not in d, rows i-1..i-m+1 filled in both
    columns j and j+1, and row i-m empty in both; the move sends (i,j) to
    (i-m, j+1)."""
    out = set()
    for (i, j) in d:
        if (i, j + 1) in d:
            continue
        m = 1
        while i - m >= 1:
            up_l = (i - m, j) in d
            up_r = (i - m, j + 1) in d
            if not up_l and not up_r:
                out.add(d - {(i, j)} | {(i - m, j + 1)})
                break
            if not (up_l and up_r):
                break
            m += 1
    return out


def rc_graphs(w: Perm) -> set[Diagram]:
    """Ladder-move closure of the initial diagram (the rc-graphs of w)."""
    start = initial_diagram(w)
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for d in frontier:
            for d2 in ladder_moves(d):
                if d2 not in seen:
                    seen.add(d2)
                    nxt.append(d2)
        frontier = nxt
    return seen


def diagram_weight(d: Diagram) -> Polynomial:
    return poly_prod(Polynomial.linear(xvar(i), yvar(j)) for (i, j) in d)


def double_schubert_rc(w: Perm) -> Polynomial:
    return poly_sum(diagram_weight(d) for d in rc_graphs(w))


def transpose_diagram(d: Diagram) -> Diagram:
    return frozenset((j, i) for (i, j) in d)


def diagram_text(d: Diagram, rows: int | None = None, cols: int | None = None) -> str:
    """ASCII grid with `+` for cells, `.` for empty positions."""
    rows = rows or max((i for i, _ in d), default=1)
    cols = cols or max((j for _, j in d), default=1)
    lines = []
    for i in range(1, rows + 1):
        lines.append("".join("+" if (i, j) in d else "." for j in range(1, cols + 1)))
    return "\n".join(lines)


# -- vexillary permutations, flags, flagged Schur ------------------------------

def flag(w: Perm) -> tuple:
    """Flag of a vexillary permutation, from its code."""
    if not cb.is_vexillary(w):
        raise NotVexillary(f"{w} contains 2143")
    c = cb.code(w)
    es = []
    for i, ci in enumerate(c):
        if ci == 0:
            continue
        e = max(j for j in range(i, len(c)) if c[j] >= ci)
        es.append(e + 1)
    return tuple(sorted(es))


def essential_set(w: Perm) -> set[tuple[int, int]]:
    """Southeast corners of the Rothe diagram of w."""
    n = len(w)
    dw = {
        (i, j)
        for i in range(1, n + 1)
        for j in range(1, n + 1)
        if w[i - 1] > j and all(w[k - 1] != j for k in range(1, i))
    }
    return {
        (i, j)
        for (i, j) in dw
        if (i + 1, j) not in dw and (i, j + 1) not in dw and (i + 1, j + 1) not in dw
    }


def ssyt_enumerate(shape, flags) -> list[tuple]:
    """All semistandard tableaux of the given shape with row bounds.

    Rows weakly increase, columns strictly increase, entries in row i are
    at most flags[i-1].  Tableaux are tuples of row tuples.
    """
    shape = tuple(shape)
    flags = tuple(flags)
    if len(flags) < len(shape):
        raise ValueError("need one flag per row")
    out = []
    rows: list[list[int]] = [[] for _ in shape]

    def fill(r: int, c: int):
        if r == len(shape):
            out.append(tuple(tuple(row) for row in rows))
            return
        if c == shape[r]:
            fill(r + 1, 0)
            return
        lo = rows[r][c - 1] if c else 1
        if r and c < shape[r - 1]:
            lo = max(lo, rows[r - 1][c] + 1)
        for val in range(lo, flags[r] + 1):
            rows[r].append(val)
            fill(r, c + 1)
            rows[r].pop()

    fill(0, 0)
    return out


def tableau_type(t) -> dict[int, int]:
    counts: dict[int, int] = {}
    for row in t:
        for a in row:
            counts[a] = counts.get(a, 0) + 1
    return counts


def flagged_schur(shape, flags) -> Polynomial:
    """Sum of x^{type(T)} over SSYT(shape, flags)."""
    return poly_sum(
        Polynomial.monomial([(xvar(a), e) for a, e in sorted(tableau_type(t).items())])
        for t in ssyt_enumerate(shape, flags)
    )


def schur_flags(lam, n: int) -> tuple:
    """Row bounds (n - lam_1, n - lam_2, ...) used by the stationary formulas."""
    return tuple(n - a for a in lam)


def linear_factor_pullout(w: Perm, l: int) -> bool:
    """Check S_{w'} = prod_{k<=l}(x1 - y_k) * S_w(x2, x3, ...; y)
    where c(w') = (l, c(w)); requires c(w^{-1}) to vanish after position l.

    Raises HypothesisFails if the code condition does not hold; returns the
    truth of the identity otherwise.
    """
    tilde = cb.code(cb.inverse(w))
    if any(tilde[m] for m in range(l, len(tilde))):
        raise HypothesisFails(
            f"code of inverse must vanish after position {l}: {tilde}"
        )
    cw = cb.code(w)
    wprime = cb.code_inverse((l,) + cw)
    lhs = double_schubert_dd(wprime)
    base = double_schubert_dd(w)
    shifted = substitute(
        base,
        {xvar(i): Polynomial.variable(xvar(i + 1))
         for i in range(len(w), 0, -1)},
    )
    rhs = shifted * poly_prod(
        Polynomial.linear(xvar(1), yvar(k)) for k in range(1, l + 1)
    )
    return lhs == rhs

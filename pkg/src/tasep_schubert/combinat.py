"""Permutation and partition combinatorics for the ring states.

Permutations are tuples of 1..n in one-line notation; partitions are tuples
of weakly decreasing positive parts.  Everything here is exact and small:
pattern scans are naive (n <= 12 in practice) and enumerations materialize
their results.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations
from math import comb

Perm = tuple
Partition = tuple

EVIL_PATTERNS = ((2, 4, 1, 3), (4, 1, 3, 2), (4, 2, 1, 3), (3, 2, 1, 4))
VEXILLARY_PATTERN = (2, 1, 4, 3)


class CombinatError(Exception):
    pass


class InvalidCode(CombinatError):
    pass


class NotSpecialState(CombinatError):
    pass


class InvalidParSeq(CombinatError):
    pass


class NotValid(CombinatError):
    """Partition is not valid for the given ring size."""


# -- permutations -----------------------------------------------------------

def check_perm(w: Perm) -> Perm:
    n = len(w)
    if sorted(w) != list(range(1, n + 1)):
        raise CombinatError(f"not a permutation of 1..{n}: {w}")
    return tuple(w)


def identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


def inverse(w: Perm) -> Perm:
    out = [0] * len(w)
    for i, a in enumerate(w):
        out[a - 1] = i + 1
    return tuple(out)


def compose(u: Perm, v: Perm) -> Perm:
    """(u v)(i) = u(v(i))."""
    return tuple(u[v[i] - 1] for i in range(len(v)))


def longest_element(n: int) -> Perm:
    return tuple(range(n, 0, -1))


def apply_s(w: Perm, i: int) -> Perm:
    """Right action swapping positions i, i+1 (1-based)."""
    wl = list(w)
    wl[i - 1], wl[i] = wl[i], wl[i - 1]
    return tuple(wl)


def cyclic_shift(w: Perm, a: int = 1) -> Perm:
    """sigma^a: (w_1,...,w_n) -> (w_{1+a},...,w_n,w_1,...)."""
    n = len(w)
    a %= n
    return w[a:] + w[:a]


def cyclic_standard(w: Perm) -> Perm:
    """Canonical representative of the cyclic class: rotate 1 to the front."""
    return cyclic_shift(w, w.index(1))


def inversions(w: Perm) -> int:
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


def descents(w) -> list[int]:
    """Positions i (1-based) with w_i > w_{i+1}; works on any int sequence."""
    return [i + 1 for i in range(len(w) - 1) if w[i] > w[i + 1]]


# -- Lehmer codes ------------------------------------------------------------

def code(w: Perm) -> tuple:
    n = len(w)
    return tuple(
        sum(1 for j in range(i + 1, n) if w[j] < w[i]) for i in range(n)
    )


def is_valid_code(c) -> bool:
    n = len(c)
    return all(0 <= c[i] and c[i] + i + 1 <= n for i in range(n))


def code_inverse(c) -> Perm:
    """Permutation with the given code; raises InvalidCode."""
    if not is_valid_code(c):
        raise InvalidCode(f"not a Lehmer code: {tuple(c)}")
    avail = list(range(1, len(c) + 1))
    return tuple(avail.pop(ci) for ci in c)


def shape(w: Perm) -> Partition:
    return tuple(sorted((v for v in code(w) if v), reverse=True))


def trim(w: Perm) -> Perm:
    """Drop trailing fixed points (keep at least one letter)."""
    wl = list(w)
    while len(wl) > 1 and wl[-1] == len(wl):
        wl.pop()
    return tuple(wl)


def extend(w: Perm, n: int) -> Perm:
    """Append fixed points up to length n."""
    if n < len(w):
        raise ValueError("cannot shrink a permutation")
    return tuple(w) + tuple(range(len(w) + 1, n + 1))


# -- pattern avoidance -------------------------------------------------------

def contains_pattern(w: Perm, p: Perm) -> bool:
    """True iff some subsequence of w is order-isomorphic to p."""
    k = len(p)
    p = tuple(p)
    for sub in combinations(w, k):
        std = [0] * k
        for rank, idx in enumerate(sorted(range(k), key=lambda t: sub[t]), 1):
            std[idx] = rank
        if tuple(std) == p:
            return True
    return False


def is_evil_avoiding(w: Perm) -> bool:
    return not any(contains_pattern(w, p) for p in EVIL_PATTERNS)


def is_vexillary(w: Perm) -> bool:
    return not contains_pattern(w, VEXILLARY_PATTERN)


def evil_avoiding_via_code(w: Perm) -> bool:
    """Code-descent criterion: w avoids 3142, 3214, 2431, 3241,
    equivalently w^{-1} is evil-avoiding."""
    n = len(w)
    c = code(w)
    for j in descents(w):
        b = None
        for bb in range(j, 0, -1):
            if 0 < c[bb - 1] < n - j:
                b = bb
                break
            if bb > 1 and not w[bb - 2] < w[bb - 1]:
                break
        if b is None:
            continue
        if any(c[m] != 0 for m in range(j, min(j + c[b - 1], n))):
            return False
    return True


def recoils(w: Perm) -> int:
    pos = {a: i for i, a in enumerate(w)}
    return sum(1 for a in range(1, len(w)) if pos[a + 1] < pos[a])


def is_k_grassmannian_state(w: Perm, k: int | None = None) -> bool:
    """Membership in St(n, k): starts with 1, evil-avoiding, k recoils."""
    if w[0] != 1 or not is_evil_avoiding(w):
        return False
    return True if k is None else recoils(w) == k


def special_states(n: int, k: int | None = None) -> list[Perm]:
    """St(n, k) (all k when k is None), in lexicographic order."""
    out = []
    for rest in permutations(range(2, n + 1)):
        w = (1,) + rest
        if is_evil_avoiding(w) and (k is None or recoils(w) == k):
            out.append(w)
    return out


def evil_avoiding_count_exhaustive(n: int) -> int:
    return sum(
        1 for w in permutations(range(1, n + 1)) if is_evil_avoiding(w)
    )


@lru_cache(maxsize=None)
def e_n(n: int) -> int:
    """Number of evil-avoiding permutations of n, via the integer recurrence
    e(n) = 4e(n-1) - 2e(n-2).  (The closed form with sqrt(2) surds is never
    evaluated in floating point.)"""
    if n <= 0:
        raise ValueError("n must be positive")
    if n == 1:
        return 1
    if n == 2:
        return 2
    return 4 * e_n(n - 1) - 2 * e_n(n - 2)


def t_nk(n: int, k: int) -> int:
    """Closed form T(n,k) = sum_i 2^i C(i+k-1, k-1) C(n-2-i, k)."""
    if k == 0:
        return 1
    return sum(
        (1 << i) * comb(i + k - 1, k - 1) * comb(n - 2 - i, k)
        for i in range(0, n - k - 1)
    )


# -- partitions and Val(n) ---------------------------------------------------

def check_partition(lam) -> Partition:
    lam = tuple(lam)
    if any(a < 1 for a in lam) or any(
        lam[i] < lam[i + 1] for i in range(len(lam) - 1)
    ):
        raise CombinatError(f"not a partition: {lam}")
    return lam


def mul_largest(lam: Partition) -> int:
    """Multiplicity of the largest part."""
    if not lam:
        return 0
    return sum(1 for a in lam if a == lam[0])


def is_valid_for(lam: Partition, n: int) -> bool:
    """Properly inside a length(lam) x (n - length(lam)) rectangle."""
    if not lam:
        return False
    r = len(lam)
    return lam[0] < n - r or (lam[0] <= n - r and any(a < lam[0] for a in lam))


def val_n(n: int) -> list[Partition]:
    """All partitions valid for n, sorted."""
    out = []
    for r in range(1, n - 1):
        width = n - r
        for lam in _partitions_in_box(r, width):
            if lam and is_valid_for(lam, n):
                out.append(lam)
    return sorted(set(out))


def _partitions_in_box(rows: int, width: int):
    def rec(prefix, rows_left, maxpart):
        yield tuple(prefix)
        if rows_left == 0:
            return
        for a in range(min(maxpart, width), 0, -1):
            prefix.append(a)
            yield from rec(prefix, rows_left - 1, a)
            prefix.pop()
    yield from rec([], rows, width)


def g_n(lam: Partition, n: int) -> tuple:
    """Integer vector g_n(lam): place each distinct part mu_i at position
    n - mu_i, then fill the remaining multiplicity leftward into zeros.

    Defined for any partition of length <= n-2 whose parts fit (in the
    theorems lam is always valid for n, but the procedure is more general).
    """
    lam = check_partition(lam)
    if len(lam) > n - 2:
        raise NotValid(f"{lam} has more than n-2 = {n - 2} parts")
    v = [0] * n
    distinct = []
    for a in lam:
        if distinct and distinct[-1][0] == a:
            distinct[-1][1] += 1
        else:
            distinct.append([a, 1])
    for mu, k in distinct:
        if mu > n - 1 or v[n - mu - 1]:
            raise NotValid(f"part {mu} does not fit into g_{n}")
        v[n - mu - 1] = mu
        remaining = k - 1
        pos = n - mu - 2
        while remaining and pos >= 0:
            if v[pos] == 0:
                v[pos] = mu
                remaining -= 1
            pos -= 1
        if remaining:
            raise NotValid(f"{lam} does not fit into g_{n}")
    return tuple(v)


# -- ParSeq(n, k) and the Psi bijection ---------------------------------------

def parseq_valid(seq, n: int) -> bool:
    seq = tuple(tuple(l) for l in seq)
    for lam in seq:
        if not is_valid_for(lam, n):
            return False
    for i in range(len(seq) - 1):
        ell = seq[i][-1]
        nxt = seq[i + 1]
        head = n - ell
        if len(nxt) < head:
            return False
        if any(nxt[j] != nxt[0] for j in range(head)):
            return False
    return True


def parseq_enumerate(n: int, k: int) -> list[tuple]:
    """All of ParSeq(n, k), lexicographically sorted."""
    if k == 0:
        return [()]
    if k < 0 or k > n - 2:
        return []
    vals = val_n(n)
    out: list[tuple] = []

    def rec(seq):
        if len(seq) == k:
            out.append(tuple(seq))
            return
        for lam in vals:
            seq.append(lam)
            if parseq_valid(seq[-2:], n):
                rec(seq)
            seq.pop()

    rec([])
    return sorted(out)


def psi(w: Perm) -> tuple:
    """The partition sequence of a special state w in St(n, k)."""
    n = len(w)
    if not is_k_grassmannian_state(w):
        raise NotSpecialState(f"{w} is not in St(n,k)")
    c = code(inverse(w))
    a = [0] + descents(c)
    lams = []
    for i in range(1, len(a)):
        ai, aprev = a[i], a[i - 1]
        vec = [n - ai] * ai
        for j in range(aprev, ai):
            vec[j] -= c[j]
        lam = tuple(x for x in vec if x)
        lams.append(lam)
    return tuple(lams)


def psi_inverse(seq, n: int) -> Perm:
    """Inverse bijection ParSeq(n,k) -> St(n,k)."""
    seq = tuple(tuple(l) for l in seq)
    if not parseq_valid(seq, n):
        raise InvalidParSeq(f"{seq} is not in ParSeq({n}, {len(seq)})")
    c = [0] * n
    for lam in seq:
        f = lam[0]
        for j in range(n - f):
            c[j] += f - (lam[j] if j < len(lam) else 0)
    return inverse(code_inverse(c))


# -- alpha statistics and the S(b) indexing ----------------------------------

def alpha(w: Perm) -> tuple:
    """(alpha_1, ..., alpha_{n-2}): alpha_i counts letters > i+1 in the
    cyclic window from the position of i+1 to the position of i."""
    n = len(w)
    pos = {a: i for i, a in enumerate(w)}
    out = []
    for i in range(1, n - 1):
        r, s = pos[i + 1], pos[i]
        cnt = 0
        j = r
        while True:
            if w[j] > i + 1:
                cnt += 1
            if j == s:
                break
            j = (j + 1) % n
        out.append(cnt)
    return tuple(out)


def s_construct(b) -> Perm:
    """The state S(b_1, ..., b_{n-2}) built by the insertion procedure;
    satisfies alpha_i(S(b)) = n-1-i-b_{n-1-i}."""
    b = tuple(b)
    n = len(b) + 2
    if any(not 0 <= b[i] <= i + 1 for i in range(len(b))):
        raise CombinatError(f"need 0 <= b_i <= i: {b}")
    w = list(range(1, n + 1))
    for i in range(1, n - 1):
        bi = b[i - 1]
        # invariant: w starts with 1, ..., n-i; rebuild around the letter n-i
        tail = w[n - i:]
        w = list(range(1, n - i)) + tail[i - bi:] + [n - i] + tail[:i - bi]
    return tuple(w)


def shifting_vector(seq, n: int) -> tuple:
    """(a_1..a_k): a_1 = 0, a_i = a_{i-1} + lam^{i-1}_1 + length - n."""
    seq = tuple(tuple(l) for l in seq)
    out = []
    for i, lam in enumerate(seq):
        if i == 0:
            out.append(0)
        else:
            prev = seq[i - 1]
            out.append(out[-1] + prev[0] + len(prev) - n)
    return tuple(out)


def w_of_lambda(lam: Partition, n: int) -> Perm:
    """Lattice-path state w(lam; n): label the vertical steps 1..n-lam_1 top
    to bottom and the horizontal steps n-lam_1+1..n right to left, then read
    along the path."""
    if not is_valid_for(lam, n):
        raise NotValid(f"{lam} is not valid for n={n}")
    height = n - lam[0]
    padded = list(lam) + [0] * (height - len(lam))
    word = []
    h = n - lam[0] + 1
    for r in range(height):
        word.append(r + 1)
        nxt = padded[r + 1] if r + 1 < height else 0
        for _ in range(padded[r] - nxt):
            word.append(h)
            h += 1
    return tuple(word)


def direct_sum(u: Perm, v: Perm) -> Perm:
    m = len(u)
    return tuple(u) + tuple(a + m for a in v)


def decompose_special(w: Perm):
    """Split w in St(n,k), k >= 2, into (lambda^1, w_down) per the direct-sum
    decomposition: sigma^{a_2}(w) = wbar(lambda^1; n) (+) w', and
    w_down = id (+) w' lies in St(n, k-1)."""
    seq = psi(w)
    if len(seq) < 2:
        raise NotSpecialState("need at least two recoils to decompose")
    n = len(w)
    lam1 = seq[0]
    a2 = lam1[0] + len(lam1) - n
    u = cyclic_shift(w, a2)
    head = n - lam1[-1]
    wprime = tuple(a - head for a in u[head:])
    w_down = direct_sum(identity(head), wprime)
    return lam1, w_down

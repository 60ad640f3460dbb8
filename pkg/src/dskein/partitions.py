"""Partition combinatorics: containment, conjugation, box duality,
Littlewood-Richardson coefficients, and the classification constants.

Partitions are tuples of weakly decreasing positive ints; () is the empty
partition.  LR coefficients are computed by direct enumeration of
Littlewood-Richardson skew tableaux with a lattice-word check; instances
here are tiny and exactness is the only requirement.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

Partition = tuple

__all__ = [
    "Partition", "check_partition", "size", "conjugate", "contains",
    "partitions_of", "partitions_in_box", "lr_coefficient", "preceq",
    "lr_support", "ab_dual", "self_dual_set", "ClassConstants",
    "class_constants", "jays_member", "hook_vanishes", "num_partitions",
]


def check_partition(p) -> Partition:
    t = tuple(int(x) for x in p)
    if any(x <= 0 for x in t) or any(t[i] < t[i + 1] for i in range(len(t) - 1)):
        raise ValueError(f"not a partition: {p!r}")
    return t


def size(p: Partition) -> int:
    return sum(p)


def conjugate(p: Partition) -> Partition:
    if not p:
        return ()
    out = []
    for c in range(p[0]):
        out.append(sum(1 for x in p if x > c))
    return tuple(out)


def contains(lam: Partition, mu: Partition) -> bool:
    """True iff lam_i <= mu_i for all i (lam fits inside mu)."""
    if len(lam) > len(mu):
        return False
    return all(lam[i] <= mu[i] for i in range(len(lam)))


@lru_cache(maxsize=None)
def partitions_of(n: int, max_part: int | None = None) -> tuple[Partition, ...]:
    if max_part is None or max_part > n:
        max_part = n
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def num_partitions(n: int) -> int:
    return len(partitions_of(n))


def partitions_in_box(a: int, b: int) -> list[Partition]:
    """All partitions with at most a rows and parts at most b."""
    out = []

    def rec(prefix, rows_left, cap):
        out.append(tuple(prefix))
        if rows_left == 0:
            return
        for part in range(min(cap, b), 0, -1):
            prefix.append(part)
            rec(prefix, rows_left - 1, part)
            prefix.pop()

    rec([], a, b)
    return out


def _row(p: Partition, i: int) -> int:
    return p[i] if 0 <= i < len(p) else 0


def lr_coefficient(lam: Partition, mu: Partition, nu: Partition) -> int:
    """Number of LR skew tableaux of shape nu/lam and content mu."""
    lam, mu, nu = tuple(lam), tuple(mu), tuple(nu)
    if size(nu) != size(lam) + size(mu) or not contains(lam, nu):
        return 0
    if not mu:
        return 1
    rows = len(nu)
    # cells in reverse reading order: top row to bottom, right to left
    cells = []
    for r in range(rows):
        lo, hi = _row(lam, r), nu[r]
        for c in range(hi - 1, lo - 1, -1):
            cells.append((r, c))
    k = len(mu)
    fill = {}
    counts = [0] * (k + 1)
    total = 0

    def place(idx):
        nonlocal total
        if idx == len(cells):
            total += 1
            return
        r, c = cells[idx]
        right = fill.get((r, c + 1))
        above = fill.get((r - 1, c)) if r > 0 and c >= _row(lam, r - 1) else None
        vmax = right if right is not None else k
        for v in range(1, vmax + 1):
            if counts[v] >= mu[v - 1]:
                continue
            if v > 1 and counts[v] >= counts[v - 1]:
                continue  # lattice word violated
            if above is not None and v <= above:
                continue
            counts[v] += 1
            fill[(r, c)] = v
            place(idx + 1)
            del fill[(r, c)]
            counts[v] -= 1

    place(0)
    return total


def lr_support(lam: Partition, mu: Partition) -> dict[Partition, int]:
    """All nu with c^nu_{lam,mu} > 0, with multiplicities."""
    out = {}
    for nu in partitions_of(size(lam) + size(mu)):
        c = lr_coefficient(lam, mu, nu)
        if c:
            out[nu] = c
    return out


def preceq(lam: Partition, mu: Partition) -> bool:
    """Order by tensor-summand reachability: some nu has c^mu_{lam,nu} > 0."""
    n = size(mu) - size(lam)
    if n < 0:
        return False
    return any(lr_coefficient(lam, nu, mu) > 0 for nu in partitions_of(n))


def ab_dual(lam: Partition, a: int, b: int) -> Partition:
    """Complement of lam in the a x b box: mu_i = b - lam_{a+1-i}."""
    if len(lam) > a or (lam and lam[0] > b):
        raise ValueError(f"{lam} does not fit in the {a}x{b} box")
    mu = [b - _row(lam, a - i) for i in range(1, a + 1)]
    while mu and mu[-1] == 0:
        mu.pop()
    return tuple(mu)


def self_dual_set(a: int, b: int) -> set[Partition]:
    """All partitions in the a x b box equal to their own box complement."""
    if (a * b) % 2 != 0:
        raise ValueError("self-dual partitions need a box of even size")
    out = set()
    for lam in partitions_in_box(a, b):
        if ab_dual(lam, a, b) == lam:
            assert size(lam) == a * b // 2
            out.add(lam)
    return out


@dataclass(frozen=True)
class ClassConstants:
    """Side constants of the j-th rectangle partition at parameter d."""

    d: int
    j: int
    m: int
    n: int
    r: int
    nu: Partition

    def __post_init__(self):
        assert 2 * self.n == self.m - self.d
        assert self.r == (self.m + 1) * (self.n + 1)


def class_constants(d: int, j: int) -> ClassConstants:
    """Constants m_j, n_j, r_j and the rectangle nu_j = ((2n+2)^(m+1))."""
    if j < 0:
        raise ValueError("level must be nonnegative")
    if d > 0:
        m = d + 2 * j - 2
    elif d % 2 == 0:
        m = 2 * j - 2
    else:
        m = 2 * j - 1
    n = (m - d) // 2
    rows, width = m + 1, 2 * n + 2
    nu = (width,) * rows if (j > 0 and rows > 0 and width > 0) else ()
    return ClassConstants(d=d, j=j, m=m, n=n, r=(m + 1) * (n + 1), nu=nu)


def jays_member(mu: Partition, d: int, j: int) -> bool:
    """Conjugate-row inequality selecting the level-j thick class."""
    cc = class_constants(d, j)
    mt = conjugate(mu)
    return all(
        _row(mt, i - 1) + _row(mt, 2 * cc.n + 2 - i) > cc.m
        for i in range(1, cc.n + 2)
    )


def hook_vanishes(lam: Partition, m: int, n: int) -> bool:
    """True iff lam is not an (m, 2n)-hook partition: lam_{m+1} > 2n."""
    if m < 0 or n < 0:
        raise ValueError("hook parameters must be nonnegative")
    return _row(lam, m) > 2 * n

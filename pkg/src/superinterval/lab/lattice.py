"""Integer lattice tools behind residue spans and cone membership.

A submodule of (Z_n)^k generated by g_1..g_r is the image of the lattice
L = rowspace_Z(g_1, .., g_r, n e_1, .., n e_k).  Its Hermite normal form H
is upper triangular with positive diagonal d_i dividing n, so

* the submodule has n^k / prod(d_i) elements,
* membership is a single reduction pass against H,
* the elements are exactly sum c_i H_i mod n with 0 <= c_i < n / d_i.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from math import prod


def hermite(rows: list, ncols: int) -> tuple:
    """Row-reduce integer ``rows`` to Hermite normal form.

    Returns ``(H, T, pivots)`` with ``H = T * rows`` (nonzero rows of H only,
    with matching rows of T) and ``pivots`` the pivot column of each row.
    """
    a = [list(r) for r in rows]
    t = [[int(i == j) for j in range(len(rows))] for i in range(len(rows))]
    pivots = []
    r = 0
    for col in range(ncols):
        while True:
            nz = [i for i in range(r, len(a)) if a[i][col] != 0]
            if not nz:
                break
            i_min = min(nz, key=lambda i: abs(a[i][col]))
            a[r], a[i_min] = a[i_min], a[r]
            t[r], t[i_min] = t[i_min], t[r]
            done = True
            for i in range(r + 1, len(a)):
                if a[i][col]:
                    q = a[i][col] // a[r][col]
                    a[i] = [x - q * y for x, y in zip(a[i], a[r])]
                    t[i] = [x - q * y for x, y in zip(t[i], t[r])]
                    if a[i][col]:
                        done = False
            if done:
                break
        if r < len(a) and a[r][col] != 0:
            if a[r][col] < 0:
                a[r] = [-x for x in a[r]]
                t[r] = [-x for x in t[r]]
            for i in range(r):
                q = a[i][col] // a[r][col]
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[r])]
                    t[i] = [x - q * y for x, y in zip(t[i], t[r])]
            pivots.append(col)
            r += 1
            if r == len(a):
                break
    return a[:r], t[:r], pivots


class ResidueModule:
    """The additive subgroup of (Z_n)^k generated by ``gens``."""

    def __init__(self, n: int, k: int, gens=()):
        self.n = n
        self.k = k
        self.gens = [tuple(int(x) % n for x in g) for g in gens]
        for g in self.gens:
            if len(g) != k:
                raise ValueError("generator length does not match the ambient dimension")
        rows = [list(g) for g in self.gens] + [[n * int(i == j) for j in range(k)] for i in range(k)]
        h, t, piv = hermite(rows, k)
        assert piv == list(range(k))
        self.basis = h
        self._transform = t

    @property
    def diagonal(self) -> list:
        return [self.basis[i][i] for i in range(self.k)]

    def size(self) -> int:
        return prod(self.n // d for d in self.diagonal)

    def _reduce(self, v) -> list | None:
        """Coefficients q with v = sum q_i H_i over Z, or None."""
        v = [int(x) % self.n for x in v]
        q = []
        for i, row in enumerate(self.basis):
            if v[i] % row[i]:
                return None
            c = v[i] // row[i]
            q.append(c)
            if c:
                v = [x - c * y for x, y in zip(v, row)]
        assert not any(v)
        return q

    def contains(self, v) -> bool:
        return self._reduce(v) is not None

    def coefficients(self, v) -> list | None:
        """Residues c_j with v = sum c_j gens_j (mod n), or None if v is outside."""
        q = self._reduce(v)
        if q is None:
            return None
        r = len(self.gens)
        return [sum(qi * self._transform[i][j] for i, qi in enumerate(q)) % self.n for j in range(r)]

    def elements(self):
        ranges = [range(self.n // d) for d in self.diagonal]
        for cs in product(*ranges):
            v = [0] * self.k
            for c, row in zip(cs, self.basis):
                if c:
                    v = [x + c * y for x, y in zip(v, row)]
            yield tuple(x % self.n for x in v)

    def __add__(self, other: "ResidueModule") -> "ResidueModule":
        return ResidueModule(self.n, self.k, self.gens + other.gens)

    def intersection(self, other: "ResidueModule") -> "ResidueModule":
        # rows (H1 | H1) and (H2 | 0): combinations vanishing on the left half
        # carry elements of L1 and L2 in the right half
        k = self.k
        rows = [list(r) + list(r) for r in self.basis] + [list(r) + [0] * k for r in other.basis]
        h, _, piv = hermite(rows, 2 * k)
        tail = [row[k:] for row, p in zip(h, piv) if p >= k]
        return ResidueModule(self.n, k, tail)

    def is_trivial(self) -> bool:
        return self.size() == 1

    def nonzero_element(self):
        for g in self.gens:
            if any(g):
                return g
        return None

    def is_whole(self) -> bool:
        return self.size() == self.n ** self.k


# -- nonnegative cones -------------------------------------------------------


def cone_coefficients(target, gens) -> list | None:
    """Nonnegative integer c with sum c_j gens_j == target, or None.

    Exact: each coefficient is bounded by the target, so a depth-first
    search over the generators terminates.
    """
    target = list(target)
    gens = [list(g) for g in gens]
    k = len(target)
    # positions a generator can still touch, used to prune dead branches
    reach = [set() for _ in range(len(gens) + 1)]
    for j in range(len(gens) - 1, -1, -1):
        reach[j] = reach[j + 1] | {p for p in range(k) if gens[j][p] != 0}

    def dfs(j, rest):
        if all(x == 0 for x in rest):
            return [0] * (len(gens) - j)
        if j == len(gens):
            return None
        if any(x != 0 and p not in reach[j] for p, x in enumerate(rest)):
            return None
        g = gens[j]
        pos = [p for p in range(k) if g[p] != 0]
        if not pos:
            sub = dfs(j + 1, rest)
            return None if sub is None else [0] + sub
        cmax = min(int(Fraction(rest[p]) // Fraction(g[p])) for p in pos)
        for c in range(cmax, -1, -1):
            nxt = [x - c * y for x, y in zip(rest, g)]
            sub = dfs(j + 1, nxt)
            if sub is not None:
                return [c] + sub
        return None

    return dfs(0, target)


def nonneg_solution(target, gens) -> list | None:
    """Nonnegative rational c with sum c_j gens_j == target, or None.

    Phase one of the simplex method in exact arithmetic, Bland's rule.
    """
    m, r = len(target), len(gens)
    if r == 0:
        return [] if all(x == 0 for x in target) else None
    # equality rows: sum_j gens_j[p] c_j + a_p = target_p, artificials a_p >= 0
    rows = []
    for p in range(m):
        row = [Fraction(gens[j][p]) for j in range(r)] + [Fraction(int(i == p)) for i in range(m)]
        rows.append(row + [Fraction(target[p])])
    basis = [r + p for p in range(m)]
    ncols = r + m
    while True:
        # reduced costs of the phase-one objective (sum of artificials)
        cost = [Fraction(0)] * ncols
        for j in range(ncols):
            c = Fraction(1) if j >= r else Fraction(0)
            for i, bj in enumerate(basis):
                cb = Fraction(1) if bj >= r else Fraction(0)
                c -= cb * rows[i][j]
            cost[j] = c
        entering = next((j for j in range(ncols) if cost[j] < 0), None)
        if entering is None:
            break
        ratios = [(rows[i][-1] / rows[i][entering], basis[i], i) for i in range(m) if rows[i][entering] > 0]
        if not ratios:
            break
        _, _, leave = min(ratios)
        piv = rows[leave][entering]
        rows[leave] = [x / piv for x in rows[leave]]
        for i in range(m):
            if i != leave and rows[i][entering] != 0:
                f = rows[i][entering]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[leave])]
        basis[leave] = entering
    sol = [Fraction(0)] * ncols
    for i, bj in enumerate(basis):
        sol[bj] = rows[i][-1]
    if any(sol[j] != 0 for j in range(r, ncols)):
        return None
    c = sol[:r]
    check = [sum(c[j] * gens[j][p] for j in range(r)) for p in range(m)]
    assert check == [Fraction(x) for x in target]
    return c

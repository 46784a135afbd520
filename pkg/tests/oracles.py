"""Independent, deliberately naive reference implementations.

Everything here recomputes quantities from first principles with none of the
library's machinery (no shared echelon code, no incremental updates, no
union-find), so agreement is meaningful.  Slow on purpose; only run on small
inputs.
"""
from __future__ import annotations

import itertools
from fractions import Fraction


# ---------------------------------------------------------------------------
# Semigroups, the slow way

def naive_closure(gens, bound):
    """Membership bitmap of the monoid generated by gens, up to bound."""
    mem = [False] * (bound + 1)
    mem[0] = True
    changed = True
    while changed:
        changed = False
        for x in range(bound + 1):
            if mem[x]:
                continue
            for g in gens:
                if g <= x and mem[x - g]:
                    mem[x] = True
                    changed = True
                    break
    return mem


def naive_conductor(mem):
    last_gap = -1
    for x, m in enumerate(mem):
        if not m:
            last_gap = x
    return last_gap + 1


def naive_w0(members, l):
    """2 * #(members strictly below l) - l."""
    return 2 * sum(1 for s in members if s < l) - l


def naive_weight_values(mem, conductor):
    members = [x for x, m in enumerate(mem) if m]
    return [naive_w0(members, l) for l in range(conductor + 1)]


def naive_components(values, n):
    """Maximal runs of positions with value <= n, as (start, end) pairs."""
    runs, start = [], None
    for i, v in enumerate(values):
        if v <= n and start is None:
            start = i
        if v > n and start is not None:
            runs.append((start, i - 1))
            start = None
    if start is not None:
        runs.append((start, len(values) - 1))
    return runs


def brute_force_symmetric_semigroups(max_conductor):
    """All additively closed symmetric sets with conductor <= max_conductor.

    Pure exhaustion over membership bitmaps; feasible up to ~16.  Returns
    sorted tuples of members below the conductor.
    """
    found = []
    for c in range(0, max_conductor + 1):
        if c == 0:
            found.append(((), 0))
            continue
        if c % 2 != 0:
            continue  # symmetric sets have even conductor
        inner = list(range(1, c - 1))  # 0 is in, c-1 must be out
        for bits in itertools.product([False, True], repeat=len(inner)):
            mem = [True] + list(bits) + [False, True]
            members = [x for x in range(c) if mem[x]]
            mset = set(members)
            closed = all(
                (a + b in mset or a + b >= c)
                for a in members
                for b in members
            )
            if not closed:
                continue
            symmetric = all((x in mset) != ((c - 1 - x) in mset) for x in range(c))
            if not symmetric:
                continue
            found.append((tuple(members), c))
    return found


# ---------------------------------------------------------------------------
# Dense exact linear algebra over Q

def frac_rank(rows):
    """Row rank of a list of Fraction lists, destructive Gaussian elimination."""
    rows = [list(r) for r in rows]
    ncols = len(rows[0]) if rows else 0
    rank, col = 0, 0
    while rank < len(rows) and col < ncols:
        piv = next((i for i in range(rank, len(rows)) if rows[i][col] != 0), None)
        if piv is None:
            col += 1
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        pv = rows[rank][col]
        for i in range(len(rows)):
            if i != rank and rows[i][col] != 0:
                f = rows[i][col] / pv
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[rank])]
        rank += 1
        col += 1
    return rank


# ---------------------------------------------------------------------------
# Hilbert grids, the slow way: brute-force monomials, dense Fractions

def _series_mul(a, b, cut):
    out = [Fraction(0)] * cut
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            if i + j >= cut:
                break
            if y != 0:
                out[i + j] += x * y
    return out


def naive_hilbert_grid(branches, bounds, box):
    """h on the lattice box, from scratch.

    branches: per branch, a list of coordinate series given as
    [(coeff, exponent), ...] with Fraction coefficients.  bounds: truncation
    window per branch.  box: compute h(l) for every l with 0 <= l <= box.

    The local algebra is spanned by monomials in the coordinates; exponent
    vectors are enumerated exhaustively up to the window size.  Each monomial
    becomes one dense vector over all branches; h(l) = dim V - dim of the
    subspace vanishing below l componentwise.
    """
    r = len(branches)
    k = len(branches[0])
    cuts = list(bounds)

    # per coordinate, per branch: dense truncated series
    dense = []
    for i in range(k):
        per_branch = []
        for j in range(r):
            v = [Fraction(0)] * cuts[j]
            for coeff, e in branches[j][i]:
                if e < cuts[j]:
                    v[e] += Fraction(coeff)
            per_branch.append(v)
        dense.append(per_branch)

    ords = []
    for i in range(k):
        o = min(
            next((e for e, x in enumerate(dense[i][j]) if x != 0), cuts[j])
            for j in range(r)
        )
        ords.append(max(o, 1))

    # every exponent vector that can still touch some window: a monomial's
    # order in each branch is at least its weighted degree in the global
    # minimal orders, so degree > max window means the zero vector
    vectors = []
    max_deg = max(cuts)
    max_pow = [max_deg // ords[i] for i in range(k)]
    for expo in itertools.product(*(range(m + 1) for m in max_pow)):
        if sum(e * o for e, o in zip(expo, ords)) > max_deg:
            continue
        per_branch = []
        for j in range(r):
            acc = [Fraction(0)] * cuts[j]
            acc[0] = Fraction(1)
            for i in range(k):
                for _ in range(expo[i]):
                    acc = _series_mul(acc, dense[i][j], cuts[j])
            per_branch.append(acc)
        vectors.append([x for chunk in per_branch for x in chunk])

    offs = [sum(cuts[:j]) for j in range(r)]
    h = {}
    for l in itertools.product(*(range(b + 1) for b in box)):
        # h(l) = codimension of the vanishing-to-order-l subspace, which is
        # the rank of the evaluation on the coefficients below l
        low = []
        for j in range(r):
            low.extend(range(offs[j], offs[j] + min(l[j], cuts[j])))
        proj = [[row[c] for c in low] for row in vectors]
        proj = [p for p in proj if any(x != 0 for x in p)]
        h[l] = frac_rank(proj)
    return h


# ---------------------------------------------------------------------------
# Cubical cohomology, the slow way: dense coboundaries over Q

def naive_betti(cubes_by_dim, max_q):
    """Rational Betti numbers of a cubical complex.

    cubes_by_dim: dict q -> list of cubes, each cube a (base, axes) pair with
    base a tuple and axes a sorted tuple of axis indices.  Coboundary of a
    q-cube: all (q+1)-cubes having it as a face, with the incidence signs
    recomputed here from scratch.
    """
    def faces(base, axes):
        out = []
        for pos, a in enumerate(axes):
            rest = tuple(x for x in axes if x != a)
            sign = -1 if pos % 2 else 1
            upper = tuple(b + (1 if i == a else 0) for i, b in enumerate(base))
            out.append(((upper, rest), sign))
            out.append(((base, rest), -sign))
        return out

    betti = {}
    ranks = {}
    for q in range(max_q + 1):
        rows_idx = {c: i for i, c in enumerate(cubes_by_dim.get(q, []))}
        cols = cubes_by_dim.get(q + 1, [])
        mat = []
        for big in cols:
            row = [Fraction(0)] * len(rows_idx)
            for face, sign in faces(*big):
                row[rows_idx[face]] += sign
            mat.append(row)
        ranks[q] = frac_rank(mat) if mat and rows_idx else 0
    for q in range(max_q + 1):
        n_q = len(cubes_by_dim.get(q, []))
        betti[q] = n_q - ranks.get(q, 0) - ranks.get(q - 1, 0)
    return betti

"""Exact multigraded Hilbert functions of curve germs from parametrizations.

Everything here is exact integer linear algebra.  The local algebra of the
germ is approximated by the span of all truncated monomials in the
coordinate functions; within a large enough truncation window the
codimension counts are exactly the Hilbert function values h(l), because a
truncated representative of order >= l lifts to an honest element of order
>= l (tails beyond the window sit above l automatically).

Vectors are stored as numpy int64 arrays when that is safe and available,
and as plain Python integer lists otherwise; every operation guards against
int64 overflow and falls back to exact big-integer arithmetic, so results
never depend on which representation was used.
"""
from __future__ import annotations

import itertools
from bisect import bisect_left, insort
from collections import deque
from dataclasses import dataclass, field
from math import gcd, lcm

from ..errors import InputError, ValidationError
from ..semigroup import from_members as _semigroup_from_members
from ..weight1d import WeightSequence, weight_sequence
from .parametrization import BranchParametrization

try:  # optional accelerator; all arithmetic stays exact either way
    import numpy as _np
except ImportError:  # pragma: no cover - exercised only without numpy
    _np = None

_INT64_SAFE = 2**62


# ---------------------------------------------------------------------------
# exact integer vectors (numpy fast path, big-int fallback)
# ---------------------------------------------------------------------------


def _vec_zeros(n: int):
    if _np is not None:
        return _np.zeros(n, dtype=_np.int64)
    return [0] * n


def _vec_from_list(xs: list[int]):
    if _np is not None and all(abs(x) < _INT64_SAFE for x in xs):
        return _np.array(xs, dtype=_np.int64)
    return list(xs)


def _vec_max(v) -> int:
    if _np is not None and isinstance(v, _np.ndarray):
        return int(_np.abs(v).max()) if v.size else 0
    return max((abs(x) for x in v), default=0)


def _vec_list(v) -> list[int]:
    if _np is not None and isinstance(v, _np.ndarray):
        return [int(x) for x in v]
    return list(v)


def _vec_axpy(p: int, vec, q: int, row):
    """p*vec - q*row, exactly."""
    if (
        _np is not None
        and isinstance(vec, _np.ndarray)
        and isinstance(row, _np.ndarray)
        and abs(p) * _vec_max(vec) + abs(q) * _vec_max(row) < _INT64_SAFE
    ):
        return p * vec - q * row
    a = _vec_list(vec)
    b = _vec_list(row)
    return [p * x - q * y for x, y in zip(a, b)]


def _vec_lead(v) -> int:
    """Index of the first nonzero entry, or -1."""
    if _np is not None and isinstance(v, _np.ndarray):
        nz = _np.flatnonzero(v)
        return int(nz[0]) if nz.size else -1
    for i, x in enumerate(v):
        if x:
            return i
    return -1


def _vec_normalize(v, lead: int):
    """Divide out the content and make the leading entry positive."""
    if _np is not None and isinstance(v, _np.ndarray):
        g = int(_np.gcd.reduce(_np.abs(v)))
        if g > 1:
            v = v // g
        if int(v[lead]) < 0:
            v = -v
        return v
    g = 0
    for x in v:
        g = gcd(g, x)
        if g == 1:
            break
    if g > 1:
        v = [x // g for x in v]
    if v[lead] < 0:
        v = [-x for x in v]
    return v


def _vec_permute(v, perm: list[int]):
    if _np is not None and isinstance(v, _np.ndarray):
        return v[perm]
    return [v[i] for i in perm]


class _Echelon:
    """Integer row echelon form, rows kept sorted by leading index."""

    def __init__(self) -> None:
        self.rows: list[tuple[int, int, object]] = []  # (lead, pivot, vector)

    def __len__(self) -> int:
        return len(self.rows)

    def reduce(self, vec):
        """Fully reduce vec; return (lead, pivot, vec) or None if it vanishes."""
        steps = 0
        for lead, piv, row in self.rows:
            c = int(vec[lead])
            if c:
                vec = _vec_axpy(piv, vec, c, row)
                steps += 1
                if steps % 16 == 0:
                    lv = _vec_lead(vec)
                    if lv < 0:
                        return None
                    vec = _vec_normalize(vec, lv)
        lv = _vec_lead(vec)
        if lv < 0:
            return None
        vec = _vec_normalize(vec, lv)
        return (lv, int(vec[lv]), vec)

    def insert(self, triple) -> None:
        insort(self.rows, triple, key=lambda t: t[0])

    def add(self, vec):
        """Reduce and insert; return the inserted triple or None."""
        triple = self.reduce(vec)
        if triple is not None:
            self.insert(triple)
        return triple

    def leads(self) -> list[int]:
        return [lead for lead, _, _ in self.rows]


def _echelon_of(vectors) -> _Echelon:
    ech = _Echelon()
    for v in vectors:
        ech.add(v)
    return ech


# ---------------------------------------------------------------------------
# truncated coordinate series and the monomial span
# ---------------------------------------------------------------------------


def _integer_coordinates(P: BranchParametrization) -> list[list[tuple[tuple[int, int], ...]]]:
    """Coordinate series with integer coefficients, as [coord][branch] term lists.

    Each ambient coordinate is rescaled by the least common multiple of its
    coefficient denominators across all branches; rescaling a coordinate
    function does not change the algebra the coordinates generate.
    """
    d = P.ambient_dim
    out: list[list[tuple[tuple[int, int], ...]]] = []
    for k in range(d):
        denom = 1
        for j in range(P.r):
            for coeff, _ in P.branches[j][k]:
                denom = lcm(denom, coeff.denominator)
        per_branch = []
        for j in range(P.r):
            per_branch.append(
                tuple(
                    (exp, int(coeff * denom))
                    for coeff, exp in P.branches[j][k]
                )
            )
        out.append(per_branch)
    return out


def _mult_coordinate(vec, terms_per_branch, offs: list[int], bounds: tuple[int, ...]):
    """Truncated product of a window vector with one coordinate function."""
    n = offs[-1]
    use_np = _np is not None and isinstance(vec, _np.ndarray)
    if use_np:
        m = _vec_max(vec)
        worst = sum(
            abs(c) for terms in terms_per_branch for _, c in terms
        )
        if m * max(worst, 1) >= _INT64_SAFE:
            use_np = False
    if use_np:
        res = _np.zeros(n, dtype=_np.int64)
        for j, terms in enumerate(terms_per_branch):
            off, top = offs[j], offs[j + 1]
            nj = top - off
            if not terms:
                continue
            block = vec[off:top]
            for exp, c in terms:
                if exp >= nj:
                    continue
                res[off + exp : top] += c * block[: nj - exp]
        return res
    xs = _vec_list(vec)
    res = [0] * n
    for j, terms in enumerate(terms_per_branch):
        off, top = offs[j], offs[j + 1]
        nj = top - off
        for exp, c in terms:
            for a in range(nj - exp):
                x = xs[off + a]
                if x:
                    res[off + exp + a] += c * x
    return _vec_from_list(res)


def _monomial_span(coords, r: int, bounds: tuple[int, ...]) -> tuple[_Echelon, list[int]]:
    """Echelon basis of the span of all truncated coordinate monomials.

    Closure by repeated multiplication: every basis row is multiplied by
    every coordinate, new directions are inserted and queued, so the final
    span contains the truncation of every monomial.
    """
    offs = [0]
    for nj in bounds:
        offs.append(offs[-1] + nj)
    ech = _Echelon()
    queue: deque = deque()
    one = _vec_zeros(offs[-1])
    for j in range(r):
        one[offs[j]] = 1
    added = ech.add(one)
    if added is not None:
        queue.append(added[2])
    while queue:
        v = queue.popleft()
        for terms_per_branch in coords:
            prod = _mult_coordinate(v, terms_per_branch, offs, bounds)
            added = ech.add(prod)
            if added is not None:
                queue.append(added[2])
    return ech, offs


# ---------------------------------------------------------------------------
# per-branch pure orders and conductor detection
# ---------------------------------------------------------------------------


def _pure_orders(ech: _Echelon, offs: list[int], r: int, j: int) -> set[int]:
    """Orders on branch j of span elements vanishing on every other branch.

    Echelon with the other branches' columns first: rows whose leading
    entry lands inside branch j's block are exactly (a basis of) the
    elements that reduce to zero on all other branches within the window.
    """
    if r == 1:
        return set(ech.leads())
    perm = []
    for i in range(r):
        if i != j:
            perm.extend(range(offs[i], offs[i + 1]))
    zone = len(perm)
    perm.extend(range(offs[j], offs[j + 1]))
    permuted = _echelon_of(_vec_permute(v, perm) for _, _, v in ech.rows)
    return {lead - zone for lead in permuted.leads() if lead >= zone}


@dataclass(frozen=True)
class _Analysis:
    bounds: tuple[int, ...]
    offs: list[int]
    ech: _Echelon
    pure: tuple[frozenset[int], ...]
    candidates: tuple[int, ...] | None


def _candidate_conductor(
    pure: frozenset[int], mult: int, nj: int
) -> int | None:
    """Last-gap-plus-one, certified by a full run of length mult with room.

    Pure orders are closed under adding the branch multiplicity, so a run
    of `mult` consecutive pure orders right after the last gap proves every
    later order is pure too — provided the run and one extra step fit in
    the window.
    """
    gaps = [x for x in range(nj) if x not in pure]
    c = (gaps[-1] + 1) if gaps else 0
    if c + mult > nj or c + 2 > nj:
        return None
    if any(c + t not in pure for t in range(mult)):
        return None
    return c


def _analyze(
    coords, r: int, mults: tuple[int, ...], bounds: tuple[int, ...]
) -> _Analysis:
    ech, offs = _monomial_span(coords, r, bounds)
    pure = tuple(
        frozenset(_pure_orders(ech, offs, r, j)) for j in range(r)
    )
    cand: list[int] = []
    for j in range(r):
        c = _candidate_conductor(pure[j], mults[j], bounds[j])
        if c is None:
            return _Analysis(bounds, offs, ech, pure, None)
        cand.append(c)
    return _Analysis(bounds, offs, ech, pure, tuple(cand))


# ---------------------------------------------------------------------------
# codimension grids from the span
# ---------------------------------------------------------------------------


def _h_grid_r1(an: _Analysis, box: tuple[int, ...]) -> dict[tuple[int, ...], int]:
    leads = an.ech.leads()  # sorted ascending
    h: dict[tuple[int, ...], int] = {}
    for l in range(box[0] + 1):
        # rows with order >= l span the subspace of elements of order >= l
        h[(l,)] = bisect_left(leads, l)
    return h


def _h_grid_r2(an: _Analysis, box: tuple[int, ...]) -> dict[tuple[int, ...], int]:
    """Exact h on the box for two branches via one downward sweep.

    The natural-order echelon already has branch 1's block first, so a row's
    leading index is its branch-1 order (or +infinity when the block is
    zero).  Sweeping the branch-1 threshold downward only ever activates
    more rows; each newly active row contributes its branch-2 block to an
    incremental echelon whose pivot positions tell, for every branch-2
    threshold, the codimension within the active span.
    """
    n1 = an.bounds[0]
    off2, top2 = an.offs[1], an.offs[2]
    dim = len(an.ech)
    rows = sorted(
        an.ech.rows,
        key=lambda t: (t[0] if t[0] < n1 else n1 + box[0] + 1),
        reverse=True,
    )
    h: dict[tuple[int, ...], int] = {}
    proj = _Echelon()
    pivot_count = [0] * (an.bounds[1] + 1)
    active = 0
    idx = 0
    for l1 in range(box[0], -1, -1):
        while idx < len(rows) and (
            rows[idx][0] >= n1 or rows[idx][0] >= l1
        ):
            block = rows[idx][2][off2:top2]
            if _np is not None and isinstance(block, _np.ndarray):
                block = block.copy()
            else:
                block = list(block)
            triple = proj.add(block)
            if triple is not None:
                pivot_count[triple[0]] += 1
            active += 1
            idx += 1
        prefix = 0
        for l2 in range(box[1] + 1):
            # F = active - pivots below l2; h = dim - F
            h[(l1, l2)] = dim - (active - prefix)
            if l2 <= an.bounds[1] - 1:
                prefix += pivot_count[l2]
    return h


def _h_grid_general(an: _Analysis, box: tuple[int, ...]) -> dict[tuple[int, ...], int]:
    """Exact h for three or more branches (small inputs only).

    Recursive sweep: put the current branch's block first, order rows by
    that branch's order, and for each threshold recurse on the suffix of
    still-active rows over the remaining branches.
    """
    dim = len(an.ech)
    r = len(an.bounds)

    def rec(vectors, layout: list[tuple[int, int, int]], axis: int):
        # layout: (branch, offset, width) segments of the current vectors
        br, off, width = next(s for s in layout if s[0] == axis)
        if axis == r - 1:
            projections = []
            for v in vectors:
                block = v[off : off + width]
                if _np is not None and isinstance(block, _np.ndarray):
                    block = block.copy()
                else:
                    block = list(block)
                projections.append(block)
            ech = _echelon_of(projections)
            leads = ech.leads()
            zero_rows = len(vectors) - len(ech.rows)
            out = {}
            for l in range(box[axis] + 1):
                # rank of the projection onto columns below l
                rank_lt = bisect_left(leads, l)
                out[(l,)] = (len(ech.rows) - rank_lt) + zero_rows
            return out
        # move this axis's block to the front
        perm = list(range(off, off + width))
        new_layout = [(br, 0, width)]
        pos = width
        for b2, o2, w2 in layout:
            if b2 == br:
                continue
            perm.extend(range(o2, o2 + w2))
            new_layout.append((b2, pos, w2))
            pos += w2
        ech = _echelon_of(_vec_permute(v, perm) for v in vectors)
        items = sorted(
            ((lead if lead < width else width + box[axis] + 1, v) for lead, _, v in ech.rows),
            key=lambda t: t[0],
            reverse=True,
        )
        out: dict[tuple[int, ...], int] = {}
        active: list = []
        idx = 0
        memo: dict[int, dict] = {}
        for l in range(box[axis], -1, -1):
            while idx < len(items) and items[idx][0] >= l:
                active.append(items[idx][1])
                idx += 1
            key = len(active)
            if key not in memo:
                memo[key] = rec(list(active), new_layout, axis + 1)
            for rest, f in memo[key].items():
                out[(l,) + rest] = f
        return out

    layout = [(j, an.offs[j], an.bounds[j]) for j in range(r)]
    fvals = rec([v for _, _, v in an.ech.rows], layout, 0)
    return {l: dim - f for l, f in fvals.items()}


def _h_box(an: _Analysis, box: tuple[int, ...]) -> dict[tuple[int, ...], int]:
    r = len(an.bounds)
    if any(b + 1 > n for b, n in zip(box, an.bounds)):
        raise ValidationError("truncation not stabilized")
    if r == 1:
        return _h_grid_r1(an, box)
    if r == 2:
        return _h_grid_r2(an, box)
    return _h_grid_general(an, box)


# ---------------------------------------------------------------------------
# the weight grid
# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=True)
class WeightGrid:
    """Hilbert values and weights on the rectangle spanned by the conductor.

    ``h`` maps each lattice point of the stored box (componentwise from 0 to
    ``box``, inclusive) to the codimension of functions vanishing to at
    least that multi-order; ``w0`` is the derived weight 2*h(l) - |l|.  The
    box is either the conductor rectangle itself or that rectangle plus a
    one-step collar; grids fresh from a parametrization carry the collar.
    """

    r: int
    conductor: tuple[int, ...]
    box: tuple[int, ...]
    h: dict[tuple[int, ...], int]
    w0: dict[tuple[int, ...], int] = field(
        init=False, default=None, compare=False, repr=False
    )

    def __post_init__(self) -> None:
        if self.r < 1 or len(self.conductor) != self.r or len(self.box) != self.r:
            raise InputError("grid arity mismatch")
        if any(c < 0 for c in self.conductor):
            raise InputError("conductor entries must be nonnegative")
        for b, c in zip(self.box, self.conductor):
            if b not in (c, c + 1):
                raise InputError(
                    "box must be the conductor rectangle or its one-step collar"
                )
        pts = list(itertools.product(*(range(b + 1) for b in self.box)))
        for l in pts:
            if l not in self.h:
                raise InputError("grid is missing the value at %r" % (l,))
        origin = (0,) * self.r
        if self.h[origin] != 0:
            raise ValidationError("grid invariant violated: h(0) must be 0")
        for l in pts:
            for j in range(self.r):
                up = l[:j] + (l[j] + 1,) + l[j + 1 :]
                if up[j] > self.box[j]:
                    continue
                step = self.h[up] - self.h[l]
                if step not in (0, 1):
                    raise ValidationError(
                        "grid invariant violated: step %d along axis %d at %r"
                        % (step, j, l)
                    )
                if l[j] >= self.conductor[j] and step != 1:
                    raise ValidationError(
                        "grid invariant violated: flat step beyond the conductor"
                        " along axis %d at %r" % (j, l)
                    )
        w0 = {l: 2 * self.h[l] - sum(l) for l in pts}
        object.__setattr__(self, "w0", w0)

    @property
    def is_extended(self) -> bool:
        return all(b == c + 1 for b, c in zip(self.box, self.conductor))

    @property
    def min_w0(self) -> int:
        return min(self.w0.values())

    @property
    def delta(self) -> int:
        return sum(self.conductor) - self.h[self.conductor]

    def to_weight_sequence(self) -> WeightSequence:
        """The one-branch weight sequence, rebuilt through the semigroup.

        Membership below the conductor is read off the unit steps of h; the
        resulting semigroup is then run through the ordinary one-variable
        weight walk, and the walk must reproduce this grid's weights
        exactly.
        """
        if self.r != 1:
            raise InputError("weight sequence requires a single branch")
        grid = weight_grid_extend(self)
        c = grid.conductor[0]
        members = [l for l in range(c) if grid.h[(l + 1,)] == grid.h[(l,)] + 1]
        S = _semigroup_from_members(members, c)
        W = weight_sequence(S)
        if any(W.values[l] != grid.w0[(l,)] for l in range(c + 1)):
            raise ValidationError(
                "weight routes disagree: grid weights vs semigroup walk"
            )
        return W


def delta_from_grid(W: WeightGrid) -> int:
    """Gap count of the germ: total conductor minus h at the conductor."""
    return W.delta


def weight_grid_extend(W: WeightGrid) -> WeightGrid:
    """Extend a grid to the one-step collar around the conductor rectangle.

    Beyond the conductor h grows by exactly 1 per step, so the collar
    values are determined; extending an already extended grid returns it
    unchanged.
    """
    if W.is_extended:
        return W
    c = W.conductor
    newh: dict[tuple[int, ...], int] = {}
    for l in itertools.product(*(range(cj + 2) for cj in c)):
        clamped = tuple(min(x, cj) for x, cj in zip(l, c))
        excess = sum(x - y for x, y in zip(l, clamped))
        newh[l] = W.h[clamped] + excess
    return WeightGrid(W.r, c, tuple(cj + 1 for cj in c), newh)


# ---------------------------------------------------------------------------
# main entry point
# ---------------------------------------------------------------------------


def _double(bounds: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(2 * n for n in bounds)


def _grid_from_analysis(
    an: _Analysis, conductor: tuple[int, ...], r: int
) -> WeightGrid:
    box = tuple(c + 1 for c in conductor)
    h = _h_box(an, box)
    return WeightGrid(r, conductor, box, h)


def _normalize_bound(degree_bound, r: int) -> tuple[int, ...]:
    if isinstance(degree_bound, int) and not isinstance(degree_bound, bool):
        if degree_bound < 4:
            raise InputError("degree bound must be at least 4")
        return (degree_bound,) * r
    try:
        bs = tuple(int(b) for b in degree_bound)  # type: ignore[arg-type]
    except TypeError:
        raise InputError("degree bound must be an integer, a tuple, or 'auto'")
    if len(bs) != r:
        raise InputError("degree bound needs one entry per branch")
    if any(b < 4 for b in bs):
        raise InputError("degree bound must be at least 4")
    return bs


def hilbert_from_parametrization(
    P: BranchParametrization,
    degree_bound: object = "auto",
    conductor: tuple[int, ...] | None = None,
) -> WeightGrid:
    """Exact Hilbert grid of a parametrized germ, with certified conductor.

    With ``degree_bound="auto"`` the truncation window starts at four times
    the total coordinate order of each branch and doubles until two
    consecutive windows agree on both the detected conductor and every h
    value on the box; a window cap turns persistent disagreement into
    ``ValidationError("truncation not stabilized")``.  An explicit bound
    (int, or one int per branch) is used as-is with no doubling.  Passing
    ``conductor`` skips detection but every certificate that does not need
    a second window is still checked.
    """
    r = P.r
    mults = tuple(P.branch_multiplicity(j) for j in range(r))
    coords = _integer_coordinates(P)
    base = tuple(
        max(8, 4 * sum(s[0][1] for s in P.branches[j] if s), 2 * mults[j] + 4)
        for j in range(r)
    )

    if conductor is not None:
        cand = tuple(int(c) for c in conductor)
        if len(cand) != r or any(c < 0 for c in cand):
            raise InputError("conductor needs one nonnegative entry per branch")
        if degree_bound == "auto":
            bounds = tuple(
                max(b, 2 * (c + 2)) for b, c in zip(base, cand)
            )
        else:
            bounds = _normalize_bound(degree_bound, r)
        an = _analyze(coords, r, mults, bounds)
        for j in range(r):
            c = cand[j]
            if c + mults[j] > bounds[j] or c + 2 > bounds[j]:
                raise ValidationError("truncation not stabilized")
            if any(c + t not in an.pure[j] for t in range(mults[j])):
                raise ValidationError(
                    "conductor not confirmed within the truncation window"
                    " on branch %d" % j
                )
            if c > 0 and (c - 1) in an.pure[j]:
                raise ValidationError(
                    "conductor not minimal on branch %d" % j
                )
        return _grid_from_analysis(an, cand, r)

    if degree_bound != "auto":
        bounds = _normalize_bound(degree_bound, r)
        an = _analyze(coords, r, mults, bounds)
        if an.candidates is None:
            raise ValidationError("truncation not stabilized")
        return _grid_from_analysis(an, an.candidates, r)

    bounds = base
    prev = _analyze(coords, r, mults, bounds)
    for _ in range(6):
        nxt_bounds = _double(bounds)
        nxt = _analyze(coords, r, mults, nxt_bounds)
        if prev.candidates is not None and prev.candidates == nxt.candidates:
            grid_prev = _grid_from_analysis(prev, prev.candidates, r)
            grid_next = _grid_from_analysis(nxt, nxt.candidates, r)
            if grid_prev.h == grid_next.h:
                return grid_next
        prev, bounds = nxt, nxt_bounds
    raise ValidationError("truncation not stabilized")


# ---------------------------------------------------------------------------
# the numerator series
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SeriesData:
    """Hilbert series data: the h table and the numerator coefficients.

    For one branch the numerator support is the value semigroup clipped to
    the conductor, with an implicit tail of ones past it; for several
    branches the numerator is an honest polynomial supported inside the
    conductor rectangle and the tail is zero.
    """

    r: int
    conductor: tuple[int, ...]
    hilbert: dict[tuple[int, ...], int]
    coefficients: dict[tuple[int, ...], int]
    tail: str


def series(W: WeightGrid) -> SeriesData:
    """Numerator of the multigraded Hilbert series, from differences of h."""
    grid = weight_grid_extend(W)
    c = grid.conductor
    r = grid.r
    if r == 1:
        coeffs = {
            (l,): 1
            for l in range(c[0] + 1)
            if grid.h[(l + 1,)] == grid.h[(l,)] + 1 or l == c[0]
        }
        return SeriesData(1, c, dict(grid.h), coeffs, "ones-past-conductor")
    coeffs: dict[tuple[int, ...], int] = {}
    axes = list(range(r))
    for l in itertools.product(*(range(cj + 1) for cj in c)):
        total = 0
        for size in range(r + 1):
            for subset in itertools.combinations(axes, size):
                pt = list(l)
                for j in subset:
                    pt[j] += 1
                sign = -1 if size % 2 == 0 else 1
                total += sign * grid.h[tuple(pt)]
        if total:
            if any(l[j] == c[j] for j in range(r)):
                raise ValidationError(
                    "nonzero tail: numerator does not vanish at %r" % (l,)
                )
            coeffs[l] = total
    return SeriesData(r, c, dict(grid.h), coeffs, "zero")

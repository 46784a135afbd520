"""Graded roots and their tower modules.

A graded root is a connected tree whose vertices carry integer levels chi:
at each level n the vertices are the connected components of the sublevel
set S_n, and edges record containment between consecutive levels.  Above
some level the picture is a single infinite chain; we store the tree up to
a truncation level and treat everything above as that chain.

Collapsing the root along upward containment produces a module built from
"towers": one infinite tower starting at the base level b = min chi, and a
finite tower (m, t) for every branch of the tree that is born at level m
(a leaf) and absorbed into an older branch at level t + 1.  At each merge
the branch whose leaf sits lowest survives; among equally low leaves the
tie is broken by id, which provably does not change the resulting multiset.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError, ValidationError
from .semigroup import NumericalSemigroup, enumerate_plane_branch_semigroups
from .weight1d import WeightSequence, sublevel_components


@dataclass(frozen=True)
class GradedRoot:
    """Vertices as (id, chi) pairs, edges as (lower_id, upper_id) pairs.

    Ids are assigned sorted by (chi, leftmost lattice point of the
    component), so two runs over the same data produce identical objects.
    """

    vertices: tuple[tuple[int, int], ...]
    edges: tuple[tuple[int, int], ...]
    truncation_level: int

    def chi(self) -> dict[int, int]:
        return dict(self.vertices)

    def children(self) -> dict[int, list[int]]:
        kids: dict[int, list[int]] = {v: [] for v, _ in self.vertices}
        for lo, hi in self.edges:
            kids[hi].append(lo)
        for v in kids:
            kids[v].sort()
        return kids

    def parent(self) -> dict[int, int]:
        par: dict[int, int] = {}
        for lo, hi in self.edges:
            if lo in par:
                raise ValidationError("vertex %d has two upward neighbors" % lo)
            par[lo] = hi
        return par

    def levels(self) -> dict[int, list[int]]:
        by: dict[int, list[int]] = {}
        for v, ch in self.vertices:
            by.setdefault(ch, []).append(v)
        for n in by:
            by[n].sort()
        return by

    def validate(self) -> None:
        """Structural sanity: raise InputError when this is not a graded root."""
        ids = [v for v, _ in self.vertices]
        if len(set(ids)) != len(ids):
            raise InputError("duplicate vertex id")
        chi = self.chi()
        for lo, hi in self.edges:
            if lo not in chi or hi not in chi:
                raise InputError("edge endpoint %s is not a vertex" % ((lo, hi),))
            if chi[hi] != chi[lo] + 1:
                raise InputError("edge (%d, %d) does not span consecutive levels" % (lo, hi))
        self.parent()  # at most one upward neighbor
        by = self.levels()
        lvls = sorted(by)
        if lvls != list(range(lvls[0], lvls[-1] + 1)):
            raise InputError("levels are not contiguous")
        if self.truncation_level != lvls[-1]:
            raise InputError("truncation_level disagrees with the top level")
        if len(by[lvls[-1]]) != 1:
            raise InputError("top level must hold a single vertex")
        # connectivity: every non-top vertex needs an upward neighbor
        par = self.parent()
        top = by[lvls[-1]][0]
        for v, ch in self.vertices:
            if v != top and v not in par:
                raise InputError("vertex %d has no upward neighbor" % v)


@dataclass(frozen=True)
class TowerModule:
    """Degree-level data of the module attached to a graded root.

    ``base`` is the starting level of the infinite tower; ``towers`` holds
    (start, end) level pairs of the finite towers, sorted.  Levels here are
    chi values; serialized files also carry the doubled "degree" 2 * chi.
    """

    base: int
    towers: tuple[tuple[int, int], ...]

    def rank(self, n: int) -> int:
        r = 1 if n >= self.base else 0
        return r + sum(1 for m, t in self.towers if m <= n <= t)

    def kernel_rank(self, n: int) -> int:
        k = 1 if n == self.base else 0
        return k + sum(1 for m, _t in self.towers if m == n)

    @property
    def top_level(self) -> int:
        return max([self.base] + [t for _m, t in self.towers])


def root_from_weight(W: WeightSequence) -> GradedRoot:
    """Graded root of a weight sequence.

    Levels run from min w0 up to T = max(1, max w0); above T the root is a
    single chain and is not materialized.
    """
    b = min(W.values)
    T = max(1, max(W.values))
    keyed = []  # (chi, leftmost) per component, plus interval for containment
    comps = {}
    for n in range(b, T + 1):
        cs = sublevel_components(W, n)
        comps[n] = cs
        for c in cs:
            keyed.append((n, c.start))
    keyed.sort()
    ids = {key: i for i, key in enumerate(keyed)}
    vertices = tuple((ids[key], key[0]) for key in keyed)
    edges = []
    for n in range(b, T):
        for c in comps[n]:
            for d in comps[n + 1]:
                if d.start <= c.start and c.end <= d.end:
                    edges.append((ids[(n, c.start)], ids[(n + 1, d.start)]))
                    break
            else:
                raise ValidationError("component without an upward neighbor")
    vertices = tuple(sorted(vertices))
    return GradedRoot(vertices, tuple(sorted(edges)), T)


def module_from_root(R: GradedRoot, tie_policy: str = "close-larger-id") -> TowerModule:
    """Collapse a graded root into its module tower data.

    Walking levels upward, each leaf opens a branch; when several branches
    meet at a vertex, the one with the lowest-origin leaf survives and every
    other branch closes into a finite tower (origin, merge level - 1).  Ties
    between equally deep origins are closed preferring the larger leaf id
    (``tie_policy="close-smaller-id"`` flips that; the resulting multiset is
    the same, which the tests exercise).
    """
    if tie_policy not in ("close-larger-id", "close-smaller-id"):
        raise InputError("unknown tie policy %r" % tie_policy)
    chi = R.chi()
    kids = R.children()
    by_level = R.levels()
    towers = []
    alive: dict[int, tuple[int, int]] = {}  # vertex -> (origin chi, origin leaf id)
    for n in sorted(by_level):
        for v in by_level[n]:
            branches = [alive.pop(k) for k in kids[v]]
            if not branches:
                alive[v] = (n, v)
                continue
            if tie_policy == "close-larger-id":
                survivor = min(branches)
            else:
                survivor = min(branches, key=lambda br: (br[0], -br[1]))
            for br in branches:
                if br is not survivor:
                    towers.append((br[0], n - 1))
            alive[v] = survivor
    if len(alive) != 1:
        raise ValidationError("root did not collapse to a single chain")
    (origin, _leaf) = alive.popitem()[1]
    base = min(chi.values())
    if origin != base:
        raise ValidationError("surviving branch does not start at the base level")
    return TowerModule(base, tuple(sorted(towers)))


def rank_profile(M: TowerModule, up_to: int | None = None) -> dict[int, tuple[int, int]]:
    """Per-level (rank, kernel rank) from base up to max(1, top tower level).

    Above the returned range the module is the bare infinite tower: rank 1,
    kernel rank 0.
    """
    hi = max(1, M.top_level) if up_to is None else up_to
    return {n: (M.rank(n), M.kernel_rank(n)) for n in range(M.base, hi + 1)}


def _canonical_encoding(R: GradedRoot):
    """Hashable encoding invariant under relabeling.

    The tree is read from the lowest level at which everything above is a
    single chain; the uniform chain higher up carries no information.
    """
    by = R.levels()
    lvls = sorted(by)
    t_star = lvls[0]
    for n in reversed(lvls):
        if len(by[n]) == 1:
            t_star = n
        else:
            break
    kids = R.children()
    chi = R.chi()

    def enc(v):
        return (chi[v], tuple(sorted(enc(k) for k in kids[v])))

    return enc(by[t_star][0])


def roots_isomorphic(R1: GradedRoot, R2: GradedRoot) -> bool:
    """Level-preserving tree isomorphism (truncation chains disregarded)."""
    return _canonical_encoding(R1) == _canonical_encoding(R2)


@dataclass(frozen=True)
class SweepReport:
    max_conductor: int
    tested: int
    module_classes: int
    shared_module_groups: int
    pairs_checked: int
    hits: tuple  # (gens_a, gens_b) pairs with equal module, non-iso roots


def conjecture_sweep(max_conductor: int) -> SweepReport:
    """Group plane-branch semigroups by module; check roots agree per group.

    A pair with equal modules but non-isomorphic roots is recorded as a hit
    (a finding to report, not an error).
    """
    from .weight1d import weight_sequence

    tested = 0
    groups: dict[tuple, list[tuple[tuple[int, ...], GradedRoot]]] = {}
    for S in enumerate_plane_branch_semigroups(max_conductor):
        W = weight_sequence(S)
        R = root_from_weight(W)
        M = module_from_root(R)
        groups.setdefault((M.base, M.towers), []).append((S.min_gens, R))
        tested += 1
    shared = 0
    pairs = 0
    hits = []
    for _key, members in groups.items():
        if len(members) < 2:
            continue
        shared += 1
        first_gens, first_root = members[0]
        for gens, root in members[1:]:
            pairs += 1
            if not roots_isomorphic(first_root, root):
                hits.append((first_gens, gens))
    return SweepReport(
        max_conductor=max_conductor,
        tested=tested,
        module_classes=len(groups),
        shared_module_groups=shared,
        pairs_checked=pairs,
        hits=tuple(hits),
    )

"""Reconstruction of a plane-branch value semigroup from its tower module.

The module alone determines the semigroup.  The pipeline is:

1. read the initial level e and the sorted "initial elements" E out of the
   per-level ranks (``initial_part``),
2. read the multiplicity out of the kernel ranks (``multiplicity_from_module``),
3. take the additively irreducible initial elements as generators; when
   their gcd is not 1 there is exactly one missing top generator, pinned by
   the delta invariant and the partial conductor of the known prefix,
4. rebuild the semigroup and verify it reproduces the input module exactly.

Every consistency failure raises ValidationError: these inputs are
syntactically fine modules that do not come from any plane branch.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InputError, ValidationError
from .graded import GradedRoot, TowerModule, module_from_root, root_from_weight
from .semigroup import (
    NumericalSemigroup,
    from_generators as _from_generators,
    is_plane_branch as _is_plane_branch,
)
from .weight1d import weight_sequence


@dataclass(frozen=True)
class InitialPart:
    """Initial level, initial elements, and the bookkeeping behind them.

    ``s_k_table`` maps each level n in [e, 0] to (s_n, k_n): the cumulative
    rank above level n (the smallest candidate element there) and the number
    of elements actually taken at that level.
    """

    e: int
    elements: tuple[int, ...]
    s_k_table: dict[int, tuple[int, int]]
    delta: int
    min_w0: int


def compute_e(M: TowerModule) -> int:
    """Smallest level above which the degree-raising action is injective.

    This is the base level unless some finite tower spans more than one
    level; those towers push e up to just above their top.
    """
    tops = [t + 1 for m, t in M.towers if m < t]
    return max([M.base] + tops)


def initial_part(M: TowerModule) -> InitialPart:
    """Extract e and the initial elements E from per-level ranks.

    Scanning levels from 0 down to e, the rank at each level fixes how many
    elements live there ((rank - 1) / 2, except possibly at the base) and
    the running offset fixes where they sit.
    """
    e = compute_e(M)
    if e > 0:
        raise ValidationError("inconsistent module: positive initial level")
    delta = sum(M.rank(n) for n in range(M.base, 1)) - 1
    s = 0
    elements: list[int] = []
    s_k_table: dict[int, tuple[int, int]] = {}
    for n in range(0, e - 1, -1):
        r = M.rank(n)
        if r <= 0:
            raise ValidationError("inconsistent module: vanishing rank at level %d" % n)
        k = r // 2
        if n == e == M.base:
            if r % 2 == 1:
                count = k + 1
                if s + 2 * k != delta:
                    raise ValidationError(
                        "inconsistent module: base level does not reach delta"
                    )
            else:
                count = k
        else:
            if r % 2 == 0:
                raise ValidationError("inconsistent module: rank parity off at level %d" % n)
            count = k
        elements.extend(s + 2 * j for j in range(count))
        s_k_table[n] = (s, count)
        s += r
    elements.sort()
    if not elements or elements[0] != 0:
        raise ValidationError("inconsistent module: 0 is not an initial element")
    if elements[-1] > delta:
        raise ValidationError("inconsistent module: initial element beyond delta")
    return InitialPart(e, tuple(elements), s_k_table, delta, M.base)


def initial_part_from_root(R: GradedRoot) -> InitialPart:
    """The initial part read directly off the tree.

    Instead of rank arithmetic this counts vertices per level, keeps half of
    them (rounding up only at an odd base level), sorts the kept levels from
    high to low, and maps the i-th kept level n_i to the element 2*i - n_i.
    The result is cross-checked against the rank route through the module;
    any disagreement is a ValidationError.
    """
    M = module_from_root(R)
    ip = initial_part(M)
    by = R.levels()
    base = min(by)
    kept_levels: list[int] = []
    for n in range(0, ip.e - 1, -1):
        cnt = len(by.get(n, []))
        keep = cnt // 2
        if n == ip.e == base and cnt % 2 == 1:
            keep += 1
        kept_levels.extend([n] * keep)
    kept_levels.sort(reverse=True)
    from_tree = tuple(sorted(2 * i - n for i, n in enumerate(kept_levels)))
    if from_tree != ip.elements:
        raise ValidationError(
            "initial elements from the tree disagree with the rank route"
        )
    return ip


def multiplicity_from_module(M: TowerModule) -> int:
    """Multiplicity of the branch, read from kernel ranks alone.

    The shallowest level below 0 carrying a kernel element sits at 2 - m.
    Base level 0 means the branch is smooth or double.
    """
    if M.base > 0:
        raise ValidationError("not a branch module")
    if M.base == 0:
        return 1 if M.rank(0) == 1 else 2
    shallowest = max(n for n in range(M.base, 0) if M.kernel_rank(n) > 0)
    return 2 - shallowest


def detect_lg1_equals_2(M: TowerModule) -> bool:
    """True exactly when the last proper gcd in the generator ladder is 2.

    Such branches have even base level and a bare rank-1 module at every odd
    level strictly between base and 0.
    """
    if M.base % 2 != 0:
        return False
    return all(M.rank(n) == 1 for n in range(M.base + 1, 0) if n % 2 != 0)


def _prefix_conductor(prefix: tuple[int, ...]) -> tuple[int, int]:
    """(gcd l, partial conductor) of a generator prefix with gcd l > 1.

    The partial conductor is l times the conductor of the semigroup the
    prefix generates after dividing out l.
    """
    l = math.gcd(*prefix)
    reduced = _from_generators([p // l for p in prefix])
    return l, l * reduced.conductor


def reconstruct_semigroup(M: TowerModule) -> NumericalSemigroup:
    """Rebuild the unique plane-branch semigroup whose module is M.

    Raises ValidationError when no plane branch produces M.
    """
    ip = initial_part(M)
    delta = ip.delta
    m = multiplicity_from_module(M)
    positive = [x for x in ip.elements if x > 0]
    if not positive:
        if m == 1:
            gens = [1]
        else:
            if (2 * delta) % (m - 1) != 0:
                raise ValidationError("non-integral top generator")
            gens = [m, 2 * delta // (m - 1) + 1]
    else:
        sums = {a + b for a in positive for b in positive}
        P = tuple(x for x in positive if x not in sums)
        g0 = math.gcd(*P)
        if g0 == 1:
            gens = list(P)
        else:
            try:
                l, c_prefix = _prefix_conductor(P)
            except InputError as exc:
                raise ValidationError("validation failed: %s" % exc) from exc
            if (2 * delta - c_prefix) % (l - 1) != 0:
                raise ValidationError("non-integral top generator")
            top = (2 * delta - c_prefix) // (l - 1) + 1
            gens = list(P) + [top]
    try:
        S = _from_generators(gens)
    except InputError as exc:
        raise ValidationError("validation failed: %s" % exc) from exc
    ok, _chain = _is_plane_branch(S)
    if not ok:
        raise ValidationError("validation failed: reconstruction is not a plane branch")
    if S.delta != delta:
        raise ValidationError("validation failed: delta mismatch")
    if S.multiplicity != m:
        raise ValidationError("validation failed: multiplicity mismatch")
    back = module_from_root(root_from_weight(weight_sequence(S)))
    if back != M:
        raise ValidationError("validation failed: module mismatch after round trip")
    return S

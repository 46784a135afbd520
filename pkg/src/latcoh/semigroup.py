"""Numerical semigroups, symmetry, and the plane-branch criterion.

A numerical semigroup is an additively closed, cofinite subset of the
non-negative integers containing 0.  The central structural data here are
the conductor c (smallest element with [c, oo) inside the set), the gap
count delta, and the minimal generating set.  A semigroup arises as the
value semigroup of an irreducible plane curve germ exactly when its minimal
generators b_0 < b_1 < ... < b_g satisfy, with l_i = gcd(b_0, ..., b_i) and
n_i = l_{i-1} / l_i:

    l_g = 1,   l_0 > l_1 > ... > l_g,   and   n_i * b_i < b_{i+1}
    for 1 <= i <= g - 1.

Along the way one gets partial conductors c_0 = 0 and

    c_i = c_{i-1} + (l_{i-1} - l_i) * (b_i - l_i) / l_i,

with c_g equal to the conductor of the full semigroup.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterator

from .errors import InputError


@dataclass(frozen=True)
class CofiniteSet:
    """A cofinite subset of the naturals containing 0.

    ``membership[x]`` answers x in S for 0 <= x <= conductor; everything past
    the conductor belongs to the set.  The conductor is normalized: either it
    is 0 (the set is all of N) or conductor - 1 is a gap.
    """

    membership: tuple[bool, ...]
    conductor: int

    def __contains__(self, x: int) -> bool:
        if x < 0:
            return False
        if x >= self.conductor:
            return True
        return self.membership[x]

    @property
    def delta(self) -> int:
        """Number of gaps (elements of N outside the set)."""
        return sum(1 for x in range(self.conductor) if not self.membership[x])

    def members_below_conductor(self) -> list[int]:
        return [x for x in range(self.conductor) if self.membership[x]]

    def gaps(self) -> list[int]:
        return [x for x in range(self.conductor) if not self.membership[x]]


@dataclass(frozen=True)
class NumericalSemigroup(CofiniteSet):
    min_gens: tuple[int, ...] = ()

    @property
    def multiplicity(self) -> int:
        """Smallest positive element."""
        return self.min_gens[0] if self.min_gens else 1


@dataclass(frozen=True)
class GcdChain:
    """The gcd ladder of a minimal generating set.

    l runs l_0 .. l_g, n runs n_1 .. n_g, partial_conductors runs c_0 .. c_g.
    """

    generators: tuple[int, ...]
    l: tuple[int, ...]
    n: tuple[int, ...]
    partial_conductors: tuple[int, ...]


def _normalized(membership: list[bool]) -> tuple[tuple[bool, ...], int]:
    """Trim to the minimal conductor.  membership must end in a member run."""
    c = len(membership) - 1
    last_gap = -1
    for x in range(len(membership)):
        if not membership[x]:
            last_gap = x
    c = last_gap + 1
    return tuple(membership[: c + 1]) if c > 0 else (True,), c


def _closure(gens: tuple[int, ...], bound: int) -> list[bool]:
    mem = [False] * (bound + 1)
    mem[0] = True
    for x in range(min(gens), bound + 1):
        for g in gens:
            if g <= x and mem[x - g]:
                mem[x] = True
                break
    return mem


def _minimal_generators(member, conductor: int, multiplicity: int) -> tuple[int, ...]:
    """Elements not expressible as a sum of two positive elements.

    Every minimal generator is below conductor + multiplicity: anything
    larger splits off one multiplicity step and stays in the set.
    """
    if conductor == 0:
        return (1,)
    out = []
    for s in range(multiplicity, conductor + multiplicity):
        if not member(s):
            continue
        if any(member(a) and member(s - a) for a in range(multiplicity, s - multiplicity + 1)):
            continue
        out.append(s)
    return tuple(out)


def from_generators(gens) -> NumericalSemigroup:
    """Numerical semigroup generated by ``gens``.

    Raises InputError("no generators") for an empty list and
    InputError("not cofinite") when the gcd of the generators exceeds 1.
    """
    gens = tuple(sorted(set(int(g) for g in gens)))
    if not gens:
        raise InputError("no generators")
    if any(g <= 0 for g in gens):
        raise InputError("generators must be positive integers")
    g0 = 0
    for g in gens:
        g0 = gcd(g0, g)
    if g0 != 1:
        raise InputError("not cofinite: generators have gcd %d" % g0)

    bound = 2 * max(gens) + 4
    while True:
        mem = _closure(gens, bound)
        last_gap = -1
        for x in range(bound + 1):
            if not mem[x]:
                last_gap = x
        # A run of members at least multiplicity long proves the tail is full.
        if bound - last_gap > min(gens):
            break
        bound *= 2
    c = last_gap + 1
    membership = tuple(mem[: c + 1]) if c > 0 else (True,)

    def member(x):
        return x >= c or (0 <= x <= c and membership[x])

    m = min(gens)
    return NumericalSemigroup(membership, c, _minimal_generators(member, c, m))


def from_members(members_below, conductor: int, verify_closed: bool = True):
    """Build a set from an explicit member list on [0, conductor).

    With verify_closed (the default) the result must be additively closed and
    a NumericalSemigroup is returned; otherwise a plain CofiniteSet.  The
    conductor is re-normalized to be minimal.
    """
    conductor = int(conductor)
    if conductor < 0:
        raise InputError("conductor must be non-negative")
    members = set(int(x) for x in members_below)
    if any(x < 0 for x in members):
        raise InputError("negative member")
    if conductor == 0:
        # the whole of N
        if verify_closed:
            return NumericalSemigroup((True,), 0, (1,))
        return CofiniteSet((True,), 0)
    if 0 not in members:
        raise InputError("0 must be a member")
    if any(x >= conductor for x in members):
        raise InputError("member at or past the conductor is redundant")
    membership = [x in members for x in range(conductor + 1)]
    if conductor > 0:
        membership[conductor] = True
    membership, c = _normalized(membership)

    if not verify_closed:
        return CofiniteSet(membership, c)

    def member(x):
        return x >= c or membership[x]

    elems = [x for x in range(c) if membership[x]]
    for a in elems:
        if a == 0:
            continue
        for b in elems:
            if b < a:
                continue
            if a + b < c and not membership[a + b]:
                raise InputError("not closed under addition: %d + %d" % (a, b))
    m = next((x for x in range(1, c + 1) if member(x)), 1)
    return NumericalSemigroup(membership, c, _minimal_generators(member, c, m))


def is_symmetric(S: CofiniteSet) -> bool:
    """True when x in S iff conductor - 1 - x not in S for every x."""
    c = S.conductor
    if c == 0:
        return True
    return all((x in S) != (c - 1 - x in S) for x in range(c))


def gcd_chain(gens) -> GcdChain:
    """gcd ladder, Zariski exponents n_i, and partial conductors of a chain."""
    gens = tuple(gens)
    l = [gens[0]]
    for b in gens[1:]:
        l.append(gcd(l[-1], b))
    n = tuple(l[i - 1] // l[i] for i in range(1, len(gens)))
    cs = [0]
    for i in range(1, len(gens)):
        cs.append(cs[-1] + (l[i - 1] - l[i]) * (gens[i] - l[i]) // l[i])
    return GcdChain(gens, tuple(l), n, tuple(cs))


def is_plane_branch(S: NumericalSemigroup):
    """Decide whether S is the value semigroup of an irreducible plane germ.

    Returns (flag, chain): chain is the GcdChain of the minimal generators
    when the criterion holds, None otherwise.  N itself (the smooth branch)
    passes with the trivial chain.
    """
    bets = S.min_gens
    if bets == (1,):
        return True, GcdChain((1,), (1,), (), (0,))
    chain = gcd_chain(bets)
    g = len(bets) - 1
    if chain.l[-1] != 1:
        return False, None
    # each gcd step must strictly descend (every n_i is at least 2)
    if any(chain.l[i] <= chain.l[i + 1] for i in range(g)):
        return False, None
    for i in range(1, g):
        if not chain.n[i - 1] * bets[i] < bets[i + 1]:
            return False, None
    # the ladder's conductor formula must reproduce the true conductor
    if chain.partial_conductors[-1] != S.conductor:
        return False, None
    return True, chain


def enumerate_plane_branch_semigroups(max_conductor: int) -> Iterator[NumericalSemigroup]:
    """All plane-branch value semigroups with conductor <= max_conductor.

    Emitted sorted by (conductor, minimal generators).  The smooth branch
    (all of N, conductor 0) is always first.
    """
    max_conductor = int(max_conductor)
    if max_conductor < 0:
        raise InputError("max_conductor must be non-negative")

    found = [(0, (1,))]

    def extend(bets, l, c_part):
        lo = bets[-1] + 1
        if len(bets) >= 2:
            # Eq-(1) lower bound: the next generator must exceed n_i * b_i
            chain_l = [bets[0]]
            for b in bets[1:]:
                chain_l.append(gcd(chain_l[-1], b))
            ncur = chain_l[-2] // chain_l[-1]
            lo = max(lo, ncur * bets[-1] + 1)
        # conductor grows by at least b - l/2, so b <= max_c - c_part + l
        for b in range(lo, max_conductor - c_part + l + 1):
            l2 = gcd(l, b)
            if l2 == l:
                continue
            inc = (l - l2) * (b - l2) // l2
            if c_part + inc > max_conductor:
                continue
            if l2 == 1:
                found.append((c_part + inc, tuple(bets) + (b,)))
            else:
                extend(bets + [b], l2, c_part + inc)

    for b0 in range(2, max_conductor + 1):
        extend([b0], b0, 0)

    for _c, gens in sorted(set(found)):
        yield from_generators(gens)

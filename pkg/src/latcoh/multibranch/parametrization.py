"""Exact parametrizations of curve germs with finitely many branches.

A curve germ in d-space with r branches is given by r tuples of truncated
power series with rational coefficients, one series per ambient coordinate.
All arithmetic downstream is exact, so coefficients are stored as Fractions
and exponents as plain ints.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

from ..errors import InputError

# One monomial of a coordinate series: (coefficient, exponent).
Term = tuple[Fraction, int]
# One coordinate series, exponents strictly increasing.
Series = tuple[Term, ...]


@dataclass(frozen=True)
class BranchParametrization:
    """An r-branch curve germ, one tuple of coordinate series per branch.

    Instances are produced by :func:`make_parametrization`, which validates
    and normalizes raw input; the constructor itself trusts its arguments.
    """

    branches: tuple[tuple[Series, ...], ...]

    @property
    def r(self) -> int:
        """Number of branches."""
        return len(self.branches)

    @property
    def ambient_dim(self) -> int:
        """Number of ambient coordinates."""
        return len(self.branches[0])

    def coordinate_order(self, branch: int, coord: int) -> int | None:
        """Vanishing order of one coordinate on one branch; None if zero."""
        s = self.branches[branch][coord]
        return s[0][1] if s else None

    def branch_multiplicity(self, branch: int) -> int:
        """Smallest positive coordinate order on the branch."""
        orders = [s[0][1] for s in self.branches[branch] if s]
        if not orders:
            raise InputError("zero branch: branch %d has no nonzero coordinate" % branch)
        return min(orders)


def _as_fraction(x: object) -> Fraction:
    if isinstance(x, bool) or not isinstance(x, (Rational, int)):
        raise InputError("coefficients must be rational numbers, got %r" % (x,))
    return Fraction(x)


def _normalize_series(raw: object, where: str) -> Series:
    """Validate one coordinate series: rational coeffs, nonzero, increasing exps."""
    try:
        items = list(raw)  # type: ignore[arg-type]
    except TypeError:
        raise InputError("%s: series must be a sequence of (coeff, exp) terms" % where)
    terms: list[Term] = []
    for item in items:
        try:
            coeff_raw, exp = item
        except (TypeError, ValueError):
            raise InputError("%s: each term must be a (coeff, exp) pair" % where)
        coeff = _as_fraction(coeff_raw)
        if not isinstance(exp, int) or isinstance(exp, bool) or exp < 0:
            raise InputError("%s: exponents must be nonnegative integers" % where)
        if coeff == 0:
            raise InputError("%s: zero coefficient at exponent %d" % (where, exp))
        if terms and exp <= terms[-1][1]:
            raise InputError("%s: exponents must be strictly increasing" % where)
        terms.append((coeff, exp))
    return tuple(terms)


def make_parametrization(branches: object) -> BranchParametrization:
    """Build a validated parametrization from nested (coeff, exp) data.

    ``branches`` is a sequence of branches; each branch is a sequence of
    coordinate series; each series is a sequence of (coefficient, exponent)
    pairs.  Constant terms are allowed in the input but every branch must
    share the same constant in each coordinate (the branches must pass
    through one common point); the common point is translated to the origin.
    """
    try:
        branch_list = list(branches)  # type: ignore[arg-type]
    except TypeError:
        raise InputError("parametrization must be a sequence of branches")
    if not branch_list:
        raise InputError("parametrization needs at least one branch")
    normalized: list[list[Series]] = []
    for j, br in enumerate(branch_list):
        try:
            coords = list(br)
        except TypeError:
            raise InputError("branch %d must be a sequence of coordinate series" % j)
        if not coords:
            raise InputError("branch %d has no coordinates" % j)
        normalized.append(
            [
                _normalize_series(c, "branch %d coordinate %d" % (j, k))
                for k, c in enumerate(coords)
            ]
        )
    dim = len(normalized[0])
    for j, coords in enumerate(normalized):
        if len(coords) != dim:
            raise InputError(
                "branch %d has %d coordinates, branch 0 has %d"
                % (j, len(coords), dim)
            )
    # The branches must agree at parameter value 0; translate that point away.
    for k in range(dim):
        constants = []
        for coords in normalized:
            s = coords[k]
            constants.append(s[0][0] if s and s[0][1] == 0 else Fraction(0))
        if any(c != constants[0] for c in constants):
            raise InputError(
                "branches do not pass through a common point (coordinate %d)" % k
            )
    shifted: list[tuple[Series, ...]] = []
    for j, coords in enumerate(normalized):
        branch = tuple(
            tuple(t for t in s if t[1] > 0)
            for s in coords
        )
        if all(not s for s in branch):
            raise InputError(
                "zero branch: branch %d has no coordinate of positive order" % j
            )
        shifted.append(branch)
    return BranchParametrization(tuple(shifted))

"""File formats: JSON readers/writers, weight-table TSV, root DOT and ASCII.

All writers return strings and are deterministic (sorted keys, fixed field
order), so identical inputs give byte-identical files.  All readers raise
InputError with a field diagnostic on malformed input; every JSON writer's
output parses back through its own reader.

Graded objects are stored with both conventions: the internal level n (key
"chi" / "*_weight") and the doubled degree 2n (key "degree" / plain "base",
"towers").  Readers prefer the level fields and fall back to halving the
doubled ones.
"""
from __future__ import annotations

import json
from fractions import Fraction

from .errors import InputError
from .graded import GradedRoot, TowerModule
from .multibranch import BranchParametrization, WeightGrid, make_parametrization
from .semigroup import CofiniteSet, NumericalSemigroup, from_generators, from_members
from .weight1d import WeightSequence


# ---------------------------------------------------------------------------
# JSON plumbing

def to_json(obj) -> str:
    """Canonical JSON text: sorted keys, two-space indent, trailing newline."""
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def read_json(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError("%s: %s" % (path, exc.strerror or exc)) from exc
    except json.JSONDecodeError as exc:
        raise InputError(
            "%s: line %d column %d: %s" % (path, exc.lineno, exc.colno, exc.msg)
        ) from exc


def _require(d, key, where):
    if not isinstance(d, dict):
        raise InputError("%s: expected an object, got %s" % (where, type(d).__name__))
    if key not in d:
        raise InputError("%s: missing field %r" % (where, key))
    return d[key]


def _as_int(x, where):
    if isinstance(x, bool) or not isinstance(x, int):
        raise InputError("%s: expected an integer, got %r" % (where, x))
    return x


def _as_int_list(x, where):
    if not isinstance(x, list):
        raise InputError("%s: expected a list" % where)
    return [_as_int(v, "%s[%d]" % (where, i)) for i, v in enumerate(x)]


def _halve(x, where):
    x = _as_int(x, where)
    if x % 2 != 0:
        raise InputError("%s: doubled degree %d is odd" % (where, x))
    return x // 2


# ---------------------------------------------------------------------------
# Semigroups / cofinite sets

def semigroup_to_dict(S: CofiniteSet) -> dict:
    d = {
        "conductor": S.conductor,
        "delta": S.delta,
        "members_below": S.members_below_conductor(),
    }
    if isinstance(S, NumericalSemigroup):
        d["generators"] = list(S.min_gens)
        d["multiplicity"] = S.multiplicity
    else:
        d["verify_closed"] = False
    return d


def semigroup_from_dict(d, where: str = "semigroup") -> CofiniteSet:
    if not isinstance(d, dict):
        raise InputError("%s: expected an object" % where)
    if "generators" in d:
        gens = _as_int_list(d["generators"], "%s.generators" % where)
        if not gens:
            raise InputError("%s.generators: empty" % where)
        return from_generators(gens)
    if "members_below" in d:
        members = _as_int_list(d["members_below"], "%s.members_below" % where)
        conductor = _as_int(_require(d, "conductor", where), "%s.conductor" % where)
        verify = d.get("verify_closed", True)
        if not isinstance(verify, bool):
            raise InputError("%s.verify_closed: expected a boolean" % where)
        return from_members(members, conductor, verify_closed=verify)
    raise InputError("%s: need either 'generators' or 'members_below'" % where)


def read_semigroup_file(path: str) -> CofiniteSet:
    return semigroup_from_dict(read_json(path), where=path)


# ---------------------------------------------------------------------------
# Graded roots and tower modules

def root_to_dict(R: GradedRoot) -> dict:
    return {
        "truncation_level": R.truncation_level,
        "vertices": [
            {"id": v, "chi": n, "degree": 2 * n} for v, n in R.vertices
        ],
        "edges": [[a, b] for a, b in R.edges],
    }


def root_from_dict(d, where: str = "root") -> GradedRoot:
    raw = _require(d, "vertices", where)
    if not isinstance(raw, list) or not raw:
        raise InputError("%s.vertices: expected a non-empty list" % where)
    verts = []
    for i, v in enumerate(raw):
        here = "%s.vertices[%d]" % (where, i)
        vid = _as_int(_require(v, "id", here), "%s.id" % here)
        if "chi" in v:
            chi = _as_int(v["chi"], "%s.chi" % here)
        else:
            chi = _halve(_require(v, "degree", here), "%s.degree" % here)
        verts.append((vid, chi))
    raw_edges = _require(d, "edges", where)
    if not isinstance(raw_edges, list):
        raise InputError("%s.edges: expected a list" % where)
    edges = []
    for i, e in enumerate(raw_edges):
        pair = _as_int_list(e, "%s.edges[%d]" % (where, i))
        if len(pair) != 2:
            raise InputError("%s.edges[%d]: expected a pair" % (where, i))
        edges.append((pair[0], pair[1]))
    trunc = _as_int(_require(d, "truncation_level", where), "%s.truncation_level" % where)
    R = GradedRoot(tuple(sorted(verts)), tuple(sorted(edges)), trunc)
    R.validate()
    return R


def read_root_file(path: str) -> GradedRoot:
    return root_from_dict(read_json(path), where=path)


def module_to_dict(M: TowerModule) -> dict:
    return {
        "base": 2 * M.base,
        "base_weight": M.base,
        "towers": [[2 * m, 2 * t] for m, t in M.towers],
        "towers_weight": [[m, t] for m, t in M.towers],
    }


def module_from_dict(d, where: str = "module") -> TowerModule:
    if not isinstance(d, dict):
        raise InputError("%s: expected an object" % where)
    if "base_weight" in d:
        base = _as_int(d["base_weight"], "%s.base_weight" % where)
        raw = _require(d, "towers_weight", where)
        halved = False
    else:
        base = _halve(_require(d, "base", where), "%s.base" % where)
        raw = _require(d, "towers", where)
        halved = True
    if not isinstance(raw, list):
        raise InputError("%s.towers: expected a list" % where)
    towers = []
    for i, e in enumerate(raw):
        here = "%s.towers[%d]" % (where, i)
        pair = _as_int_list(e, here)
        if len(pair) != 2:
            raise InputError("%s: expected a [start, end] pair" % here)
        m, t = (
            (_halve(pair[0], here), _halve(pair[1], here)) if halved else (pair[0], pair[1])
        )
        if not base <= m <= t:
            raise InputError("%s: tower [%d, %d] is not above the base %d" % (here, m, t, base))
        towers.append((m, t))
    return TowerModule(base, tuple(sorted(towers)))


def read_module_file(path: str) -> TowerModule:
    return module_from_dict(read_json(path), where=path)


# ---------------------------------------------------------------------------
# Parametrized curves

def _fraction_from_json(c, where):
    if isinstance(c, bool):
        raise InputError("%s: expected a number" % where)
    if isinstance(c, int):
        return Fraction(c)
    if isinstance(c, list) and len(c) == 2:
        num = _as_int(c[0], "%s[0]" % where)
        den = _as_int(c[1], "%s[1]" % where)
        if den == 0:
            raise InputError("%s: zero denominator" % where)
        return Fraction(num, den)
    raise InputError("%s: expected an integer or a [numerator, denominator] pair" % where)


def curve_to_dict(P: BranchParametrization) -> dict:
    branches = []
    for branch in P.branches:
        coords = []
        for series in branch:
            coords.append(
                [
                    {"c": [t.numerator, t.denominator], "e": e}
                    for t, e in series
                ]
            )
        branches.append({"coords": coords})
    return {"branches": branches}


def curve_from_dict(d, where: str = "curve") -> BranchParametrization:
    raw = _require(d, "branches", where)
    if not isinstance(raw, list) or not raw:
        raise InputError("%s.branches: expected a non-empty list" % where)
    branches = []
    for j, bd in enumerate(raw):
        here = "%s.branches[%d]" % (where, j)
        coords_raw = _require(bd, "coords", here)
        if not isinstance(coords_raw, list):
            raise InputError("%s.coords: expected a list" % here)
        coords = []
        for k, series_raw in enumerate(coords_raw):
            sw = "%s.coords[%d]" % (here, k)
            if not isinstance(series_raw, list):
                raise InputError("%s: expected a list of terms" % sw)
            terms = []
            for i, term in enumerate(series_raw):
                tw = "%s[%d]" % (sw, i)
                coeff = _fraction_from_json(_require(term, "c", tw), "%s.c" % tw)
                exp = _as_int(_require(term, "e", tw), "%s.e" % tw)
                terms.append((coeff, exp))
            coords.append(terms)
        branches.append(coords)
    return make_parametrization(branches)


def read_curve_file(path: str) -> BranchParametrization:
    return curve_from_dict(read_json(path), where=path)


# ---------------------------------------------------------------------------
# Weight tables

def weight_sequence_tsv(W: WeightSequence) -> str:
    lines = ["position\tmember\tw0"]
    for l in range(W.conductor + 1):
        lines.append("%d\t%d\t%d" % (l, 1 if l in W.source else 0, W[l]))
    return "\n".join(lines) + "\n"


def _grid_tsv_matrix(W: WeightGrid) -> str:
    b1, b2 = W.box
    header = "l2\\l1\t" + "\t".join(str(l1) for l1 in range(b1 + 1))
    lines = [header]
    for l2 in range(b2, -1, -1):
        cells = [str(l2)]
        cells += [str(W.w0[(l1, l2)]) for l1 in range(b1 + 1)]
        lines.append("\t".join(cells))
    return "\n".join(lines) + "\n"


def _grid_tsv_long(W: WeightGrid) -> str:
    lines = ["\t".join("l%d" % (j + 1) for j in range(W.r)) + "\tw0"]
    for point in sorted(W.w0):
        lines.append("\t".join(str(x) for x in point) + "\t%d" % W.w0[point])
    return "\n".join(lines) + "\n"


def weights_tsv(W) -> str:
    """Weight table of a WeightSequence or a WeightGrid.

    One branch: position / member / w0 rows.  Two branches: a matrix in the
    usual plane orientation (first index left to right, second index bottom
    to top).  More branches: long format, one lattice point per row.
    """
    if isinstance(W, WeightSequence):
        return weight_sequence_tsv(W)
    if isinstance(W, WeightGrid):
        if W.r == 1:
            return weight_sequence_tsv(W.to_weight_sequence())
        if W.r == 2:
            return _grid_tsv_matrix(W)
        return _grid_tsv_long(W)
    raise InputError("cannot tabulate %s" % type(W).__name__)


# ---------------------------------------------------------------------------
# Root renderings

def root_dot(R: GradedRoot) -> str:
    chi = R.chi()
    lines = ["graph gradedroot {", "  rankdir=BT;", '  node [shape=circle, fontsize=10];']
    for v, n in R.vertices:
        lines.append('  n%d [label="%d"];' % (v, n))
    for n in sorted(R.levels()):
        ids = "; ".join("n%d" % v for v in R.levels()[n])
        lines.append("  { rank=same; %s; }" % ids)
    for a, b in R.edges:
        lines.append("  n%d -- n%d;" % (a, b))
    lines.append("}")
    return "\n".join(lines) + "\n"


def root_ascii(R: GradedRoot) -> str:
    """One text row per level, top level first, then the edge list."""
    by = R.levels()
    width = max(len(str(n)) for n in by)
    lines = []
    for n in sorted(by, reverse=True):
        ids = " ".join(str(v) for v in by[n])
        lines.append("chi %s: %s" % (str(n).rjust(width), ids))
    lines.append("edges: " + " ".join("%d-%d" % (a, b) for a, b in R.edges))
    return "\n".join(lines) + "\n"

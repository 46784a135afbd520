"""Command-line interface.

Subcommands:

  semigroup        invariants, weights, root, and module of one semigroup
  reconstruct      semigroup back out of a tower-module file
  curve            full multibranch pipeline from a parametrization file
  roundtrip        semigroup -> module -> semigroup sweep up to a conductor
  root-iso         compare two root files up to isomorphism
  conjecture-sweep look for module-equal, non-isomorphic-root pairs

Exit codes: 0 success (and "isomorphic" verdicts), 1 property violation,
2 malformed input, 3 negative verdict from a comparison.

Reports go to stdout as canonical JSON; the same bytes land in ``--out``
when given.  Side artifacts (weight tables, roots, modules) are chosen by
flag, with root renderings picked by file extension (.dot, .json, or ASCII
for anything else).  ``LATCOH_THREADS`` caps worker parallelism; output is
assembled in input order either way, so runs are byte-identical.
"""
from __future__ import annotations

import argparse
import os
import sys
from dataclasses import dataclass

from . import formats
from .errors import InputError, ValidationError
from .graded import (
    GradedRoot,
    conjecture_sweep,
    module_from_root,
    root_from_weight,
    roots_isomorphic,
)
from .multibranch import (
    euler_delta_check,
    hilbert_from_parametrization,
    lattice_cohomology,
    series,
)
from .reconstruct import (
    compute_e,
    detect_lg1_equals_2,
    initial_part,
    reconstruct_semigroup,
)
from .semigroup import (
    CofiniteSet,
    NumericalSemigroup,
    enumerate_plane_branch_semigroups,
    from_generators,
    is_plane_branch,
)
from .weight1d import min_w0, weight_sequence


@dataclass(frozen=True)
class RunConfig:
    """Everything one invocation needs, parsed and validated."""

    command: str
    inputs: tuple[str, ...] = ()
    gens: tuple[int, ...] | None = None
    out: str | None = None
    root_out: str | None = None
    weights_out: str | None = None
    module_out: str | None = None
    cohomology_out: str | None = None
    degree_bound: int | None = None
    conductor: tuple[int, ...] | None = None
    max_conductor: int = 0
    threads: int = 1


def _int_tuple(text: str, what: str) -> tuple[int, ...]:
    try:
        parts = tuple(int(p) for p in text.split(","))
    except ValueError:
        raise InputError("%s: expected comma-separated integers, got %r" % (what, text))
    if not parts:
        raise InputError("%s: empty list" % what)
    return parts


def _threads_from_env() -> int:
    raw = os.environ.get("LATCOH_THREADS", "").strip()
    if not raw:
        return 1
    try:
        n = int(raw)
    except ValueError:
        raise InputError("LATCOH_THREADS: expected an integer, got %r" % raw)
    return max(1, n)


def parse_args(argv) -> RunConfig:
    ap = argparse.ArgumentParser(
        prog="latcoh",
        description="analytic lattice cohomology of curve singularities",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("semigroup", help="invariants of a numerical semigroup")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--gens", help="comma-separated generators, e.g. 6,10,31")
    src.add_argument("--in", dest="infile", help="semigroup JSON file")
    p.add_argument("--out", help="write the report JSON here")
    p.add_argument("--root", dest="root_out", help="write the graded root (.dot/.json/ASCII)")
    p.add_argument("--weights", dest="weights_out", help="write the weight table TSV")
    p.add_argument("--module", dest="module_out", help="write the tower module JSON")

    p = sub.add_parser("reconstruct", help="semigroup from a tower-module file")
    p.add_argument("--module", dest="infile", required=True, help="module JSON file")
    p.add_argument("--out", help="write the semigroup JSON here")

    p = sub.add_parser("curve", help="lattice cohomology of a parametrized curve")
    p.add_argument("--in", dest="infile", required=True, help="curve JSON file")
    p.add_argument("--bound", type=int, help="truncation degree for the series algebra")
    p.add_argument("--conductor", help="known conductor, comma-separated per branch")
    p.add_argument("--out", help="write the report JSON here")
    p.add_argument("--root", dest="root_out", help="write the graded root (.dot/.json/ASCII)")
    p.add_argument("--weights", dest="weights_out", help="write the weight table TSV")
    p.add_argument("--cohomology", dest="cohomology_out", help="write the cohomology JSON")

    p = sub.add_parser("roundtrip", help="reconstruction sweep over plane branches")
    p.add_argument("--max-conductor", type=int, required=True)
    p.add_argument("--out", help="write the sweep report JSON here")

    p = sub.add_parser("root-iso", help="decide isomorphism of two root files")
    p.add_argument("roots", nargs=2, metavar="ROOT_JSON")

    p = sub.add_parser("conjecture-sweep", help="hunt for equal-module non-isomorphic roots")
    p.add_argument("--max-conductor", type=int, required=True)
    p.add_argument("--out", help="write the sweep report JSON here")

    ns = ap.parse_args(argv)
    gens = _int_tuple(ns.gens, "--gens") if getattr(ns, "gens", None) else None
    conductor = (
        _int_tuple(ns.conductor, "--conductor")
        if getattr(ns, "conductor", None)
        else None
    )
    inputs = []
    if getattr(ns, "infile", None):
        inputs.append(ns.infile)
    if getattr(ns, "roots", None):
        inputs.extend(ns.roots)
    return RunConfig(
        command=ns.command,
        inputs=tuple(inputs),
        gens=gens,
        out=getattr(ns, "out", None),
        root_out=getattr(ns, "root_out", None),
        weights_out=getattr(ns, "weights_out", None),
        module_out=getattr(ns, "module_out", None),
        cohomology_out=getattr(ns, "cohomology_out", None),
        degree_bound=getattr(ns, "bound", None),
        conductor=conductor,
        max_conductor=getattr(ns, "max_conductor", 0) or 0,
        threads=_threads_from_env(),
    )


def _write(path: str, text: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def _write_root(path: str, R: GradedRoot) -> None:
    if path.endswith(".dot"):
        _write(path, formats.root_dot(R))
    elif path.endswith(".json"):
        _write(path, formats.to_json(formats.root_to_dict(R)))
    else:
        _write(path, formats.root_ascii(R))


def _emit_report(report: dict, out: str | None) -> None:
    text = formats.to_json(report)
    sys.stdout.write(text)
    if out:
        _write(out, text)


def _smallest_positive(S: CofiniteSet) -> int:
    x = 1
    while x not in S:
        x += 1
    return x


# ---------------------------------------------------------------------------
# semigroup

def cmd_semigroup(cfg: RunConfig) -> int:
    if cfg.gens is not None:
        S = from_generators(cfg.gens)
    else:
        S = formats.read_semigroup_file(cfg.inputs[0])
    W = weight_sequence(S)
    R = root_from_weight(W)
    M = module_from_root(R)

    plane, chain = (False, None)
    if isinstance(S, NumericalSemigroup):
        plane, chain = is_plane_branch(S)
    notes = []
    try:
        E = list(initial_part(M).elements)
    except ValidationError as exc:
        E = None
        notes.append("initial part undefined: %s" % exc)

    report = {
        "generators": list(S.min_gens) if isinstance(S, NumericalSemigroup) else None,
        "smooth": S.conductor == 0,
        "conductor": S.conductor,
        "delta": S.delta,
        "multiplicity": _smallest_positive(S),
        "plane_branch": plane,
        "gcd_chain": (
            {
                "l": list(chain.l),
                "n": list(chain.n),
                "partial_conductors": list(chain.partial_conductors),
            }
            if chain is not None
            else None
        ),
        "min_w0": min_w0(W),
        "truncation_level": R.truncation_level,
        "module": formats.module_to_dict(M),
        "e": compute_e(M),
        "E": E,
        "lg1_equals_2": detect_lg1_equals_2(M),
    }
    if notes:
        report["notes"] = notes
    if cfg.weights_out:
        _write(cfg.weights_out, formats.weights_tsv(W))
    if cfg.root_out:
        _write_root(cfg.root_out, R)
    if cfg.module_out:
        _write(cfg.module_out, formats.to_json(formats.module_to_dict(M)))
    _emit_report(report, cfg.out)
    return 0


# ---------------------------------------------------------------------------
# reconstruct

def cmd_reconstruct(cfg: RunConfig) -> int:
    M = formats.read_module_file(cfg.inputs[0])
    S = reconstruct_semigroup(M)
    ip = initial_part(M)
    _plane, chain = is_plane_branch(S)
    lines = [
        "generators: " + ", ".join(str(g) for g in S.min_gens),
        "conductor: %d" % S.conductor,
        "delta: %d" % S.delta,
        "multiplicity: %d" % S.multiplicity,
        "g: %d" % (len(S.min_gens) - 1),
        "l chain: " + ", ".join(str(l) for l in chain.l),
        "E: " + ", ".join(str(x) for x in ip.elements),
        "e: %d" % ip.e,
        "lg1_equals_2: %s" % ("true" if detect_lg1_equals_2(M) else "false"),
    ]
    sys.stdout.write("\n".join(lines) + "\n")
    text = formats.to_json(formats.semigroup_to_dict(S))
    if cfg.out:
        _write(cfg.out, text)
    else:
        sys.stdout.write(text)
    return 0


# ---------------------------------------------------------------------------
# curve

def cmd_curve(cfg: RunConfig) -> int:
    P = formats.read_curve_file(cfg.inputs[0])
    if cfg.conductor is not None and len(cfg.conductor) != P.r:
        raise InputError(
            "--conductor: expected %d entries for %d branches" % (P.r, P.r)
        )
    bound = cfg.degree_bound if cfg.degree_bound is not None else "auto"
    W = hilbert_from_parametrization(P, degree_bound=bound, conductor=cfg.conductor)
    H = lattice_cohomology(W)
    sd = series(W)
    ed = euler_delta_check(W, P)

    report = {
        "r": W.r,
        "conductor": list(W.conductor),
        "box": list(W.box),
        "delta": W.delta,
        "min_w0": W.min_w0,
        "module": formats.module_to_dict(H.module),
        "root": formats.root_to_dict(H.root),
        "series": {
            "tail": sd.tail,
            "coefficients": [
                [list(pt), sd.coefficients[pt]] for pt in sorted(sd.coefficients)
            ],
        },
        "euler": {
            "equal": ed.equal,
            "euler": ed.euler,
            "delta": ed.delta,
            "conclusive": ed.conclusive,
        },
        "cohomology": [
            {
                "q": qc.q,
                "fit": qc.fit,
                "towers": [[m, t] for m, t in qc.towers],
                "ranks": [[n, qc.ranks[n]] for n in sorted(qc.ranks)],
                "u_ranks": [[n, qc.u_ranks[n]] for n in sorted(qc.u_ranks)],
            }
            for qc in H.per_q
        ],
        "torsion": [
            [q, n, list(H.torsion[(q, n)])] for q, n in sorted(H.torsion)
        ],
    }
    if W.r == 1:
        seq = W.to_weight_sequence()
        src = seq.source
        report["generators"] = (
            list(src.min_gens) if isinstance(src, NumericalSemigroup) else None
        )
    if cfg.weights_out:
        _write(cfg.weights_out, formats.weights_tsv(W))
    if cfg.root_out:
        _write_root(cfg.root_out, H.root)
    if cfg.cohomology_out:
        section = {
            "min_w0": H.min_w0,
            "module": report["module"],
            "cohomology": report["cohomology"],
            "torsion": report["torsion"],
        }
        _write(cfg.cohomology_out, formats.to_json(section))
    _emit_report(report, cfg.out)
    return 0


# ---------------------------------------------------------------------------
# roundtrip

def _roundtrip_one(gens: tuple[int, ...]) -> tuple[tuple[int, ...], bool]:
    S = from_generators(gens)
    M = module_from_root(root_from_weight(weight_sequence(S)))
    try:
        back = reconstruct_semigroup(M)
    except ValidationError:
        return gens, False
    return gens, back == S


def cmd_roundtrip(cfg: RunConfig) -> int:
    if cfg.max_conductor < 0:
        raise InputError("--max-conductor must be non-negative")
    all_gens = [
        S.min_gens for S in enumerate_plane_branch_semigroups(cfg.max_conductor)
    ]
    if cfg.threads > 1 and len(all_gens) > 1:
        import multiprocessing

        with multiprocessing.Pool(cfg.threads) as pool:
            results = list(pool.imap(_roundtrip_one, all_gens, chunksize=16))
    else:
        results = [_roundtrip_one(g) for g in all_gens]
    failures = [gens for gens, ok in results if not ok]
    for gens in failures:
        sys.stdout.write("failed: %s\n" % ",".join(str(g) for g in gens))
    sys.stdout.write("tested %d passed %d\n" % (len(results), len(results) - len(failures)))
    if cfg.out:
        _write(
            cfg.out,
            formats.to_json(
                {
                    "max_conductor": cfg.max_conductor,
                    "tested": len(results),
                    "passed": len(results) - len(failures),
                    "failures": [list(g) for g in failures],
                }
            ),
        )
    return 1 if failures else 0


# ---------------------------------------------------------------------------
# root-iso

def cmd_root_iso(cfg: RunConfig) -> int:
    R1 = formats.read_root_file(cfg.inputs[0])
    R2 = formats.read_root_file(cfg.inputs[1])
    if roots_isomorphic(R1, R2):
        sys.stdout.write("isomorphic\n")
        return 0
    sys.stdout.write("not isomorphic\n")
    return 3


# ---------------------------------------------------------------------------
# conjecture-sweep

def cmd_conjecture_sweep(cfg: RunConfig) -> int:
    if cfg.max_conductor < 0:
        raise InputError("--max-conductor must be non-negative")
    rep = conjecture_sweep(cfg.max_conductor)
    lines = [
        "max conductor %d" % rep.max_conductor,
        "tested %d" % rep.tested,
        "module classes %d" % rep.module_classes,
        "shared module groups %d" % rep.shared_module_groups,
        "pairs checked %d" % rep.pairs_checked,
        "findings %d" % len(rep.hits),
    ]
    for a, b in rep.hits:
        lines.append(
            "finding: equal modules, non-isomorphic roots: %s vs %s"
            % (",".join(str(x) for x in a), ",".join(str(x) for x in b))
        )
    sys.stdout.write("\n".join(lines) + "\n")
    if cfg.out:
        _write(
            cfg.out,
            formats.to_json(
                {
                    "max_conductor": rep.max_conductor,
                    "tested": rep.tested,
                    "module_classes": rep.module_classes,
                    "shared_module_groups": rep.shared_module_groups,
                    "pairs_checked": rep.pairs_checked,
                    "findings": [[list(a), list(b)] for a, b in rep.hits],
                }
            ),
        )
    return 0


_DISPATCH = {
    "semigroup": cmd_semigroup,
    "reconstruct": cmd_reconstruct,
    "curve": cmd_curve,
    "roundtrip": cmd_roundtrip,
    "root-iso": cmd_root_iso,
    "conjecture-sweep": cmd_conjecture_sweep,
}


def run(cfg: RunConfig) -> int:
    return _DISPATCH[cfg.command](cfg)


def main(argv=None) -> int:
    try:
        cfg = parse_args(argv)
        return run(cfg)
    except InputError as exc:
        sys.stderr.write("error: %s\n" % exc)
        return 2
    except ValidationError as exc:
        sys.stderr.write("violation: %s\n" % exc)
        return 1


if __name__ == "__main__":
    sys.exit(main())

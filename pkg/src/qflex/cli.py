"""Command-line interface: ``qflex check|build|search|octonion|identities``.

Exit codes: 0 when the verdict is true, 1 when it is false (or a
constructor's precondition fails), 2 on input errors.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import List, Optional, Sequence

from . import io
from .algebra import (
    AlgebraSpec,
    CheckReport,
    check_jacobi_relation,
    check_myung_equivalence,
    check_operator_relations,
    check_q_flexible,
    check_q_jacobi,
)
from .bimodule import check_bimodule, semidirect_product
from .double import DoubleSpec, build_double, check_dual_matched_pair, check_invariance, dual_names, manin_verdict
from .errors import PreconditionError, QFlexError
from .linalg import format_rational, parse_rational
from .matched_pair import bicrossed_product, check_matched_pair
from .octonion import build_octonion, run_suite, table1_json, table1_text, table2_json, table2_text
from .search import RNG_ALGORITHM, search_q_flexible

EXIT_TRUE, EXIT_FALSE, EXIT_INPUT = 0, 1, 2

ALGEBRA_KINDS = ("flexible", "operator-relations", "q-jacobi", "myung")
CHECK_KINDS = ALGEBRA_KINDS + ("bimodule", "matched-pair", "dual-matched-pair", "invariance", "manin")


class InputError(Exception):
    pass


@dataclass
class RunReport:
    command: str
    inputs: dict = field(default_factory=dict)
    verdicts: List[dict] = field(default_factory=list)
    elapsed: float = 0.0
    seed: Optional[int] = None
    rng: Optional[str] = None
    data: Optional[dict] = None

    def add(self, report: CheckReport) -> None:
        self.verdicts.append(report.to_dict() | {"summary": report.summary()})

    def add_flag(self, name: str, ok: bool, detail: str = "") -> None:
        self.verdicts.append({"identity": name, "verdict": ok, "summary": detail or f"{name}: {ok}"})

    @property
    def verdict(self) -> bool:
        return all(v["verdict"] for v in self.verdicts if v.get("gating", True))

    def to_dict(self) -> dict:
        out = {"command": self.command, "inputs": self.inputs, "verdict": self.verdict,
               "verdicts": self.verdicts, "elapsed_seconds": round(self.elapsed, 6),
               "seed": self.seed, "rng": self.rng}
        if self.data is not None:
            out["data"] = self.data
        return out

    def text(self) -> str:
        lines = [v["summary"] for v in self.verdicts]
        lines.append(f"verdict: {'true' if self.verdict else 'false'}")
        return "\n".join(lines) + "\n"


def _digest(path: Path) -> str:
    try:
        return hashlib.sha256(path.read_bytes()).hexdigest()
    except OSError as exc:
        raise InputError(f"{path}: cannot read file: {exc}") from None


def _record(report: RunReport, *paths: str) -> None:
    for p in paths:
        report.inputs[p] = _digest(Path(p))


# -- input helpers -----------------------------------------------------------

def _read_json(path: str):
    p = Path(path)
    try:
        text = p.read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise InputError(f"{path}: cannot read file: {exc}") from None
    return io.parse_text(text, path)


def _double_from_paths(paths: Sequence[str]) -> DoubleSpec:
    """A double file, or a primal algebra file followed by a dual-structure file.

    The dual file is either an algebra file or an object holding ``dualProducts``.
    """
    if len(paths) == 1:
        return io.load_double(paths[0])
    primal = io.load_algebra(paths[0])
    data = _read_json(paths[1])
    if isinstance(data, dict) and "dualProducts" in data and "dim" not in data:
        t = io.products_from_json(data["dualProducts"], primal.dim, f"{paths[1]}:$.dualProducts")
        return DoubleSpec(primal, AlgebraSpec(primal.dim, primal.q, dual_names(primal.basis_names), t))
    return io.dual_from_algebra_file(primal, paths[1])


def _arity(paths: Sequence[str], lo: int, hi: int, what: str) -> None:
    if not lo <= len(paths) <= hi:
        raise InputError(f"{what} expects {lo if lo == hi else f'{lo} to {hi}'} input file(s), got {len(paths)}")


# -- commands ----------------------------------------------------------------

def cmd_check(args, report: RunReport) -> None:
    kind = args.kind
    paths = args.paths
    if kind in ALGEBRA_KINDS or kind in ("bimodule", "matched-pair"):
        _arity(paths, 1, 1, f"check --kind {kind}")
    else:
        _arity(paths, 1, 2, f"check --kind {kind}")
    _record(report, *paths)
    if kind in ALGEBRA_KINDS:
        alg = io.load_algebra(paths[0])
        if kind == "flexible":
            report.add(check_q_flexible(alg))
        elif kind == "operator-relations":
            report.add(check_operator_relations(alg))
        elif kind == "q-jacobi":
            report.add(check_q_jacobi(alg))
        else:
            _myung(alg, report)
    elif kind == "bimodule":
        report.add(check_bimodule(io.load_bimodule(paths[0])))
    elif kind == "matched-pair":
        report.add(check_matched_pair(io.load_matched_pair(paths[0])))
    else:
        d = _double_from_paths(paths)
        if kind == "dual-matched-pair":
            report.add(check_dual_matched_pair(d))
        elif kind == "invariance":
            report.add(check_invariance(d))
        else:
            v = manin_verdict(d)
            for r in v.reports.values():
                report.add(r)
            report.add_flag("manin-triple", v.is_manin_triple)
            report.add_flag("matched-pair", v.is_matched_pair)
            report.add_flag("bialgebra", v.is_bialgebra)
            report.add_flag("equivalence", v.agree, f"three conditions agree: {v.agree}")


def _myung(alg: AlgebraSpec, report: RunReport) -> None:
    try:
        m = check_myung_equivalence(alg)
    except PreconditionError as exc:
        report.add(exc.report)
        return
    for r in m.reports():
        report.verdicts.append(r.to_dict() | {"summary": r.summary(), "gating": False})
    report.add_flag("myung-agreement", m.agree,
                    "Myung conditions agree: {} (bracket-derivation {}, star-derivation {}, "
                    "Lie-admissible {})".format(m.agree, *m.verdicts))


def cmd_build(args, report: RunReport) -> Optional[AlgebraSpec]:
    kind, paths = args.kind, args.paths
    _record(report, *paths)
    try:
        if kind == "semidirect":
            _arity(paths, 1, 2, "build --kind semidirect")
            b = io.load_bimodule(paths[-1])
            if len(paths) == 2 and io.load_algebra(paths[0]) != b.algebra:
                raise InputError(f"{paths[1]}: bimodule is over a different algebra than {paths[0]}")
            out = semidirect_product(b)
        elif kind == "bicrossed":
            _arity(paths, 1, 1, "build --kind bicrossed")
            out = bicrossed_product(io.load_matched_pair(paths[0]))
        else:
            _arity(paths, 1, 2, "build --kind double")
            out = build_double(_double_from_paths(paths))
    except PreconditionError as exc:
        report.add(exc.report)
        return None
    report.add_flag("build", True, f"built {kind}: dim {out.dim}, q {format_rational(out.q)}")
    return out


def cmd_search(args, report: RunReport) -> dict:
    q = parse_rational(args.q, "--q")
    seed = args.seed if args.seed is not None else 0
    report.seed, report.rng = seed, RNG_ALGORITHM
    res = search_q_flexible(args.dim, q, args.trials, seed)
    catalog = {
        "dim": args.dim, "q": format_rational(q), "trials": args.trials, "seed": seed, "rng": RNG_ALGORITHM,
        "hits": res.hits, "algebras": [io.algebra_to_json(a) for a in res.catalog],
    }
    report.add_flag("search", True, f"{len(res.catalog)} distinct q-flexible tables from {res.hits} hits "
                                    f"in {args.trials} trials")
    return catalog


def cmd_octonion(args, report: RunReport) -> Optional[str]:
    q = parse_rational(args.q, "--q") if args.q is not None else None
    alg = build_octonion(-1 if q is None else q)
    if args.emit_algebra:
        report.add_flag("emit-algebra", True, "octonion algebra emitted")
        return io.serialize(alg)
    if args.emit_table1:
        report.add_flag("emit-table1", True, "table1 emitted")
        return io.dumps(table1_json(alg)) if args.json else table1_text(alg)
    if args.emit_table2:
        report.add_flag("emit-table2", True, "table2 emitted")
        return io.dumps(table2_json(alg)) if args.json else table2_text(alg)
    seed = args.seed if args.seed is not None else 0
    report.seed, report.rng = seed, RNG_ALGORITHM
    for item in run_suite(seed=seed):
        entry = {"identity": item.name, "verdict": item.ok,
                 "summary": f"[{'pass' if item.ok else 'FAIL'}{'' if item.gating else ', data'}] "
                            f"{item.name}: {item.detail}"}
        if not item.gating:
            entry["gating"] = False
        report.verdicts.append(entry)
    return None


def cmd_identities(args, report: RunReport) -> None:
    _record(report, args.path)
    alg = io.load_algebra(args.path)
    flex = check_q_flexible(alg)
    report.add(flex)
    report.add(check_jacobi_relation(alg))
    report.add(check_q_jacobi(alg))
    if flex:
        _myung(alg, report)


# -- argument parsing --------------------------------------------------------

def _global_flags(parser: argparse.ArgumentParser, suppress: bool) -> None:
    default = argparse.SUPPRESS if suppress else None
    parser.add_argument("--json", action="store_true", default=argparse.SUPPRESS if suppress else False,
                        help="machine-readable report on standard output")
    parser.add_argument("--seed", type=int, default=default, help="seed for randomized steps")
    parser.add_argument("--out", "-o", default=default, metavar="PATH", help="write the main output here")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qflex", description="Exact checks for q-generalized flexible algebras.")
    _global_flags(parser, suppress=False)
    common = argparse.ArgumentParser(add_help=False)
    _global_flags(common, suppress=True)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[common], help="run one identity checker on input files")
    p.add_argument("paths", nargs="+", metavar="FILE")
    p.add_argument("--kind", choices=CHECK_KINDS, default="flexible")

    p = sub.add_parser("build", parents=[common], help="construct an algebra and write it as JSON")
    p.add_argument("paths", nargs="+", metavar="FILE")
    p.add_argument("--kind", choices=("semidirect", "bicrossed", "double"), required=True)

    p = sub.add_parser("search", parents=[common], help="random search for q-flexible structure tensors")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--q", default="-1")
    p.add_argument("--trials", type=int, default=1000)

    p = sub.add_parser("octonion", parents=[common], help="octonion tables and fixture suite")
    p.add_argument("--check-all", action="store_true", help="run every octonion check (the default)")
    p.add_argument("--emit-table1", action="store_true")
    p.add_argument("--emit-table2", action="store_true")
    p.add_argument("--emit-algebra", action="store_true")
    p.add_argument("--q", default=None, help="parameter for the emitted algebra or tables")

    p = sub.add_parser("identities", parents=[common], help="Jacobi relation, q-Jacobi and Myung on one algebra")
    p.add_argument("path", metavar="FILE")
    return parser


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_TRUE
    report = RunReport(command=args.command, seed=args.seed)
    start = time.perf_counter()
    payload: Optional[str] = None
    try:
        if args.command == "check":
            cmd_check(args, report)
        elif args.command == "build":
            alg = cmd_build(args, report)
            if alg is not None:
                payload = io.serialize(alg)
        elif args.command == "search":
            payload = io.dumps(cmd_search(args, report))
        elif args.command == "octonion":
            payload = cmd_octonion(args, report)
        else:
            cmd_identities(args, report)
    except (InputError, QFlexError, ValueError) as exc:
        print(f"qflex: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    report.elapsed = time.perf_counter() - start

    rendered = io.dumps(report.to_dict()) if args.json else report.text()
    if payload is None:
        sys.stdout.write(rendered)
    elif args.out:
        _emit(payload, args.out)
        sys.stdout.write(rendered)
    else:
        sys.stdout.write(payload)
        sys.stderr.write(rendered)
    return EXIT_TRUE if report.verdict else EXIT_FALSE


if __name__ == "__main__":
    sys.exit(main())

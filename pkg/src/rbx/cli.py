"""Command-line interface: ``rbx <command> TARGET ...``.

TARGET is a family descriptor (``sweedler``, ``group:symmetric:3``,
``uqsl2:3``, ``hecke:A:2``, ...) or the path of a JSON algebra document.

Exit status: 0 when every verdict passes, 1 when a mathematical verdict
fails, 2 for input and usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import document
from .algebra import AlgebraError, ElementParseError, FiniteDimAlgebra
from .checks import DEFAULT_BUDGET, CheckResult
from .families import FamilyCheckError, FamilyError, build_family
from .hopf import HopfAlgebra, HopfStructureError
from .linalg import FieldRequiredError
from .rota_baxter import (
    NotQuasiIdempotentError,
    RotaBaxterError,
    RotaBaxterOperator,
    check_quasi_idempotent_operator,
    check_rb_identity,
    check_star_associativity,
    derive_dendriform,
    derive_tridendriform,
    quasi_idempotent_weight,
)
from .scalars import RingMismatchError, ScalarParseError

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


_INPUT_ERRORS = (
    InputError,
    document.DocumentError,
    FamilyError,
    ElementParseError,
    ScalarParseError,
    AlgebraError,
    RingMismatchError,
    FieldRequiredError,
    OSError,
)


# ---------------------------------------------------------------------------
# loading


def load_target(target: str, budget=DEFAULT_BUDGET, seed: int = 0) -> FiniteDimAlgebra | HopfAlgebra:
    path = Path(target)
    if target.endswith(".json") or path.is_file():
        return document.load(path)
    return build_family(target, budget, seed)


def _algebra(obj) -> FiniteDimAlgebra:
    return obj.algebra if isinstance(obj, HopfAlgebra) else obj


def _require_hopf(obj, command: str) -> HopfAlgebra:
    if not isinstance(obj, HopfAlgebra):
        raise InputError(f"{command} needs a Hopf algebra; {_algebra(obj).name or 'the target'} has no coproduct")
    return obj


def _scalar(A: FiniteDimAlgebra, c) -> str:
    return A.ring.render(c)


# ---------------------------------------------------------------------------
# commands: each returns (report fields, list of CheckResult)


def cmd_check(args, obj):
    A = _algebra(obj)
    results = [A.check_associativity(args.budget, args.seed), A.check_unit()]
    if isinstance(obj, HopfAlgebra):
        results += [
            obj.check_coassociativity(),
            obj.check_counit(),
            obj.check_bialgebra(args.budget, args.seed),
            obj.check_antipode(),
        ]
    return {"hopf": isinstance(obj, HopfAlgebra), "verdicts": [r.as_dict() for r in results]}, results


def cmd_trace_element(args, obj):
    H = _require_hopf(obj, "trace-element")
    A = H.algebra
    coords = H.trace_element_coordinates()
    via = H.trace_element_via_traces()
    x = A.element(coords)
    eps = H.counit(x)
    results = [
        CheckResult("closed formula matches explicit traces", coords == via, 1, 1),
        CheckResult("eps(x_H) = dim H", eps == H.dim, 1, 1),
        CheckResult("x_H^2 = eps(x_H) x_H", x * x == eps * x, 1, 1),
    ]
    report = {
        "traces": [_scalar(A, c) for c in via],
        "x_H": A.render(x),
        "eps": _scalar(A, eps),
        "cocommutative": H.is_cocommutative_element(x),
        "verdicts": [r.as_dict() for r in results],
    }
    return report, results


def cmd_integrals(args, obj):
    H = _require_hopf(obj, "integrals")
    try:
        basis = H.integrals(args.side)
    except HopfStructureError as exc:
        return {"side": args.side, "error": str(exc)}, [CheckResult("integrals verified", False, 0, 1, detail=str(exc))]
    results = [CheckResult("integral space is one-dimensional", len(basis) == 1, 1, 1)]
    report = {
        "side": args.side,
        "dimension": len(basis),
        "integrals": [str(b) for b in basis],
        "verdicts": [r.as_dict() for r in results],
    }
    return report, results


def cmd_rb(args, obj):
    A = _algebra(obj)
    xi = A.parse_element(args.element)
    report: dict = {"element": A.render(xi)}
    try:
        lam = quasi_idempotent_weight(A, xi)
    except NotQuasiIdempotentError as exc:
        report["quasi_idempotent"] = False
        report["square"] = A.render(exc.square) if exc.square is not None else None
        report["error"] = str(exc)
        return report, [CheckResult("quasi-idempotent", False, 1, 1, detail=str(exc))]
    P = RotaBaxterOperator(A, A.left_mult_matrix(xi), lam, element=xi)
    results = [
        check_rb_identity(A, P, lam, args.budget, args.seed),
        check_quasi_idempotent_operator(P, lam),
    ]
    report.update({"quasi_idempotent": True, "weight": _scalar(A, lam), "verdicts": [r.as_dict() for r in results]})
    if args.table:
        report["action"] = [[label, A.render(img)] for label, img in P.action_table()]
    if args.matrix:
        report["matrix_columns"] = [[_scalar(A, c) for c in P.matrix.column(j)] for j in range(A.dim)]
    return report, results


def _table_entries(T, which: str) -> list:
    A = T.algebra
    basis = A.basis
    rows = []
    for (i, j), vec in sorted(T.structure_constants(which).items()):
        rows.append([basis[i], basis[j], A.render(A.from_sparse(vec))])
    return rows


def cmd_tridend(args, obj):
    A = _algebra(obj)
    xi = A.parse_element(args.element)
    report: dict = {"element": A.render(xi)}
    try:
        lam = quasi_idempotent_weight(A, xi)
    except NotQuasiIdempotentError as exc:
        report["quasi_idempotent"] = False
        report["error"] = str(exc)
        return report, [CheckResult("quasi-idempotent", False, 1, 1, detail=str(exc))]
    report["weight"] = _scalar(A, lam)
    if lam:
        T = derive_tridendriform(A, xi, lam, budget=args.budget, seed=args.seed, verify=False)
        report["structure"] = "tridendriform"
        if T.lifted:
            report["lift"] = (
                f"coefficients lifted from Laurent polynomials to rational functions in "
                f"{A.ring.generator_name()}: the weight {_scalar(A, lam)} is not a unit"
            )
        axioms = T.check(args.budget, args.seed)
        names = (("prec", "<"), ("succ", ">"), ("dot", "."))
    else:
        P = RotaBaxterOperator(A, A.left_mult_matrix(xi), lam, element=xi)
        T = derive_dendriform(A, P, budget=args.budget, seed=args.seed, verify=False)
        report["structure"] = "dendriform"
        axioms = T.check(args.budget, args.seed)
        names = (("prec", "<"), ("succ", ">"))
    star = check_star_associativity(T, args.budget, args.seed)
    results = axioms + [star]
    report["axioms_passed"] = f"{sum(r.passed for r in axioms)}/{len(axioms)}"
    report["verdicts"] = [r.as_dict() for r in results]
    if args.tables:
        report["tables"] = {sym: _table_entries(T, key) for key, sym in names}
    return report, results


def cmd_export(args, obj):
    text = document.dumps(obj)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
        return {"written": args.output, "bytes": len(text.encode("utf-8"))}, []
    return {"document": json.loads(text)}, []


# ---------------------------------------------------------------------------
# rendering


def _text_lines(report: dict, prefix: str = "") -> list[str]:
    lines = []
    width = max((len(k) for k in report), default=0)
    for key, value in report.items():
        if key == "verdicts":
            lines.append(f"{prefix}verdicts:")
            for v in value:
                mark = "PASS" if v["passed"] else "FAIL"
                extra = f"  [{v['checked']}/{v['total']}"
                extra += f" sampled, seed {v['seed']}]" if v.get("sampled") else "]"
                line = f"{prefix}  {mark}  {v['check']}{extra}"
                if not v["passed"]:
                    line += f"  witness: ({', '.join(map(str, v['witness']))})"
                    if v.get("detail"):
                        line += f"  {v['detail']}"
                elif v.get("detail"):
                    line += f"  {v['detail']}"
                lines.append(line)
        elif key == "action":
            lines.append(f"{prefix}action:")
            lw = max(len(lbl) for lbl, _ in value)
            lines += [f"{prefix}  P({lbl}){' ' * (lw - len(lbl))} = {img}" for lbl, img in value]
        elif key == "tables":
            for sym, rows in value.items():
                lines.append(f"{prefix}table {sym}:")
                lines += [f"{prefix}  {a} {sym} {b} = {img}" for a, b, img in rows]
        elif key == "matrix_columns":
            lines.append(f"{prefix}matrix (column j = P(e_j)):")
            lines += [f"{prefix}  col {j}: [{', '.join(col)}]" for j, col in enumerate(value)]
        elif key == "integrals":
            lines.append(f"{prefix}integrals:")
            lines += [f"{prefix}  {x}" for x in value]
        elif key == "document":
            lines.append(document.dumps(value).rstrip("\n"))
        elif isinstance(value, list):
            lines.append(f"{prefix}{key.ljust(width)} : {', '.join(map(str, value))}")
        else:
            lines.append(f"{prefix}{key.ljust(width)} : {value}")
    return lines


COMMANDS = {
    "check": cmd_check,
    "trace-element": cmd_trace_element,
    "integrals": cmd_integrals,
    "rb": cmd_rb,
    "tridend": cmd_tridend,
    "export": cmd_export,
}


def _budget(text: str):
    if text.lower() in ("none", "all", "exhaustive"):
        return None
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"budget must be a positive integer or 'none', got {text!r}") from None
    if n <= 0:
        raise argparse.ArgumentTypeError("budget must be positive")
    return n


def build_parser() -> argparse.ArgumentParser:
    # global flags are accepted before or after the command name
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS,
                        help="report format (default: text)")
    common.add_argument("--budget", type=_budget, default=argparse.SUPPRESS,
                        help=f"sampled tuples for carriers above dim 64, or 'none' (default {DEFAULT_BUDGET})")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="sampling seed (default 0)")

    parser = argparse.ArgumentParser(
        prog="rbx",
        description="Exact Rota-Baxter, Hopf and tridendriform computations on finite-dimensional algebras.",
        parents=[common],
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")
    target_help = "family descriptor (sweedler, group:symmetric:3, uqsl2:3, hecke:A:2, ...) or JSON document path"

    p = sub.add_parser("check", parents=[common], help="run the algebra (and Hopf) axiom checks")
    p.add_argument("target", help=target_help)

    p = sub.add_parser("trace-element", parents=[common], help="compute the trace element x_H")
    p.add_argument("target", help=target_help)

    p = sub.add_parser("integrals", parents=[common], help="basis of the left or right integrals")
    p.add_argument("target", help=target_help)
    p.add_argument("--side", choices=("left", "right"), default="left")

    p = sub.add_parser("rb", parents=[common], help="Rota-Baxter operator of left multiplication by an element")
    p.add_argument("target", help=target_help)
    p.add_argument("element", help='element expression, e.g. "2*1 + 2*x" or "C[s1]"')
    p.add_argument("--table", action="store_true", help="print P(e_i) for every basis element")
    p.add_argument("--matrix", action="store_true", help="print the operator matrix by columns")

    p = sub.add_parser("tridend", parents=[common], help="derived tridendriform (or dendriform) structure")
    p.add_argument("target", help=target_help)
    p.add_argument("element", help="quasi-idempotent element expression")
    p.add_argument("--no-tables", dest="tables", action="store_false", help="omit the product tables")

    p = sub.add_parser("export", parents=[common], help="write the JSON algebra document")
    p.add_argument("target", help=target_help)
    p.add_argument("-o", "--output", help="output path (default: standard output)")
    return parser


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    fmt = getattr(args, "format", "text")
    args.budget = getattr(args, "budget", DEFAULT_BUDGET)
    args.seed = getattr(args, "seed", 0)

    start = time.perf_counter()
    try:
        obj = load_target(args.target, args.budget, args.seed)
        if args.command == "export" and not args.output and fmt == "text":
            stdout.write(document.dumps(obj))
            return EXIT_OK
        body, results = COMMANDS[args.command](args, obj)
    except _INPUT_ERRORS as exc:
        print(f"rbx: error: {exc}", file=stderr)
        return EXIT_INPUT
    except (RotaBaxterError, HopfStructureError, FamilyCheckError) as exc:
        print(f"rbx: verdict failure: {exc}", file=stderr)
        return EXIT_FAIL
    elapsed = time.perf_counter() - start

    A = _algebra(obj)
    passed = all(r.passed for r in results)
    report = {
        "command": args.command,
        "target": args.target,
        "algebra": A.name,
        "ring": A.ring.name,
        "dim": A.dim,
        "budget": args.budget,
        "seed": args.seed,
    }
    report.update(body)
    report["passed"] = passed
    if fmt == "json":
        stdout.write(json.dumps(report, indent=2, ensure_ascii=False) + "\n")
    else:
        lines = _text_lines(dict(report, elapsed=f"{elapsed:.3f} s"))
        stdout.write("\n".join(lines) + "\n")
    return EXIT_OK if passed else EXIT_FAIL


def main(argv=None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()

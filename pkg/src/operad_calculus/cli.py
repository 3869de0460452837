"""Command-line interface.

Exit codes: 0 when the checked statement holds (or the computation
succeeded), 1 when it does not hold, 2 on any error in the input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path
from typing import Any, Sequence

from . import io
from .brackets import derived_bracket, fn_bracket
from .cohomology import ComplexHandle, ComplexKind, report
from .errors import AlphaNotCompatible, NotOperatorOfKind, OperadError
from .exact import format_rational, parse_rational
from .kernel import Multiplication, cup_bracket, representation_defects
from .operad import Element, gv_bracket, is_multiplication
from .operators import (
    Kind,
    averaging_products,
    classify,
    nijenhuis_deformation,
    nijenhuis_tower,
    rb_deformations,
)
from .trees import enumerate_trees
from .variants import DendriformOperad, dendriform_axioms_hold

EXIT_HOLDS, EXIT_FAILS, EXIT_ERROR = 0, 1, 2

MATRIX_NOTE = (
    "Operator files hold {\"matrix\": [[...]]}; the matrix acts on coordinate column "
    "vectors in the basis order of the algebra file, so column j is the image of basis vector j."
)


class Output:
    """Collects a report and prints it as text or JSON."""

    def __init__(self, as_json: bool):
        self.as_json = as_json
        self.data: dict[str, Any] = {}
        self.lines: list[str] = []

    def put(self, key: str, value: Any, text: str | None = None) -> None:
        self.data[key] = value
        self.lines.append(text if text is not None else f"{key}: {value}")

    def emit(self) -> None:
        if self.as_json:
            print(json.dumps(self.data, ensure_ascii=False, indent=2))
        else:
            for line in self.lines:
                print(line)


def _algebra(args) -> io.AlgebraInput:
    return io.load_algebra(args.algebra, args.flavor)


def _multiplication(alg: io.AlgebraInput) -> Multiplication:
    return Multiplication(alg.candidate())


def _operator(args, alg: io.AlgebraInput) -> Element:
    if not args.operator:
        raise OperadError("this command needs --operator")
    el = io.load_element(args.operator, alg)
    if el.arity != 1:
        raise OperadError(f"{args.operator}: an operator must have arity 1")
    return el


def _weight(args):
    return None if args.weight is None else parse_rational(args.weight)


def cmd_check_multiplication(args, out: Output) -> int:
    alg = _algebra(args)
    out.put("flavor", alg.flavor)
    try:
        pi = alg.candidate()
    except AlphaNotCompatible:
        out.put("alpha_compatible", False, "the product is not multiplicative for alpha (not in P_2^alpha)")
        out.put("holds", False, "does not hold")
        return EXIT_FAILS
    holds = is_multiplication(pi)
    if isinstance(alg.operad, DendriformOperad):
        axioms = dendriform_axioms_hold(alg.product[0], alg.product[1])
        out.put("dendriform_axioms", axioms)
        holds = holds and axioms
    out.put("holds", holds, "holds" if holds else "does not hold")
    return EXIT_HOLDS if holds else EXIT_FAILS


def cmd_classify(args, out: Output) -> int:
    alg = _algebra(args)
    pi = _multiplication(alg)
    T = _operator(args, alg)
    verdict = classify(pi, T, args.kind, _weight(args))
    out.put("kind", verdict.kind.value)
    if verdict.weight is not None:
        out.put("weight", format_rational(verdict.weight))
    out.put("holds", verdict.holds, "holds" if verdict.holds else "does not hold")
    out.put("maurer_cartan", verdict.mc_holds, f"Maurer-Cartan form vanishes: {verdict.mc_holds}")
    nonzero = sum(sum(1 for x in d.data.reshape(-1) if x != 0) for d in verdict.defects)
    out.put("defect_nonzero_entries", nonzero)
    return EXIT_HOLDS if verdict.holds else EXIT_FAILS


def cmd_bracket(args, out: Output) -> int:
    alg = _algebra(args)
    f = io.load_element(args.f, alg)
    g = io.load_element(args.g, alg)
    if args.kind == "gv":
        result = gv_bracket(f, g)
    else:
        pi = _multiplication(alg)
        fn = {"cup": cup_bracket, "fn": fn_bracket, "derived": derived_bracket}[args.kind]
        result = fn(pi, f, g)
    payload = io.dump_element(result, alg.basis)
    if args.out:
        io.write_json(args.out, payload)
        out.put("written", str(args.out), f"wrote {args.out}")
    out.put("arity", result.arity)
    out.put("is_zero", result.is_zero())
    if not args.out:
        out.put("element", payload, io.dumps(payload).rstrip())
    return EXIT_HOLDS


def cmd_deform(args, out: Output) -> int:
    alg = _algebra(args)
    pi = _multiplication(alg)
    T = _operator(args, alg)
    kind = Kind.parse(args.kind)
    outdir = Path(args.out_dir) if args.out_dir else None
    files: dict[str, dict] = {}
    if kind is Kind.NIJENHUIS:
        files["pi_N.json"] = io.dump_algebra(nijenhuis_deformation(pi, T), alg.basis)
    elif kind is Kind.ROTA_BAXTER:
        if args.weight is None:
            raise OperadError("rota-baxter deformation needs --weight")
        piR, rep = rb_deformations(pi, T, _weight(args))
        files["pi_R.json"] = io.dump_algebra(piR, alg.basis)
        files["pi_l.json"] = io.dump_element(rep.pil, alg.basis)
        files["pi_r.json"] = io.dump_element(rep.pir, alg.basis)
    elif kind is Kind.AVERAGING:
        left, right = averaging_products(pi, T)
        files["pi_left.json"] = io.dump_algebra(left, alg.basis)
        files["pi_right.json"] = io.dump_algebra(right, alg.basis)
    else:
        raise OperadError("deform supports nijenhuis, rota-baxter and averaging")
    for name, payload in files.items():
        if outdir is not None:
            outdir.mkdir(parents=True, exist_ok=True)
            io.write_json(outdir / name, payload)
            out.put(name, str(outdir / name), f"wrote {outdir / name}")
        else:
            out.put(name, payload, f"{name}:\n{io.dumps(payload).rstrip()}")
    return EXIT_HOLDS


def cmd_tower(args, out: Output) -> int:
    alg = _algebra(args)
    pi = _multiplication(alg)
    T = _operator(args, alg)
    if not classify(pi, T, Kind.NIJENHUIS).holds:
        raise NotOperatorOfKind("the operator is not a nijenhuis element")
    try:
        tower = nijenhuis_tower(pi, T, args.kmax)
    except AssertionError as exc:
        out.put("holds", False, f"does not hold: {exc}")
        return EXIT_FAILS
    out.put("kmax", args.kmax)
    out.put("holds", True, f"tower statements hold for 0 <= k, l <= {args.kmax}")
    out.put(
        "deformations",
        [io.dump_algebra(p, alg.basis) for _, p in tower],
        f"computed {len(tower)} deformed multiplications",
    )
    return EXIT_HOLDS


def cmd_cohomology(args, out: Output) -> int:
    alg = _algebra(args)
    pi = _multiplication(alg)
    kind = ComplexKind.parse(args.complex)
    params: dict[str, Any] = {}
    if kind is ComplexKind.REPRESENTATION:
        if not (args.pil and args.pir):
            raise OperadError("the representation complex needs --pil and --pir")
        pil, pir = io.load_element(args.pil, alg), io.load_element(args.pir, alg)
        bad = [k + 1 for k, d in enumerate(representation_defects(pi, pil, pir)) if not d.is_zero()]
        if bad:
            raise OperadError(f"(pil, pir) is not a representation: identities {bad} fail")
        params["rep"] = (pil, pir)
    elif kind is ComplexKind.PRESERVING:
        params["phi"] = _operator(args, alg)
    elif kind in (ComplexKind.NIJENHUIS, ComplexKind.ROTA_BAXTER, ComplexKind.AVERAGING):
        params["operator"] = _operator(args, alg)
        params["weight"] = _weight(args)
    h = ComplexHandle(kind, pi, params, args.degree_max)
    rep = report(h)
    if args.json:
        out.data.update(rep)
    else:
        for degree, dim in zip(rep["degrees"], rep["dims"]):
            out.lines.append(f"H^{degree}: {dim}")
    return EXIT_HOLDS


def cmd_trees(args, out: Output) -> int:
    trees = [str(t) for t in enumerate_trees(args.n)]
    out.put("n", args.n)
    out.put("count", len(trees))
    out.put("trees", trees, "\n".join(trees))
    return EXIT_HOLDS


def cmd_selftest(args, out: Output) -> int:
    from .selftest import run_all

    seed = int(os.environ.get("OPERAD_SEED", args.seed))
    numbers = [int(x) for x in args.criteria.split(",")] if args.criteria else None
    results = run_all(seed, numbers)
    out.put("seed", seed)
    out.put(
        "criteria",
        [{"number": r.number, "name": r.name, "passed": r.passed, "detail": r.detail, "seconds": round(r.seconds, 3)} for r in results],
        "\n".join(r.line() for r in results),
    )
    ok = all(r.passed for r in results)
    out.put("passed", ok, "all criteria pass" if ok else "some criteria fail")
    return EXIT_HOLDS if ok else EXIT_FAILS


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="operad-calculus",
        description="Exact operad calculus: multiplications, brackets, operators and cohomology.",
        epilog=MATRIX_NOTE,
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print the machine-readable report")
    alg = argparse.ArgumentParser(add_help=False)
    alg.add_argument("--algebra", required=True, help="algebra JSON file")
    alg.add_argument("--flavor", choices=io.FLAVORS, help="override the detected flavor")
    oper = argparse.ArgumentParser(add_help=False)
    oper.add_argument("--operator", help="operator JSON file. " + MATRIX_NOTE)
    oper.add_argument("--weight", help="Rota-Baxter weight p/q")
    kinds = ["nijenhuis", "rota-baxter", "averaging", "preserving"]

    sub = parser.add_subparsers(dest="verb", required=True)
    p = sub.add_parser("check-multiplication", parents=[common, alg], help="is the product a multiplication")
    p.set_defaults(run=cmd_check_multiplication)

    p = sub.add_parser("classify", parents=[common, alg, oper], help="check an operator identity")
    p.add_argument("--kind", required=True, choices=kinds)
    p.set_defaults(run=cmd_classify)

    p = sub.add_parser("bracket", parents=[common, alg], help="bracket two element files")
    p.add_argument("--kind", required=True, choices=["gv", "cup", "fn", "derived"])
    p.add_argument("--f", required=True, help="first element file")
    p.add_argument("--g", required=True, help="second element file")
    p.add_argument("--out", help="write the result to this element file")
    p.set_defaults(run=cmd_bracket)

    p = sub.add_parser("deform", parents=[common, alg, oper], help="structures induced by an operator")
    p.add_argument("--kind", required=True, choices=kinds[:3])
    p.add_argument("--out-dir", help="directory for the emitted files")
    p.set_defaults(run=cmd_deform)

    p = sub.add_parser("tower", parents=[common, alg, oper], help="Nijenhuis tower statements")
    p.add_argument("--kmax", type=int, default=4)
    p.set_defaults(run=cmd_tower)

    p = sub.add_parser("cohomology", parents=[common, alg, oper], help="cohomology dimensions")
    p.add_argument("--complex", required=True, choices=[k.value.replace("_", "-") for k in ComplexKind])
    p.add_argument("--degree-max", type=int, default=None)
    p.add_argument("--pil", help="left action element file (representation complex)")
    p.add_argument("--pir", help="right action element file (representation complex)")
    p.set_defaults(run=cmd_cohomology)

    p = sub.add_parser("trees", parents=[common], help="list planar binary trees")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(run=cmd_trees)

    p = sub.add_parser("selftest", parents=[common], help="run the acceptance criteria")
    p.add_argument("--seed", type=int, default=0, help="random seed (OPERAD_SEED overrides)")
    p.add_argument("--criteria", help="comma-separated criterion numbers (default: all)")
    p.set_defaults(run=cmd_selftest)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = Output(args.json)
    try:
        code = args.run(args, out)
    except (OperadError, OSError, ValueError) as exc:
        message = f"{type(exc).__name__}: {exc}"
        if args.json:
            print(json.dumps({"error": message}, ensure_ascii=False))
        else:
            print(f"error: {message}", file=sys.stderr)
        return EXIT_ERROR
    out.emit()
    return code


if __name__ == "__main__":
    sys.exit(main())

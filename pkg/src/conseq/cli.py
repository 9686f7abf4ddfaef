"""Command-line frontend.

Subcommands: close, check, verify-thm23, influence, chain, canon.  Results
go to stdout, diagnostics to stderr.  Exit codes: 0 on success / all checks
passing, 1 on usage, parse, or validation errors, 2 when a checked property
failed (the counterexample is printed).

`--output records` switches from human lines to a machine-readable stream:
one result per line as space-separated key=value pairs (set values are
comma-separated, pairs of sets are ';'-separated).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .closure import chain_system, close, closed_form_binary, closed_form_ternary
from .errors import ConseqError, PreconditionViolated, UniverseTooLarge
from .fileformat import parse_set, parse_system, render_set, render_system, SystemDocument
from .influence import weight_binary, weight_ternary
from .laws import UNIVERSE_CAP, LawReport, check_axioms, tabulate, verify_closed_form_characterization
from .model import Sort, Symbol


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on usage errors; this tool reserves 2 for failed
    property checks, so usage errors exit 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if value < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return value


def _universe_cap(text: str) -> int:
    value = _positive_int(text)
    if value > UNIVERSE_CAP:
        raise argparse.ArgumentTypeError(f"hard cap is {UNIVERSE_CAP}")
    return value


def _load(path: str) -> SystemDocument:
    return parse_system(Path(path).read_bytes(), source_name=path)


def _emit(args: argparse.Namespace, human: str, **fields) -> None:
    if args.output == "records":
        print(" ".join(f"{k}={v}" for k, v in fields.items()))
    else:
        print(human)


def _braces(members) -> str:
    return "{" + render_set(members) + "}"


def _emit_report(args: argparse.Namespace, report: LawReport) -> int:
    for result in report:
        fields = {
            "law": result.law,
            "status": "pass" if result.passed else "fail",
            "checked": result.checked,
        }
        if result.passed:
            human = f"{result.law}: pass ({result.checked} checks)"
        else:
            witness = " ".join(_braces(w) for w in result.witness)
            fields["witness"] = ";".join(render_set(w) for w in result.witness)
            human = f"{result.law}: FAIL at {witness} ({result.checked} checks)"
        _emit(args, human, **fields)
    return 0 if report.ok else 2


def _cmd_close(args: argparse.Namespace) -> int:
    doc = _load(args.file)
    x = parse_set(args.input, doc.language)
    if args.fastpath:
        ternary = doc.system.ternary_shape
        binary = doc.system.binary_shape
        if ternary:
            result = closed_form_ternary(doc.system, x)
        elif binary:
            result = closed_form_binary(doc.system, x)
        else:
            raise PreconditionViolated(
                f"--fastpath refused: not mixed ternary ({ternary.reason}); "
                f"not mixed binary ({binary.reason})"
            )
    else:
        result = close(doc.system, x)
    _emit(args, render_set(result), result=render_set(result), size=len(result))
    return 0


def _cmd_check(args: argparse.Namespace) -> int:
    doc = _load(args.file)
    universe = doc.language.symbols
    if len(universe) > args.universe_cap:
        raise UniverseTooLarge(
            f"declared universe has {len(universe)} symbols; cap is {args.universe_cap}"
        )
    report = check_axioms(tabulate(doc.system, universe))
    return _emit_report(args, report)


def _cmd_verify(args: argparse.Namespace) -> int:
    doc = _load(args.file)
    return _emit_report(args, verify_closed_form_characterization(doc.system))


def _cmd_influence(args: argparse.Namespace) -> int:
    doc = _load(args.file)
    conclusion = doc.language.resolve(args.conclusion)
    if args.premise is not None:
        premise = doc.language.resolve(args.premise)
        weight = weight_ternary(doc.system, premise, conclusion)
        _emit(
            args,
            f"conclusion {conclusion.name} (premise {premise.name}): multiplicity {weight.multiplicity}",
            conclusion=conclusion.name,
            premise=premise.name,
            multiplicity=weight.multiplicity,
        )
    else:
        weight = weight_binary(doc.system, conclusion)
        _emit(
            args,
            f"conclusion {conclusion.name}: multiplicity {weight.multiplicity}",
            conclusion=conclusion.name,
            multiplicity=weight.multiplicity,
        )
    return 0


def _cmd_chain(args: argparse.Namespace) -> int:
    symbols = [Symbol(f"{args.prefix}{i}", Sort.STANDARD) for i in range(args.length + 1)]
    system = chain_system(symbols)
    if args.emit:
        sys.stdout.write(render_system(system))
    else:
        _emit(
            args,
            f"chain: {len(symbols)} symbols, {len(system)} rules",
            symbols=len(symbols),
            rules=len(system),
        )
    return 0


def _cmd_canon(args: argparse.Namespace) -> int:
    sys.stdout.write(render_system(_load(args.file)))
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="conseq", description="Rule-system consequence operator toolkit")
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    def add(name: str, func, help: str, file: bool = True) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help)
        if file:
            p.add_argument("file", help=".lgs document")
        p.add_argument(
            "--output",
            choices=("lines", "records"),
            default="lines",
            help="human lines (default) or key=value records",
        )
        p.set_defaults(func=func)
        return p

    p = add("close", _cmd_close, "deductive closure of an input set")
    p.add_argument("--input", default="", help='comma-separated symbols, e.g. "a1,l1" ("" = empty set)')
    p.add_argument(
        "--fastpath",
        action="store_true",
        help="use the one-pass closed form; errors unless the system is mixed ternary or mixed binary",
    )

    p = add("check", _cmd_check, "tabulate the operator and check the closure-operator laws")
    p.add_argument(
        "--universe-cap",
        type=_universe_cap,
        default=UNIVERSE_CAP,
        metavar="N",
        help=f"refuse universes larger than N symbols (default and hard cap {UNIVERSE_CAP})",
    )

    add("verify-thm23", _cmd_verify, "check the one-pass closed form characterization, both directions")

    p = add("influence", _cmd_influence, "multiplicity of the rules backing a conclusion")
    p.add_argument("--conclusion", required=True, metavar="NAME")
    p.add_argument("--premise", metavar="NAME", help="anchor premise (ternary systems)")

    p = add("chain", _cmd_chain, "generate a linear chain system", file=False)
    p.add_argument("--length", type=_positive_int, required=True, metavar="N",
                   help="number of rules (N+1 symbols)")
    p.add_argument("--prefix", default="s", help="symbol name prefix (default 's')")
    p.add_argument("--emit", action="store_true", help="print the .lgs document instead of a summary")

    add("canon", _cmd_canon, "re-render a document in canonical form")
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 1
    try:
        return args.func(args)
    except ConseqError as err:
        print(f"error: {err}", file=sys.stderr)
        return 1
    except OSError as err:
        print(f"error: {err}", file=sys.stderr)
        return 1


def entry() -> None:
    sys.exit(main())

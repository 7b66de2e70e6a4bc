"""Command-line front end.

Exit status: 0 on success, 1 when a verification or certificate fails,
2 on a usage error (bad literal, bad option, size guard exceeded).
"""

from __future__ import annotations

import argparse
import json
import sys
from collections.abc import Sequence
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import TextIO

from .comb_core import Composition, as_composition, is_shuffle_of_partition_and_ones
from .errors import CertificateError, QHeckeError
from .filtration import (
    TIEBREAKS,
    FiltrationReport,
    K_alpha,
    K_characterizations,
    Y_module,
    filtration_V,
    filtration_X,
    tau_prime,
    verify_appendix,
)
from .greene import mies_chain, predict_shape
from .hecke import (
    CombModule,
    canonical_quotient,
    characteristic,
    interval_module,
    label_str,
    module_from_json,
    module_to_json,
    module_V,
    module_X,
    to_dot,
)
from .insertion import insert, rsk, rsk_hat
from .permutation import Perm, format_perm, parse_perm
from .qsym import (
    QSym,
    dual_immaculate_F,
    expand_in,
    extended_schur_F,
    f_elem,
    quasischur_F,
    schur_F,
    young_quasischur_F,
)
from .suites import SUITES, SuiteResult
from .tableaux import EMPTY, Filling

ELEMENTS = {
    "f": f_elem,
    "schur": schur_F,
    "qs": quasischur_F,
    "yqs": young_quasischur_F,
    "dualimm": dual_immaculate_F,
    "ext": extended_schur_F,
}


class UsageError(Exception):
    pass


# literals -----------------------------------------------------------------


def parse_composition(token: str) -> Composition:
    try:
        parts = [int(p) for p in token.replace(" ", "").split(",") if p != ""]
        return as_composition(parts)
    except ValueError:
        raise UsageError(f"malformed composition literal {token!r}") from None


def parse_word(token: str) -> Perm:
    try:
        return parse_perm(token)
    except ValueError:
        raise UsageError(f"malformed permutation literal {token!r}") from None


def parse_letters(token: str) -> tuple[int, ...]:
    """A word of distinct positive letters, as digits or comma-separated."""
    text = token.strip()
    parts = text.replace(",", " ").split() if ("," in text or " " in text) else list(text)
    try:
        word = tuple(int(p) for p in parts)
    except ValueError:
        raise UsageError(f"malformed word literal {token!r}") from None
    if not word or min(word) < 1 or len(set(word)) != len(word):
        raise UsageError(f"word {token!r} must have distinct positive letters")
    return word


def _fmt_comp(alpha: Sequence[int]) -> str:
    return "(" + ",".join(map(str, alpha)) + ")"


def _dump(data: object) -> str:
    return json.dumps(data, indent=2) + "\n"


def _read_json(source: str, stdin: TextIO) -> object | None:
    text = stdin.read() if source == "-" else Path(source).read_text()
    if not text.strip():
        return None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"malformed JSON in {source!r}: {exc}") from None


def _emit_json(data: object, target: str, out: TextIO) -> None:
    if target == "-":
        out.write(_dump(data))
    else:
        Path(target).write_text(_dump(data))


# JSON payloads and their readers --------------------------------------------


def insertion_to_json(trace) -> dict:
    return {
        "result": trace.result.to_json(),
        "insertion_sequence": [list(c) for c in trace.insertion_sequence],
        "new_cell": list(trace.new_cell),
    }


def tableau_from_json(data: object) -> Filling:
    """Accepts a filling, or an insertion report whose ``result`` is one."""
    if data is None:
        return EMPTY
    if not isinstance(data, dict):
        raise UsageError("tableau JSON must be an object with a 'rows' field")
    if "result" in data:
        data = data["result"]
    return Filling.from_json(data)  # type: ignore[arg-type]


def rsk_to_json(word: Perm) -> dict:
    p, q = rsk_hat(word)
    return {"word": list(word), "P": p.to_json(), "Q": q.to_json()}


def rsk_from_json(data: dict) -> tuple[Perm, Filling, Filling]:
    return tuple(data["word"]), Filling.from_json(data["P"]), Filling.from_json(data["Q"])


def expansion_to_json(x: QSym, basis: str, coeffs: dict[Composition, int]) -> dict:
    return {
        "basis": basis,
        "degree": x.degree,
        "coeffs": {".".join(map(str, a)): c for a, c in sorted(coeffs.items())},
    }


def expansion_from_json(data: dict) -> tuple[str, QSym]:
    """Basis name and the coefficients, packaged as a formal combination."""
    return str(data.get("basis", "F")).upper(), QSym.from_json(data)


# verbs ----------------------------------------------------------------------


def cmd_insert(args, out, stdin) -> int:
    t = tableau_from_json(_read_json(args.tableau, stdin))
    trace = insert(t, args.letter)
    if args.json is not None:
        _emit_json(insertion_to_json(trace), args.json, out)
        return 0
    out.write(trace.result.pretty() + "\n")
    if args.trace:
        seq = " ".join(f"({r},{c})" for r, c in trace.insertion_sequence)
        out.write(f"insertion sequence: {seq}\n")
        out.write(f"new cell: ({trace.new_cell[0]},{trace.new_cell[1]})\n")
    return 0


def cmd_rsk_hat(args, out, stdin) -> int:
    word = parse_word(args.word)
    if args.json is not None:
        _emit_json(rsk_to_json(word), args.json, out)
        return 0
    p, q = rsk_hat(word)
    out.write(f"P-hat  shape {_fmt_comp(p.shape)}\n{p.pretty()}\n\n")
    out.write(f"Q-hat  shape {_fmt_comp(q.shape)}\n{q.pretty()}\n")
    return 0


def cmd_shape(args, out, stdin) -> int:
    word = parse_letters(args.word)
    lam = rsk(word)[0].shape
    chain = mies_chain(word)[1:]
    predicted = predict_shape(word)
    if args.json is not None:
        data = {
            "word": list(word),
            "lambda": list(lam),
            "mies": [sorted(s) for s in chain],
            "predicted": list(predicted),
        }
        if args.oracle:
            data["insertion"] = list(rsk_hat(word)[0].shape)
        _emit_json(data, args.json, out)
    else:
        out.write(f"lambda\t{_fmt_comp(lam)}\n")
        for k, s in enumerate(chain, 1):
            out.write(f"mIES_{k}\t{{{','.join(map(str, sorted(s)))}}}\n")
        out.write(f"predicted\t{_fmt_comp(predicted)}\n")
    if args.oracle:
        actual = rsk_hat(word)[0].shape
        if args.json is None:
            out.write(f"insertion\t{_fmt_comp(actual)}\n")
        if actual != predicted:
            out.write(f"MISMATCH predicted {_fmt_comp(predicted)} != {_fmt_comp(actual)}\n")
            return 1
    return 0


def _parse_elem(token: str, stdin) -> QSym:
    if token.startswith("json:"):
        data = _read_json(token[5:], stdin)
        if not isinstance(data, dict):
            raise UsageError(f"no expansion found in {token!r}")
        basis, x = expansion_from_json(data)
        if basis != "F":
            raise UsageError(f"{token!r} holds a {basis} expansion; expected F")
        return x
    kind, sep, rest = token.partition(":")
    if not sep or kind.lower() not in ELEMENTS:
        raise UsageError(
            f"malformed element {token!r}; expected KIND:alpha with KIND in {sorted(ELEMENTS)}"
        )
    return ELEMENTS[kind.lower()](parse_composition(rest))


def cmd_expand(args, out, stdin) -> int:
    x = _parse_elem(args.elem, stdin)
    basis = args.basis.upper()
    coeffs = x.coeffs if basis == "F" else expand_in(x, basis)
    if args.json is not None:
        _emit_json(expansion_to_json(x, basis, coeffs), args.json, out)
        return 0
    for a, c in sorted(coeffs.items()):
        out.write(f"{c}\t{basis}{_fmt_comp(a)}\n")
    return 0


def _build_module(args) -> CombModule:
    kind = args.kind
    if kind == "interval":
        if not (args.lo and args.hi):
            raise UsageError("--kind interval needs --lo and --hi")
        return interval_module(parse_word(args.lo), parse_word(args.hi))
    if not args.alpha:
        raise UsageError(f"--kind {kind} needs --alpha")
    alpha = parse_composition(args.alpha)
    return {"V": module_V, "X": module_X, "Y": Y_module, "quotient": canonical_quotient}[kind](
        alpha
    )


def _write_module_table(m: CombModule, out: TextIO) -> None:
    out.write("element\t" + "\t".join(f"pi{i}" for i in range(1, m.n)) + "\n")
    for b in m.basis:
        cells = []
        for i in range(1, m.n):
            o = m.outcome(i, b)
            cells.append(o if isinstance(o, str) else label_str(o[1]))
        out.write(label_str(b) + "\t" + "\t".join(cells) + "\n")
    out.write(f"dim\t{m.dim()}\n")
    out.write(f"ch\t{characteristic(m)!r}\n")


def _render(m: CombModule, path: str, groups=None, names=None, title=None) -> None:
    from .plotting import render_action_graph

    render_action_graph(m, path, groups, names, title)


def cmd_module(args, out, stdin) -> int:
    if args.from_json:
        data = _read_json(args.from_json, stdin)
        if not isinstance(data, dict):
            raise UsageError(f"no module found in {args.from_json!r}")
        m = module_from_json(data)
    else:
        if not args.kind:
            raise UsageError("module needs --kind or --from-json")
        m = _build_module(args)
    if args.dot:
        Path(args.dot).write_text(to_dot(m))
    if args.png:
        _render(m, args.png, title=f"{m.name or 'module'} action graph")
    if args.json is not None:
        _emit_json(module_to_json(m), args.json, out)
        if args.json == "-":
            return 0
    _write_module_table(m, out)
    return 0


def _write_report(report: FiltrationReport, out: TextIO) -> None:
    lo, hi = format_perm(report.lo), format_perm(report.hi)
    out.write(f"interval\t[{lo}, {hi}]\n")
    out.write("k\tgamma\trecording\tmembers\n")
    for k, s in enumerate(report.strata, 1):
        members = " ".join(format_perm(x) for x in s.members)
        out.write(f"{k}\t{_fmt_comp(s.gamma)}\t{s.recording}\t{members}\n")
    for name, ok in report.checks.items():
        out.write(f"check\t{name}\t{'PASS' if ok else 'FAIL'}\n")


def cmd_filtrate(args, out, stdin) -> int:
    if args.from_json:
        data = _read_json(args.from_json, stdin)
        if not isinstance(data, dict):
            raise UsageError(f"no report found in {args.from_json!r}")
        report = FiltrationReport.from_json(data)
    else:
        alpha = parse_composition(args.alpha)
        if args.module == "V":
            report = filtration_V(alpha, args.tiebreak)
        else:
            report = filtration_X(alpha)
    m = interval_module(report.lo, report.hi)
    groups = [s.members for s in report.strata]
    if args.dot:
        Path(args.dot).write_text(to_dot(m, groups))
    if args.png:
        names = [f"{k}: {_fmt_comp(s.gamma)}" for k, s in enumerate(report.strata, 1)]
        _render(m, args.png, groups, names, "filtration strata")
    if args.json is not None:
        _emit_json(report.to_json(), args.json, out)
        if args.json == "-":
            return 0 if all(report.checks.values()) else 1
    _write_report(report, out)
    return 0 if all(report.checks.values()) else 1


def cmd_kalpha(args, out, stdin) -> int:
    alpha = parse_composition(args.alpha)
    k = sorted(K_alpha(alpha))
    data: dict[str, object] = {"alpha": list(alpha), "members": [format_perm(s) for s in k]}
    shuffle = is_shuffle_of_partition_and_ones(alpha)
    if shuffle:
        data["tau_prime"] = tau_prime(alpha).to_json()
        data["characterizations"] = K_characterizations(alpha)
    if args.dot or args.png:
        y = Y_module(alpha)
        if args.dot:
            Path(args.dot).write_text(to_dot(y))
        if args.png:
            _render(y, args.png, title=f"Y{_fmt_comp(alpha)}")
    if args.json is not None:
        _emit_json(data, args.json, out)
        return 0
    out.write(f"K{_fmt_comp(alpha)}\t{len(k)} elements\n")
    for s in k:
        out.write(format_perm(s) + "\n")
    if shuffle:
        out.write(f"tau'\t{tau_prime(alpha)}\n")
        out.write(f"characterizations\t{'PASS' if data['characterizations'] else 'FAIL'}\n")
    return 0


def cmd_verify_appendix(args, out, stdin) -> int:
    facts = verify_appendix()
    if args.json is not None:
        _emit_json([{"name": f.name, "ok": f.ok, "detail": f.detail} for f in facts], args.json, out)
    else:
        for f in facts:
            out.write(f"{'PASS' if f.ok else 'FAIL'}\t{f.name}\t{f.detail}\n")
    return 0 if all(f.ok for f in facts) else 1


def _run_suite(name_n: tuple[str, int]) -> SuiteResult:
    name, n = name_n
    return SUITES[name](n)


def cmd_sweep(args, out, stdin) -> int:
    names = args.suite or list(SUITES)
    for name in names:
        if name not in SUITES:
            raise UsageError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    jobs = [(name, args.n) for name in names]
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            results = list(pool.map(_run_suite, jobs))
    else:
        results = [_run_suite(j) for j in jobs]
    header = "suite\tn\tcases\tstatus" + ("\tseconds" if args.timing else "")
    out.write(header + "\n")
    for r in results:
        line = f"{r.name}\t{r.n}\t{r.cases}\t{'PASS' if r.ok else 'FAIL'}"
        if args.timing:
            line += f"\t{r.seconds:.2f}"
        out.write(line + "\n")
        for f in r.failures[:5]:
            out.write(f"  failure\t{f}\n")
    return 0 if all(r.ok for r in results) else 1


# parser ---------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # type: ignore[override]
        raise UsageError(message)


def _json_flag(p: argparse.ArgumentParser, help_text: str = "emit JSON (to PATH, or stdout)"):
    p.add_argument("--json", nargs="?", const="-", default=None, metavar="PATH", help=help_text)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="qhecke", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    p = sub.add_parser("insert", help="insert a letter into a Young composition tableau")
    p.add_argument("--tableau", required=True, help="tableau JSON file, or '-' for stdin")
    p.add_argument("--letter", required=True, type=int)
    p.add_argument("--trace", action="store_true", help="print the insertion sequence")
    _json_flag(p)
    p.set_defaults(func=cmd_insert)

    p = sub.add_parser("rsk-hat", help="insertion and recording tableaux of a permutation")
    p.add_argument("--word", required=True)
    _json_flag(p)
    p.set_defaults(func=cmd_rsk_hat)

    p = sub.add_parser("shape", help="predict the insertion shape from increasing subsequences")
    p.add_argument("--word", required=True)
    p.add_argument("--oracle", action="store_true", help="compare with insertion")
    _json_flag(p)
    p.set_defaults(func=cmd_shape)

    p = sub.add_parser("expand", help="expand a quasisymmetric function in a basis")
    p.add_argument("--elem", required=True, help="KIND:alpha or json:PATH")
    p.add_argument("--basis", default="yqs", choices=["f", "qs", "yqs"], type=str.lower)
    _json_flag(p)
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("module", help="build a 0-Hecke module and export it")
    p.add_argument("--kind", choices=["V", "X", "Y", "interval", "quotient"])
    p.add_argument("--alpha")
    p.add_argument("--lo")
    p.add_argument("--hi")
    p.add_argument("--from-json", metavar="PATH")
    p.add_argument("--dot", metavar="PATH")
    p.add_argument("--png", metavar="PATH")
    _json_flag(p)
    p.set_defaults(func=cmd_module)

    p = sub.add_parser("filtrate", help="distinguished filtration report")
    p.add_argument("--module", choices=["V", "X"], default="V")
    p.add_argument("--alpha")
    p.add_argument("--tiebreak", choices=TIEBREAKS, default="lex")
    p.add_argument("--from-json", metavar="PATH")
    p.add_argument("--dot", metavar="PATH")
    p.add_argument("--png", metavar="PATH")
    _json_flag(p)
    p.set_defaults(func=cmd_filtrate)

    p = sub.add_parser("kalpha", help="the set K_alpha and its module")
    p.add_argument("--alpha", required=True)
    p.add_argument("--dot", metavar="PATH")
    p.add_argument("--png", metavar="PATH")
    _json_flag(p)
    p.set_defaults(func=cmd_kalpha)

    p = sub.add_parser("verify-appendix", help="finite certificate for shape (5,2,1)")
    _json_flag(p)
    p.set_defaults(func=cmd_verify_appendix)

    p = sub.add_parser("sweep", help="run the exhaustive property suites")
    p.add_argument("--n", type=int, default=6)
    p.add_argument("--suite", action="append", help="restrict to a suite (repeatable)")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--timing", action="store_true", help="add a seconds column")
    p.set_defaults(func=cmd_sweep)
    return parser


def run(argv: Sequence[str] | None = None, out: TextIO | None = None,
        stdin: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out or sys.stdout
    stdin = stdin or sys.stdin
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        if args.verb == "filtrate" and not (args.alpha or args.from_json):
            raise UsageError("filtrate needs --alpha or --from-json")
        return args.func(args, out, stdin)
    except UsageError as exc:
        err.write(f"qhecke: usage error: {exc}\n")
        return 2
    except CertificateError as exc:
        err.write(f"qhecke: verification failed: {exc}\n")
        return 1
    except (QHeckeError, OSError) as exc:
        err.write(f"qhecke: error: {exc}\n")
        return 2


def main() -> None:
    sys.exit(run())

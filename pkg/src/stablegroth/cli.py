"""
Command-line front end.  Every verb parses its flags, calls into the library
and prints the result as JSON (default) or as aligned text.

Exit status: 0 on success, 1 on a domain error or a failed verification,
2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from . import expansion, insertion, quiver
from .hecke import Permutation, partition, reduce_word
from .tableaux import format_setvalued, format_tableau, is_decreasing, is_increasing, tableau
from .verify import SUITES, verify


class DomainError(Exception):
    pass


# -- parsing helpers -----------------------------------------------------------------

def _ints(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        if text.startswith("["):
            return tuple(int(v) for v in json.loads(text))
        if "," in text:
            return tuple(int(v) for v in text.split(","))
        return tuple(int(ch) for ch in text)
    except (ValueError, TypeError):
        raise argparse.ArgumentTypeError(f"expected a list of integers, got {text!r}") from None


def _tableau_arg(text: str):
    try:
        rows = json.loads(text)
        return tableau(rows)
    except (ValueError, TypeError):
        raise argparse.ArgumentTypeError(f"expected a JSON list of rows, got {text!r}") from None


def _permutation(args) -> Permutation:
    if args.word is not None:
        return reduce_word(args.word)
    if args.perm is not None:
        return Permutation(args.perm)
    raise DomainError("give a permutation with --perm or a word with --word")


def _add_perm_flags(p: argparse.ArgumentParser):
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--perm", type=_ints, help="one-line notation, e.g. 3,1,5,2,4")
    group.add_argument("--word", type=_ints, help="a word, reduced in the 0-Hecke monoid")


# -- output ----------------------------------------------------------------------------

def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _shape_text(key) -> str:
    if any(isinstance(p, tuple) for p in key):
        return " (x) ".join("G[" + ",".join(map(str, p)) + "]" for p in key)
    return "G[" + ",".join(map(str, key)) + "]"


def _expansion_text(exp: expansion.Expansion) -> str:
    lines = [f"{c:+d} {_shape_text(k)}" for k, c in exp.sorted_items()]
    if not exp.complete:
        lines.append("(truncated)")
    return "\n".join(lines) if lines else "0"


def _tableaux_text(ts) -> str:
    return "\n\n".join(format_tableau(t) for t in ts) if ts else "(none)"


# -- verbs --------------------------------------------------------------------------------

def cmd_expand(args):
    p = _permutation(args)
    if args.tableaux:
        if args.decreasing:
            ts = expansion.decreasing_tableaux_for(p, max_boxes=args.max_degree)
        else:
            ts = expansion.increasing_tableaux_for(p.inverse(), max_boxes=args.max_degree)
        if args.format == "text":
            return _tableaux_text(ts)
        return [[list(row) for row in t] for t in ts]
    fn = (expansion.stable_coefficients_decreasing if args.decreasing
          else expansion.stable_coefficients)
    exp = fn(p, args.max_degree)
    if args.format == "text":
        return _expansion_text(exp)
    if args.max_degree is not None:
        return {"terms": exp.to_json(), "complete": exp.complete}
    return exp.to_json()


def cmd_insert(args):
    if args.a is not None or args.i is not None:
        if args.a is None or args.i is None:
            raise DomainError("--a and --i must be given together")
        pair = insertion.CompatiblePair(args.a, args.i)
        rec = insertion.insert_compatible_pair(pair, trace=args.trace)
        if args.format == "text":
            parts = [format_tableau(rec.t), format_setvalued(rec.u)]
            for step in rec.trace:
                parts.append(f"insert {step['letter']} (index {step['index']}): "
                             f"corner {step['corner']}, alpha {step['alpha']}\n"
                             f"{format_tableau(step['T'])}\n{format_setvalued(step['U'])}")
            return "\n\n".join(parts)
        out = {"T": [list(r) for r in rec.t], "U": rec.u.to_json()["cells"]}
        if args.trace:
            out["trace"] = [{"letter": s["letter"], "index": s["index"], "alpha": s["alpha"],
                             "corner": list(s["corner"]), "T": [list(r) for r in s["T"]],
                             "U": s["U"].to_json()["cells"]} for s in rec.trace]
        return out

    y = args.tableau
    if y and not is_increasing(y):
        raise DomainError("the tableau is not increasing")
    if args.reverse:
        if args.corner is None or args.alpha is None:
            raise DomainError("--reverse needs --corner and --alpha")
        z, x = insertion.reverse_hecke_insert((y, tuple(args.corner), args.alpha))
        if args.format == "text":
            return f"{format_tableau(z)}\nletter {x}"
        return {"tableau": [list(r) for r in z], "letter": x}
    if args.x is None:
        raise DomainError("give the letter to insert with --x")
    steps: list = []
    result = insertion.hecke_insert(args.x, y, steps)
    if args.format == "text":
        text = f"{format_tableau(result.tableau)}\ncorner {list(result.corner)}, alpha {result.alpha}"
        if args.trace:
            text += "\n" + "\n".join(_step_text(s) for s in steps)
        return text
    out = {"tableau": [list(r) for r in result.tableau], "corner": list(result.corner),
           "alpha": result.alpha}
    if args.trace:
        out["trace"] = steps
    return out


def _step_text(step: dict) -> str:
    where = f"column {step['column']}: {step['value']}"
    if step["action"] == "adjoin":
        return f"{where} is adjoined as a new box"
    if step["action"] == "absorb":
        return f"{where} is absorbed; no new box"
    verb = "replaces" if step["action"] == "replace" else "cannot replace"
    return f"{where} {verb} {step['bumped']}, which moves right"


def cmd_product(args):
    ts = args.tableaux
    check = is_decreasing if args.decreasing else is_increasing
    for t in ts:
        if t and not check(t):
            raise DomainError(f"{[list(r) for r in t]} is not "
                              f"{'decreasing' if args.decreasing else 'increasing'}")
    result = insertion.product_chain(ts, decreasing=args.decreasing)
    if args.format == "text":
        return format_tableau(result)
    return [list(r) for r in result]


def cmd_monomials(args):
    if args.shape is not None:
        if args.perm is not None or args.word is not None:
            raise DomainError("give either --shape or a permutation, not both")
        poly = expansion.monomials_setvalued(partition(args.shape), args.vars or 3,
                                             args.max_degree or 6, partition(args.inner or ()))
    elif args.method == "recursion":
        p = _permutation(args)
        n = args.n if args.n is not None else p.size
        poly = expansion.grothendieck_recursion(p, n)
        if args.vars is not None:
            poly = poly.restrict(args.vars)
        if args.max_degree is not None:
            poly = poly.truncate(args.max_degree)
    else:
        poly = expansion.monomials_compatible(_permutation(args), args.vars or 3,
                                              args.max_degree or 6)
    if args.format == "text":
        return poly.format()
    return poly.to_json()


def cmd_lr(args):
    exp = expansion.skew_lr_coefficients(args.outer, args.inner, args.max_degree)
    if args.format == "text":
        return _expansion_text(exp)
    return exp.to_json()


def _load_ranks(args) -> quiver.RankConditions:
    if args.example:
        return quiver.example_rank_conditions()
    if args.ranks is None:
        raise DomainError("give --ranks FILE or --example")
    try:
        data = json.loads(Path(args.ranks).read_text(encoding="utf-8"))
    except OSError as exc:
        raise DomainError(f"cannot read {args.ranks}: {exc}") from None
    return quiver.RankConditions.from_json(data)


def cmd_quiver(args):
    rc = _load_ranks(args)
    what = args.output
    text = args.format == "text"
    if what == "codim":
        return str(quiver.expected_codim(rc)) if text else quiver.expected_codim(rc)
    if what == "zelevinsky":
        z = quiver.zelevinsky(rc)
        return str(list(z.oneline)) if text else list(z.oneline)
    if what == "diagram":
        cells = {f"{i},{j}": quiver.build_u_tableau(rc, i, j)
                 for i in range(rc.n) for j in range(i + 1, rc.n + 1)}
        if text:
            return "\n\n".join(f"U[{k}]\n{format_tableau(t)}" for k, t in cells.items())
        return {k: [list(r) for r in t] for k, t in cells.items()}
    if what == "kms":
        fs = quiver.kms_factorizations(rc)
        if text:
            return "\n".join(" ".join(str(p) for p in f) for f in fs)
        return [[list(p.oneline) for p in f] for f in fs]
    if what == "sequences":
        seqs = quiver.factor_sequences(rc)
        if text:
            return "\n\n".join(" | ".join(format_tableau(t).replace("\n", " / ") for t in s)
                               for s in seqs)
        return [[[list(r) for r in t] for t in s] for s in seqs]
    if what == "coefficients":
        exp = quiver.quiver_coefficients(rc)
        return _expansion_text(exp) if text else exp.to_json()
    if what == "quivstab":
        report = quiver.verify_quivstab(rc, full=args.full)
        if text:
            lines = [f"{'ok ' if t['match'] else 'BAD'} mu={t['mu']} lambda={t['lambda']} "
                     f"quiver={t['quiver']} stable={t['stable']}" for t in report["terms"]]
            lines.append(f"ok: {report['ok']}")
            return "\n".join(lines)
        return report
    raise DomainError(f"unknown quiver output {what!r}")


def cmd_universal(args):
    p = _permutation(args)
    exp = expansion.universal_coefficients(p, args.n, args.max_degree)
    if args.format == "text":
        return _expansion_text(exp)
    return exp.to_json()


def cmd_verify(args):
    report = verify(args.suite, args.size, args.seed)
    if args.format == "text":
        lines = [f"{'PASS' if c.ok else 'FAIL'} {c.name} ({c.cases} cases)"
                 + ("" if c.ok else f": {_dump(c.counterexample)}") for c in report.checks]
        return "\n".join(lines), report.ok
    return report.to_json(), report.ok


# -- parser ---------------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stablegroth",
        description="Stable Grothendieck polynomials, Hecke insertion and quiver coefficients.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json",
                        help="output format (default: json)")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("expand", parents=[common],
                       help="coefficients of G_pi in the basis G_lambda")
    _add_perm_flags(p)
    p.add_argument("--max-degree", type=int)
    p.add_argument("--decreasing", action="store_true", help="count decreasing tableaux")
    p.add_argument("--tableaux", action="store_true", help="list the tableaux instead")
    p.set_defaults(run=cmd_expand)

    p = sub.add_parser("insert", parents=[common], help="Hecke insertion and its reverse")
    p.add_argument("--x", type=int, help="letter to insert")
    p.add_argument("--tableau", type=_tableau_arg, default=(), help="increasing tableau as JSON")
    p.add_argument("--reverse", action="store_true")
    p.add_argument("--corner", type=_ints, help="row,column (1-based) for --reverse")
    p.add_argument("--alpha", type=int, choices=(0, 1))
    p.add_argument("--a", type=_ints, help="letters of a compatible pair")
    p.add_argument("--i", type=_ints, help="indices of a compatible pair")
    p.add_argument("--trace", action="store_true")
    p.set_defaults(run=cmd_insert)

    p = sub.add_parser("product", parents=[common],
                       help="product T1 . (T2 . (... Tk)) of tableaux")
    p.add_argument("tableaux", nargs="+", type=_tableau_arg)
    p.add_argument("--decreasing", action="store_true")
    p.set_defaults(run=cmd_product)

    p = sub.add_parser("monomials", parents=[common], help="truncated monomial expansions")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--perm", type=_ints)
    group.add_argument("--word", type=_ints)
    group.add_argument("--shape", type=_ints, help="set-valued tableaux of this shape")
    p.add_argument("--inner", type=_ints, help="inner shape for a skew shape")
    p.add_argument("--vars", type=int, help="number of variables (default 3; recursion: all)")
    p.add_argument("--max-degree", type=int,
                   help="degree bound (default 6; recursion: no bound)")
    p.add_argument("--method", choices=("compatible", "recursion"), default="compatible")
    p.add_argument("--n", type=int, help="symmetric group for --method recursion")
    p.set_defaults(run=cmd_monomials)

    p = sub.add_parser("lr", parents=[common], help="expansion of a skew G_{outer/inner}")
    p.add_argument("--outer", type=_ints, required=True)
    p.add_argument("--inner", type=_ints, default=())
    p.add_argument("--max-degree", type=int, required=True)
    p.set_defaults(run=cmd_lr)

    p = sub.add_parser("quiver", parents=[common],
                       help="quiver coefficients from rank conditions")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--ranks", help='JSON file like {"n":3,"rows":[[1,1,1,0],[4,2,1],[3,2],[3]]}')
    src.add_argument("--example", action="store_true", help="built-in example with ranks 1,4,3,3")
    p.add_argument("--output", default="coefficients",
                   choices=("codim", "diagram", "zelevinsky", "kms", "sequences",
                            "coefficients", "quivstab"))
    p.add_argument("--full", action="store_true",
                   help="quivstab: also compare the whole expansion of G_z(r)")
    p.set_defaults(run=cmd_quiver)

    p = sub.add_parser("universal", parents=[common], help="universal Grothendieck coefficients")
    _add_perm_flags(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--max-degree", type=int, required=True)
    p.set_defaults(run=cmd_universal)

    p = sub.add_parser("verify", parents=[common], help="run a self-check suite")
    p.add_argument("--suite", choices=SUITES, default="all")
    p.add_argument("--size", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(run=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # usage errors and --help
        return exc.code if isinstance(exc.code, int) else 2
    try:
        result = args.run(args)
    except (DomainError, ValueError, IndexError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    ok = True
    if args.verb == "verify":
        result, ok = result
    print(result if isinstance(result, str) else _dump(result))
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())

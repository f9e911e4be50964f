"""Command-line surface.

Exit codes: 0 on success, 1 on usage or parse errors, 2 when an operation
is invoked outside its domain (for example Gaussian parity of a word whose
closure is not a single circle).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import scenarios
from .bracket import bracket, brackets_equal, verify_reproduction
from .moves import MoveSet, format_history, scramble
from .normalform import canonical_code, f_equal, irreducible_form, strongly_equal
from .oracle import oracle_equal
from .parity import chord_diagram, parse_scheme
from .render import RenderFormat, render
from .words import (
    BraidWord,
    JSON,
    ParseError,
    PreconditionError,
    closure_components,
    parse_word,
    permutation,
    serialize,
)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.exit(1, f"{self.prog}: error: {message}\n")


def _load_word(source: str) -> BraidWord:
    if source == "-":
        return parse_word(sys.stdin.read())
    if source.startswith("@"):
        try:
            with open(source[1:], "r", encoding="utf-8") as fh:
                return parse_word(fh.read())
        except OSError as e:
            raise ParseError(f"cannot read word file {source[1:]!r}: {e}") from e
    return parse_word(source)


def _emit(args, human: str, payload: dict) -> None:
    print(json.dumps(payload) if args.json else human)


def _cmd_parse(args) -> int:
    word = _load_word(args.word)
    if args.json:
        print(serialize(word, JSON))
    else:
        print(serialize(word))
    return 0


def _cmd_perm(args) -> int:
    word = _load_word(args.word)
    p = permutation(word)
    human = " ".join(f"{k}->{p(k)}" for k in range(1, word.n + 1))
    _emit(args, human, {"n": word.n, "image": list(p.image)})
    return 0


def _cmd_closure(args) -> int:
    word = _load_word(args.word)
    count, cycles = closure_components(word)
    lines = [f"components: {count}"]
    lines += ["cycle: " + " ".join(map(str, c)) for c in cycles]
    _emit(args, "\n".join(lines), {"components": count, "cycles": [list(c) for c in cycles]})
    return 0


def _cmd_chords(args) -> int:
    word = _load_word(args.word)
    d = chord_diagram(word)
    lines = [f"crossings: {len(d.chord_of)}",
             "gauss: " + " ".join(map(str, d.gauss_sequence))]
    lines += [f"chord {c}: endpoints {a},{b}" for c, (a, b) in sorted(d.chord_of.items())]
    _emit(args, "\n".join(lines), {
        "crossings": len(d.chord_of),
        "gauss": list(d.gauss_sequence),
        "chords": [[c, a, b] for c, (a, b) in sorted(d.chord_of.items())],
    })
    return 0


def _cmd_parity(args) -> int:
    word = _load_word(args.word)
    scheme = parse_scheme(args.parity, word.n)
    assignment = scheme.assignment(word)
    lines = [f"pos={t} letter=z{abs(word.letters[t])} parity={assignment.parity_of(t).value}"
             for t in assignment.positions]
    _emit(args, "\n".join(lines) if lines else "no classical letters", {
        "scheme": assignment.scheme,
        "parities": [{"position": t, "index": abs(word.letters[t]),
                      "parity": assignment.parity_of(t).value}
                     for t in assignment.positions],
    })
    return 0


def _cmd_bracket(args) -> int:
    word = _load_word(args.word)
    scheme = parse_scheme(args.parity, word.n)
    result = bracket(word, scheme)
    _emit(args, serialize(result.word), {
        "word": serialize(result.word),
        "kept_positions": list(result.kept_positions),
    })
    return 0


def _cmd_reduce(args) -> int:
    word = _load_word(args.word)
    _emit(args, serialize(irreducible_form(word)),
          {"word": serialize(irreducible_form(word))})
    return 0


def _cmd_canon(args) -> int:
    word = _load_word(args.word)
    code = canonical_code(word)
    _emit(args, code.format(), {
        "n": code.n, "perm": list(code.permutation), "m": code.crossing_count,
        "strands": [list(s) for s in code.strand_sequences],
    })
    return 0


def _cmd_eq(args, decide) -> int:
    w1, w2 = _load_word(args.word1), _load_word(args.word2)
    equal = decide(w1, w2)
    _emit(args, "equal" if equal else "not equal", {"equal": equal})
    return 0


def _cmd_distinguish(args) -> int:
    w1, w2 = _load_word(args.word1), _load_word(args.word2)
    scheme = parse_scheme(args.parity, w1.n)
    b1 = bracket(w1, scheme)
    b2 = bracket(w2, scheme)
    c1 = canonical_code(irreducible_form(b1.word))
    c2 = canonical_code(irreducible_form(b2.word))
    differ = not brackets_equal(w1, w2, scheme)
    verdict = ("not equivalent (certified by parity bracket)" if differ else "inconclusive")
    human = "\n".join(["bracket 1:", c1.format(), "bracket 2:", c2.format(), verdict])
    _emit(args, human, {
        "bracket1": c1.format(), "bracket2": c2.format(),
        "distinct": differ, "verdict": verdict,
    })
    return 0


def _cmd_scramble(args) -> int:
    word = _load_word(args.word)
    max_length = args.max_length if args.max_length is not None else max(len(word.letters) * 2, len(word.letters) + 20)
    result, history = scramble(word, args.steps, MoveSet(args.moveset), args.seed, max_length)
    if args.json:
        print(json.dumps({
            "word": serialize(result),
            "history": format_history(history).splitlines(),
        }))
    else:
        print(serialize(result))
        if args.history and history:
            print(format_history(history))
    return 0


def _cmd_oracle(args) -> int:
    w1, w2 = _load_word(args.word1), _load_word(args.word2)
    bound = args.bound if args.bound is not None else max(len(w1.letters), len(w2.letters)) + 4
    verdict = oracle_equal(w1, w2, MoveSet(args.moveset), bound, args.node_cap)
    _emit(args, verdict.value, {"verdict": verdict.value})
    return 0


def _cmd_verify(args) -> int:
    beta, beta_prime = _load_word(args.word1), _load_word(args.word2)
    scheme = parse_scheme(args.parity, beta.n)
    report = verify_reproduction(beta, beta_prime, scheme)
    if args.json:
        print(report.to_json())
    else:
        if report.success:
            print("reproduced: witness positions " + " ".join(map(str, report.witness_positions)))
        else:
            print(f"not reproduced: {report.reason}")
    return 0


def _cmd_render(args) -> int:
    word = _load_word(args.word)
    print(render(word, RenderFormat(args.format)))
    return 0


def _cmd_scenario(args) -> int:
    if args.which == "brunnian":
        report = scenarios.scenario_brunnian(seed=args.seed, steps=args.steps,
                                             max_length=args.max_length)
        print(report.to_json() if args.json else report.format_text())
        return 0
    word = _load_word(args.word) if args.word is not None else None
    added = None
    if args.added is not None:
        try:
            a, b = (int(tok) for tok in args.added.split(","))
        except ValueError:
            raise ParseError(f"--added expects two comma-separated positions, got {args.added!r}") from None
        added = (a, b)
    report = scenarios.scenario_beta_prime(word, added)
    print(report.to_json() if args.json else report.format_text())
    return 0


def _add_word_arg(p, name="word", help="braid word (inline, @file, or - for stdin)"):
    p.add_argument(name, help=help)


def _add_json_flag(p):
    p.add_argument("--json", action="store_true", help="machine-readable output")


def build_parser() -> _Parser:
    parser = _Parser(prog="freebraid",
                     description="Free braid words: moves, parities, brackets, deciders.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help):
        p = sub.add_parser(name, help=help)
        p.set_defaults(func=func)
        _add_json_flag(p)
        return p

    p = add("parse", _cmd_parse, "parse and echo a word")
    _add_word_arg(p)

    p = add("perm", _cmd_perm, "endpoint permutation")
    _add_word_arg(p)

    p = add("closure", _cmd_closure, "closure component count and cycles")
    _add_word_arg(p)

    p = add("chords", _cmd_chords, "chord diagram of the closure")
    _add_word_arg(p)

    p = add("parity", _cmd_parity, "per-crossing parities under a scheme")
    p.add_argument("--parity", required=True, metavar="SCHEME",
                   help="gaussian | component:N1=<list> | qgaussian:Q=<image>")
    _add_word_arg(p)

    p = add("bracket", _cmd_bracket, "one-term parity bracket")
    p.add_argument("--parity", required=True, metavar="SCHEME")
    _add_word_arg(p)

    p = add("reduce", _cmd_reduce, "bigon-irreducible form")
    _add_word_arg(p)

    p = add("canon", _cmd_canon, "canonical code (decides strong equality)")
    _add_word_arg(p)

    p = add("eq-f", lambda a: _cmd_eq(a, f_equal), "word equality under all moves but the triple slide")
    _add_word_arg(p, "word1")
    _add_word_arg(p, "word2")

    p = add("eq-strong", lambda a: _cmd_eq(a, strongly_equal), "strong equality (no pair cancellation)")
    _add_word_arg(p, "word1")
    _add_word_arg(p, "word2")

    p = add("distinguish", _cmd_distinguish, "certify non-equivalence via the parity bracket")
    p.add_argument("--parity", required=True, metavar="SCHEME")
    _add_word_arg(p, "word1")
    _add_word_arg(p, "word2")

    p = add("verify", _cmd_verify, "locate an odd irreducible word inside a candidate")
    p.add_argument("--parity", required=True, metavar="SCHEME")
    _add_word_arg(p, "word1")
    _add_word_arg(p, "word2")

    p = add("scramble", _cmd_scramble, "random walk over applicable moves")
    p.add_argument("--steps", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-length", type=int, default=None)
    p.add_argument("--moveset", choices=[m.value for m in MoveSet], default="FB")
    p.add_argument("--history", action="store_true", help="also print the move history")
    _add_word_arg(p)

    p = add("oracle", _cmd_oracle, "breadth-first equality oracle")
    p.add_argument("--moveset", choices=[m.value for m in MoveSet], default="F")
    p.add_argument("--bound", type=int, default=None, help="length bound for intermediate words")
    p.add_argument("--node-cap", type=int, default=1_000_000)
    _add_word_arg(p, "word1")
    _add_word_arg(p, "word2")

    p = add("render", _cmd_render, "emit a diagram")
    p.add_argument("--format", choices=[f.value for f in RenderFormat], default="ascii")
    _add_word_arg(p)

    p = sub.add_parser("scenario", help="built-in experiments")
    scen = p.add_subparsers(dest="which", required=True)
    pb = scen.add_parser("brunnian", help="the 9-strand odd irreducible example")
    pb.set_defaults(func=_cmd_scenario, which="brunnian")
    _add_json_flag(pb)
    pb.add_argument("--seed", type=int, default=0)
    pb.add_argument("--steps", type=int, default=1000)
    pb.add_argument("--max-length", type=int, default=200)
    pp = scen.add_parser("beta-prime", help="the transformed 10-strand braid")
    pp.set_defaults(func=_cmd_scenario, which="beta-prime")
    _add_json_flag(pp)
    pp.add_argument("word", nargs="?", default=None,
                    help="candidate word (defaults to the documented reconstruction)")
    pp.add_argument("--added", default=None, metavar="A,B",
                    help="positions of the two added classical crossings")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return args.func(args)
    except ParseError as e:
        print(f"freebraid: {e}", file=sys.stderr)
        return 1
    except PreconditionError as e:
        print(f"freebraid: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

Every subcommand builds a JSON-serialisable report::

    {"schema": 1, "command": ..., "input_digest": ..., "result": {...}, "timing": {...}}

``timing`` is the only non-deterministic part and can be dropped with ``--no-timing``.
Exit status is 0 whenever the analysis ran (a non-regular algebra is a result,
not a failure), 2 for unreadable input or bad usage, 1 for other refusals.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from pathlib import Path

from . import __version__
from .algebra import family_report, is_minimal, unreached_state
from .dot import to_dot
from .errors import LSAlgebraError, ParseError
from .morphisms import find_morphism, is_isomorphism, quotient, quotient_regularity, verify_monoid_homomorphism
from .synthesis import ORACLE_BOUND, brute_force_operation_search, classify_monoid, synthesize, verify_compatible
from .textformat import dump_algebra, parse_boundary_set, parse_document, parse_partition
from .transmonoid import DEFAULT_CAP, centraliser, equivalence_report, evaluate_at_base, monoid_of
from .words import check_boundary, compact, fold, format_word, parse_word

SCHEMA = 1
DEFAULT_MAX_WORD = 64


class UsageError(LSAlgebraError):
    pass


def _digest(*blobs: bytes) -> str:
    h = hashlib.sha256()
    for b in blobs:
        h.update(hashlib.sha256(b).digest())
    return "sha256:" + h.hexdigest()


def _read(path: str) -> bytes:
    try:
        return Path(path).read_bytes()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _load_algebra(path: str):
    raw = _read(path)
    try:
        text = raw.decode("utf-8")
    except UnicodeDecodeError:
        raise ParseError(f"{path} is not UTF-8") from None
    try:
        alg, classes = parse_document(text)
    except ParseError as exc:
        raise ParseError(f"{path}: {exc}") from None
    return raw, alg, classes


def _synthesis_payload(alg, result) -> dict:
    if result.regular:
        return {
            "outcome": "regular",
            "operation": result.op.to_json(),
            "reflection": {s: list(m) for s, m in zip(alg.alphabet, result.reflection.maps)},
            "monoid_size": len(result.monoid),
        }
    witness = result.witness
    if result.reason == "phi_not_injective":
        witness = [list(u) for u in witness]
    return {"outcome": "not_regular", "reason": result.reason, "witness": witness}


def cmd_check(args) -> tuple:
    raw, alg, _ = _load_algebra(args.file)
    report = family_report(alg)
    result = {"states": alg.n, "alphabet": list(alg.alphabet), "minimal": is_minimal(alg)}
    missing = unreached_state(alg)
    if missing is not None:
        result["unreached_state"] = missing
    result.update(report.to_dict(alg.alphabet))
    return _digest(raw), result


def cmd_synthesize(args) -> tuple:
    raw, alg, _ = _load_algebra(args.file)
    if args.oracle and alg.n > ORACLE_BOUND:
        raise UsageError(f"--oracle refused: {alg.n} states exceeds the brute-force bound {ORACLE_BOUND}")
    res = synthesize(alg, args.cap)
    result = _synthesis_payload(alg, res)
    if res.regular:
        result["compatible"] = bool(verify_compatible(alg, res.op))
        result["classification"] = classify_monoid(alg, res.op, res.reflection).to_dict()
    if args.oracle:
        found = brute_force_operation_search(alg)
        agree = (len(found) == 0 and not res.regular) or (len(found) == 1 and res.regular and found[0] == res.op)
        result["oracle"] = {"operations_found": len(found), "agreement": agree}
    return _digest(raw), result


def cmd_monoid(args) -> tuple:
    raw, alg, _ = _load_algebra(args.file)
    monoid = monoid_of(alg, args.cap)
    ev = evaluate_at_base(monoid, alg.base)
    result = {
        "size": len(monoid),
        "elements": monoid.to_json(),
        "generators": {s: i for s, i in zip(alg.alphabet, monoid.generators)},
        "phi": list(ev.phi),
        "phi_surjective": ev.surjective,
        "phi_injective": ev.injective,
        "phi_collision": list(ev.collision) if ev.collision else None,
    }
    if args.centraliser:
        strategy = args.strategy
        if strategy == "auto":
            strategy = "enumerate" if alg.n ** alg.n <= args.cap else "allowable"
        kwargs = {"base": alg.base}
        if strategy == "via-reflection-op":
            kwargs["op"] = synthesize(alg, args.cap).op
        z = centraliser(alg.trans, strategy, args.cap, **kwargs)
        result["centraliser"] = {"strategy": strategy, "size": len(z), "elements": z.to_json()}
    if is_minimal(alg):
        result["equivalence"] = equivalence_report(alg, args.cap).to_dict()
    else:
        result["equivalence"] = None
    return _digest(raw), result


def cmd_fold(args) -> tuple:
    raw, alg, _ = _load_algebra(args.file)
    w = parse_word(" ".join(args.word))
    if len(w) > args.max_word_length:
        raise UsageError(f"word of length {len(w)} exceeds --max-word-length {args.max_word_length}")
    x = fold(w, alg)
    return _digest(raw, " ".join(w).encode()), {"word": format_word(w), "state": x, "label": alg.label(x)}


def cmd_morphism(args) -> tuple:
    raw_src, src, _ = _load_algebra(args.src)
    raw_dst, dst, _ = _load_algebra(args.dst)
    search = find_morphism(src, dst)
    result = {"exists": bool(search)}
    if search:
        result["map"] = list(search.map)
        result["surjective"] = len(set(search.map)) == dst.n
        result["isomorphism"] = is_isomorphism(src, dst, search.map)
        s_res, d_res = synthesize(src, args.cap), synthesize(dst, args.cap)
        if s_res.regular and d_res.regular:
            result["monoid_homomorphism"] = bool(verify_monoid_homomorphism(s_res.op, d_res.op, search.map))
    else:
        state, assigned, forced = search.conflict
        result["conflict"] = {"state": state, "assigned": assigned, "forced": forced}
    return _digest(raw_src, raw_dst), result


def cmd_quotient(args) -> tuple:
    raw, alg, classes = _load_algebra(args.file)
    blobs = [raw]
    if args.partition:
        praw = _read(args.partition)
        blobs.append(praw)
        classes = parse_partition(praw.decode("utf-8"))
    elif args.classes:
        try:
            classes = tuple(int(tok) for tok in args.classes.split())
        except ValueError:
            raise UsageError(f"--classes expects integers: {args.classes!r}") from None
        blobs.append(args.classes.encode())
    if classes is None:
        raise UsageError("no partition: add a 'classes:' line, --classes or --partition")
    q = quotient(alg, classes)
    result = {"classes": list(classes), "compatible": bool(q)}
    if q:
        result["projection"] = list(q.projection)
        result["algebra_text"] = dump_algebra(q.algebra)
        res = synthesize(alg, args.cap)
        result["source_regular"] = res.regular
        if res.regular:
            result["quotient_regular"] = quotient_regularity(alg, res.reflection, classes, args.cap)
        else:
            result["quotient_regular"] = synthesize(q.algebra, args.cap).regular
    else:
        s, x1, x2 = q.witness
        result["witness"] = {"symbol": s, "x1": x1, "x2": x2}
    return _digest(*blobs), result


def cmd_boundary(args) -> tuple:
    raw = _read(args.setfile)
    words = parse_boundary_set(raw.decode("utf-8"))
    if args.alphabet:
        alphabet = tuple(args.alphabet.split())
    else:
        alphabet = tuple(dict.fromkeys(s for w in words for s in w))
        if not alphabet:
            raise UsageError("boundary set mentions no symbols; pass --alphabet")
    rep = check_boundary(words, alphabet, args.cap)
    ba = rep.boundary
    result = {
        "alphabet": list(alphabet),
        "states": [compact(w) for w in ba.words],
        "boundary": [compact(w) for w, b in zip(ba.words, ba.in_boundary) if b],
        "theorem_regular": rep.by_theorem,
        "synthesize": "regular" if rep.by_synthesis else "not_regular",
        "agree": rep.agree,
    }
    if args.project:
        projected = {}
        for text in args.project:
            w = parse_word(text)
            if len(w) > args.max_word_length:
                raise UsageError(f"word of length {len(w)} exceeds --max-word-length {args.max_word_length}")
            projected[format_word(w)] = compact(ba.project(w))
        result["projections"] = projected
    return _digest(raw, " ".join(alphabet).encode()), result


def cmd_dot(args) -> tuple:
    raw, alg, _ = _load_algebra(args.file)
    return _digest(raw), {"dot": to_dot(alg, Path(args.file).stem)}


def _render_text(command: str, result: dict) -> str:
    if command == "dot":
        return result["dot"].rstrip("\n")
    if command == "quotient" and result.get("compatible"):
        lines = [f"# quotient by classes {' '.join(map(str, result['classes']))}",
                 f"# regular: {result['quotient_regular']}"]
        return "\n".join(lines) + "\n" + result["algebra_text"].rstrip("\n")
    if command == "synthesize" and result.get("outcome") == "regular":
        from .synthesis import MonoidOp

        op = MonoidOp(**result["operation"])
        rest = {k: v for k, v in result.items() if k != "operation"}
        return "outcome: regular\n" + op.render() + "\n" + _render_mapping(rest)
    return _render_mapping(result)


def _render_mapping(d: dict, indent: int = 0) -> str:
    pad = "  " * indent
    lines = []
    for key, value in d.items():
        if isinstance(value, dict):
            lines.append(f"{pad}{key}:")
            lines.append(_render_mapping(value, indent + 1))
        else:
            if isinstance(value, bool):
                value = str(value).lower()
            lines.append(f"{pad}{key}: {json.dumps(value) if isinstance(value, (list, type(None))) else value}")
    return "\n".join(line for line in lines if line)


COMMANDS = {
    "check": cmd_check,
    "synthesize": cmd_synthesize,
    "monoid": cmd_monoid,
    "fold": cmd_fold,
    "morphism": cmd_morphism,
    "quotient": cmd_quotient,
    "boundary": cmd_boundary,
    "dot": cmd_dot,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="output", action="store_const", const="json", help="emit a JSON report")
    fmt.add_argument("--text", dest="output", action="store_const", const="text", help="emit text (default)")
    common.add_argument("--no-timing", action="store_true", help="omit the timing field from JSON reports")
    common.add_argument("--cap", type=int, default=DEFAULT_CAP, help="monoid element budget (default %(default)s)")
    common.set_defaults(output="text")

    parser = argparse.ArgumentParser(prog="lsalg", description="Analyse finite pointed algebras with a family of self-maps.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[common], help="minimality and per-symbol map properties")
    p.add_argument("file")

    p = sub.add_parser("synthesize", parents=[common], help="decide and build the compatible monoid operation")
    p.add_argument("file")
    p.add_argument("--oracle", action="store_true", help=f"cross-check by brute force (n <= {ORACLE_BOUND})")

    p = sub.add_parser("monoid", parents=[common], help="generated transformation monoid and evaluation table")
    p.add_argument("file")
    p.add_argument("--centraliser", "--centralizer", action="store_true", help="also compute the centraliser")
    p.add_argument("--strategy", choices=["auto", "enumerate", "via-reflection-op", "allowable"], default="auto")

    p = sub.add_parser("fold", parents=[common], help="evaluate a word (symbols separated by spaces, '-' for empty)")
    p.add_argument("file")
    p.add_argument("word", nargs="+")
    p.add_argument("--max-word-length", type=int, default=DEFAULT_MAX_WORD)

    p = sub.add_parser("morphism", parents=[common], help="find the morphism from a minimal source")
    p.add_argument("src")
    p.add_argument("dst")

    p = sub.add_parser("quotient", parents=[common], help="quotient by a partition given as class ids")
    p.add_argument("file")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--classes", help="class ids, e.g. '0 1 2 0 1 2'")
    group.add_argument("--partition", help="file holding a 'classes:' line")

    p = sub.add_parser("boundary", parents=[common], help="boundary algebra of a tail-closed word set")
    p.add_argument("setfile")
    p.add_argument("--alphabet", help="symbols separated by spaces (default: symbols in the set)")
    p.add_argument("--project", action="append", metavar="WORD", help="project a word onto the boundary algebra")
    p.add_argument("--max-word-length", type=int, default=DEFAULT_MAX_WORD)

    p = sub.add_parser("dot", parents=[common], help="Graphviz digraph of the semiautomaton")
    p.add_argument("file")
    return parser


def _report(args) -> dict:
    start = time.perf_counter()
    digest, result = COMMANDS[args.command](args)
    report = {"schema": SCHEMA, "command": args.command, "input_digest": digest, "result": result}
    if not args.no_timing:
        report["timing"] = {"seconds": round(time.perf_counter() - start, 6)}
    return report


def run(argv=None) -> dict:
    """Parse ``argv`` and return the full report dict (raises on errors)."""
    return _report(build_parser().parse_args(argv))


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        report = _report(args)
    except (ParseError, UsageError) as exc:
        print(f"lsalg {args.command}: error: {exc}", file=sys.stderr)
        return 2
    except LSAlgebraError as exc:
        print(f"lsalg {args.command}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    if args.output == "json":
        print(json.dumps(report, indent=2, ensure_ascii=False))
    else:
        print(_render_text(args.command, report["result"]))
    return 0


if __name__ == "__main__":
    sys.exit(main())

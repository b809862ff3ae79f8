"""
Command line interface.

    braid3 normal 1121
    braid3 conjugate 1111 2222
    braid3 class 1112 --format json
    braid3 enumerate 4
    braid3 verify --suite structure --max-len 14

Exit codes: 0 success (or "true"), 1 verification failure (or "false" under
``--exit-code``), 2 usage or parse error, 3 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from . import conjugacy, structure
from .enumeration import ClassTableCache, cached_class_table
from .normal_form import normal_form, reflect
from .verify import SUITES, run_suite
from .words import DEFAULT_CAP, ClosureOverflow, InvalidWord, parse_word, render_word

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_USAGE = 2
EXIT_CAP = 3

MAX_ENUM_LENGTH = 20


class ResourceCapExceeded(Exception):
    pass


def _word_arg(text: str) -> str:
    try:
        return parse_word(text)
    except InvalidWord as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _nonneg_int(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if n < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {n}")
    return n


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--cap", type=_nonneg_int, default=DEFAULT_CAP,
                        help="closure size cap (default %(default)s)")
    common.add_argument("--cache", default=os.environ.get("BRAID3_CACHE"),
                        help="class-table cache directory (default: $BRAID3_CACHE)")
    common.add_argument("--stable", action="store_true",
                        help="omit timing from JSON output")
    common.add_argument("--exit-code", action="store_true",
                        help="exit 1 when a boolean query answers false")

    parser = argparse.ArgumentParser(prog="braid3", description="Conjugacy of positive 3-braids.")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, helptext in [
        ("normal", "normal form D^m:tail"),
        ("reflect", "reflection (swap generators)"),
        ("cyclic-class", "cyclic-equivalence class"),
        ("class", "positive conjugacy class and its cyclic classes"),
        ("ccbar", "minimal expression (c c̄)^ℓ, if any"),
        ("coincide", "does the conjugacy class equal the cyclic class?"),
    ]:
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("word", type=_word_arg)

    p = sub.add_parser("conjugate", parents=[common], help="decide conjugacy of two braids")
    p.add_argument("word", type=_word_arg)
    p.add_argument("other", type=_word_arg)

    p = sub.add_parser("enumerate", parents=[common], help="all conjugacy classes of one length")
    p.add_argument("length", type=_nonneg_int)
    p.add_argument("--allow-large", action="store_true",
                   help=f"permit lengths above {MAX_ENUM_LENGTH}")

    p = sub.add_parser("verify", parents=[common], help="run exhaustive verification suites")
    p.add_argument("--suite", choices=SUITES + ("all",), default="all")
    p.add_argument("--max-len", type=_nonneg_int, default=None,
                   help="length bound (default: per-suite)")
    p.add_argument("--jobs", type=int, default=1, help="worker processes for the structure suite")
    p.add_argument("--allow-large", action="store_true",
                   help=f"permit --max-len above {MAX_ENUM_LENGTH}")
    return parser


def _members(members) -> list[str]:
    return [str(x) for x in conjugacy.sorted_members(members)]


def _render_class_text(d: dict) -> list[str]:
    lines = [
        f"class {d['representative']}: {d['size']} braids, "
        f"{len(d['cyclic_classes'])} cyclic class(es), coincides={str(d['coincides']).lower()}"
    ]
    for c in d["cyclic_classes"]:
        lines.append(f"  [{c['representative']}] " + " ".join(c["members"]))
    return lines


def run(args) -> tuple[dict, list[str], int]:
    """Execute one command; return (result payload, text lines, exit code)."""
    cmd = args.command
    cap = args.cap or None

    if cmd == "normal":
        nf = normal_form(args.word)
        result = {"normal_form": str(nf), "infimum": nf.infimum,
                  "tail": render_word(nf.tail), "length": nf.length}
        return result, [str(nf)], EXIT_OK

    if cmd == "reflect":
        w = reflect(args.word)
        result = {"word": render_word(w), "normal_form": str(normal_form(w))}
        return result, [render_word(w)], EXIT_OK

    if cmd == "cyclic-class":
        members = conjugacy.cyclic_class(args.word, cap)
        result = {
            "representative": str(conjugacy.class_representative(members)),
            "size": len(members),
            "members": _members(members),
        }
        return result, result["members"], EXIT_OK

    if cmd == "class":
        d = conjugacy.class_report(args.word, cap).to_dict()
        return d, _render_class_text(d), EXIT_OK

    if cmd == "conjugate":
        answer = conjugacy.are_conjugate(args.word, args.other, cap)
        code = EXIT_FALSE if (args.exit_code and not answer) else EXIT_OK
        return {"conjugate": answer}, [str(answer).lower()], code

    if cmd == "ccbar":
        pp = structure.find_ccbar_power(args.word)
        if pp is None:
            return {"ccbar_power": None}, ["none"], EXIT_FALSE if args.exit_code else EXIT_OK
        text = f"c={render_word(pp.c)} ell={pp.ell} minimal={str(pp.minimal).lower()}"
        return {"ccbar_power": pp.to_dict()}, [text], EXIT_OK

    if cmd == "coincide":
        d = structure.coincidence(args.word).to_dict()
        lines = [f"{k}: {str(v).lower()}" for k, v in d.items()]
        code = EXIT_FALSE if (args.exit_code and not d["coincides"]) else EXIT_OK
        return d, lines, code

    if cmd == "enumerate":
        if args.length > MAX_ENUM_LENGTH and not args.allow_large:
            raise ResourceCapExceeded(
                f"refusing to enumerate length {args.length} > {MAX_ENUM_LENGTH}; pass --allow-large")
        cache = ClassTableCache(args.cache) if args.cache else None
        table = cached_class_table(args.length, cache, cap)
        lines = [f"length {table['length']}: {table['braid_count']} braids, {table['class_count']} classes"]
        for d in table["classes"]:
            lines.extend(_render_class_text(d))
        return table, lines, EXIT_OK

    if cmd == "verify":
        if args.max_len is not None and args.max_len > MAX_ENUM_LENGTH and not args.allow_large:
            raise ResourceCapExceeded(
                f"refusing --max-len {args.max_len} > {MAX_ENUM_LENGTH}; pass --allow-large")
        reports = run_suite(args.suite, args.max_len, cap, jobs=args.jobs)
        passed = all(not r["failures"] for r in reports)
        lines = []
        for r in reports:
            extras = "".join(
                f" {k}={v}" for k, v in r.items()
                if k not in ("suite", "max_len", "instances_checked", "failures")
            )
            status = "PASS" if not r["failures"] else "FAIL"
            lines.append(
                f"{status} {r['suite']} max_len={r['max_len']} "
                f"instances={r['instances_checked']}{extras} failures={len(r['failures'])}"
            )
            for f in r["failures"]:
                lines.append("  " + json.dumps(f, sort_keys=True))
        return {"passed": passed, "suites": reports}, lines, EXIT_OK if passed else EXIT_FALSE

    raise AssertionError(f"unhandled command {cmd}")  # pragma: no cover


def _inputs(args) -> list[str]:
    if args.command == "conjugate":
        return [render_word(args.word), render_word(args.other)]
    if args.command == "enumerate":
        return [str(args.length)]
    if args.command == "verify":
        return [args.suite, "default" if args.max_len is None else str(args.max_len)]
    return [render_word(args.word)]


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.perf_counter()
    try:
        result, lines, code = run(args)
    except (ClosureOverflow, ResourceCapExceeded) as exc:
        print(f"braid3: {exc}", file=sys.stderr)
        return EXIT_CAP
    elapsed_ms = (time.perf_counter() - start) * 1000.0

    if args.format == "json":
        payload = {"command": args.command, "inputs": _inputs(args), "result": result}
        if not args.stable:
            payload["elapsed_ms"] = round(elapsed_ms, 3)
        print(json.dumps(payload, indent=2, ensure_ascii=False))
    else:
        print("\n".join(lines))
    return code


if __name__ == "__main__":
    sys.exit(main())

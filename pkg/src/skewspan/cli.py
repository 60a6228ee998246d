"""Command line interface.

Subcommands: verify, extract, build, roundtrip, enumerate, nerve, dec,
from-monoid, from-category.  Exit codes: 0 success, 1 verification
failure, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from . import characterization as char
from . import io as sio
from .constructions import category_to_monoidale, monoid_to_monoidale
from .errors import CapExceeded, SkewSpanError
from .monoidale import AXIOM_KEYS, AXIOM_TITLES, VerifyReport, verify
from .simplicial import dec_cat, nerve, simp_validate

EXIT_OK = 0
EXIT_VERIFICATION = 1
EXIT_INPUT = 2


def _emit(args, payload: dict, text_lines: List[str]) -> None:
    if args.format == "structured":
        print(json.dumps(payload, indent=2))
    else:
        for line in text_lines:
            print(line)


def _verify_lines(report: VerifyReport) -> List[str]:
    lines = []
    wf = report.pointwise.wellformed
    wf_ok = all(c.passed for c in wf)
    lines.append("wellformed: %s" % ("PASS" if wf_ok else "FAIL"))
    for c in wf:
        if not c.passed:
            lines.append("  %s: FAIL at %s" % (c.name, c.witness))
    for key in AXIOM_KEYS:
        pw = report.pointwise.axioms[key]
        bc = report.bicategorical.axioms[key]
        if pw is None or bc is None:
            lines.append("axiom %s: SKIPPED" % AXIOM_TITLES[key])
            continue
        verdict = "PASS" if (pw.passed and bc.passed) else "FAIL"
        line = "axiom %s: %s" % (AXIOM_TITLES[key], verdict)
        if not pw.passed and pw.witness:
            line += " (witness %s)" % pw.witness
        elif not bc.passed and bc.witness:
            line += " (witness %s)" % bc.witness
        lines.append(line)
    lines.append("cross-check: %s" % ("AGREE" if report.agree else "DISAGREE"))
    return lines


def cmd_verify(args) -> int:
    doc = sio.load_document(args.path)
    m = sio.monoidale_from_document(doc)
    report = verify(m)
    payload = {"command": "verify", "ok": report.all_pass, "report": report.to_dict()}
    _emit(args, payload, _verify_lines(report))
    return EXIT_OK if report.all_pass else EXIT_VERIFICATION


def cmd_extract(args) -> int:
    doc = sio.load_document(args.path)
    m = sio.monoidale_from_document(doc)
    report = verify(m)
    if not report.all_pass:
        _emit(
            args,
            {"command": "extract", "ok": False, "report": report.to_dict()},
            ["verification failed; not extracting"] + _verify_lines(report),
        )
        return EXIT_VERIFICATION
    rs = char.extract(m, report)
    sio.dump(sio.rstructure_to_json(rs), args.out)
    _emit(
        args,
        {"command": "extract", "ok": True, "out": args.out},
        ["wrote functor structure to %s" % args.out],
    )
    return EXIT_OK


def cmd_build(args) -> int:
    doc = sio.load_document(args.path)
    rs = sio.rstructure_from_document(doc)
    report = char.check_conditions(rs)
    if not report.ok:
        _emit(
            args,
            {"command": "build", "ok": False, "report": report.to_dict()},
            ["conditions failed; not building"],
        )
        return EXIT_VERIFICATION
    m = char.build(rs, report)
    sio.dump(sio.monoidale_to_json(m), args.out)
    _emit(
        args,
        {"command": "build", "ok": True, "out": args.out},
        ["wrote monoidale to %s" % args.out],
    )
    return EXIT_OK


def cmd_roundtrip(args) -> int:
    doc = sio.load_document(args.path)
    m = sio.monoidale_from_document(doc)
    report = verify(m)
    if not report.all_pass:
        _emit(
            args,
            {"command": "roundtrip", "ok": False, "report": report.to_dict()},
            ["verification failed"] + _verify_lines(report),
        )
        return EXIT_VERIFICATION
    rt = char.roundtrip(m)
    payload = {
        "command": "roundtrip",
        "ok": rt.isomorphic,
        "details": rt.details,
    }
    lines = ["roundtrip: %s" % ("ISOMORPHIC" if rt.isomorphic else "MISMATCH")]
    lines += ["  " + d for d in rt.details]
    _emit(args, payload, lines)
    return EXIT_OK if rt.isomorphic else EXIT_VERIFICATION


def cmd_enumerate(args) -> int:
    doc = sio.load_document(args.path)
    c = sio.category_from_document(doc)
    found = list(char.enumerate_rstructures(c, cap=args.cap))
    payload = {
        "command": "enumerate",
        "ok": True,
        "count": len(found),
        "structures": [
            {
                "R_objects": [
                    [sio.element_to_json(f), sio.element_to_json(rs.R.obj(f))]
                    for f in rs.R.source.objects
                ]
            }
            for rs in found
        ],
    }
    lines = ["valid functor structures: %d" % len(found)]
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_nerve(args) -> int:
    doc = sio.load_document(args.path)
    c = sio.category_from_document(doc)
    n = nerve(c, args.depth)
    report = simp_validate(n)
    payload = {
        "command": "nerve",
        "ok": report.ok,
        "levels": [len(level) for level in n.levels],
    }
    lines = ["levels: %s" % payload["levels"], "identities: %s" % ("PASS" if report.ok else "FAIL")]
    _emit(args, payload, lines)
    return EXIT_OK if report.ok else EXIT_VERIFICATION


def cmd_dec(args) -> int:
    doc = sio.load_document(args.path)
    c = sio.category_from_document(doc)
    dec, _cod = dec_cat(c)
    data = sio.category_to_json(dec)
    if args.out:
        sio.dump(data, args.out)
        lines = ["wrote shifted category to %s" % args.out]
    else:
        lines = [json.dumps(data, indent=2)]
    _emit(
        args,
        {"command": "dec", "ok": True, "objects": len(dec.objects), "arrows": len(dec.arrows)},
        lines,
    )
    return EXIT_OK


def cmd_from_monoid(args) -> int:
    doc = sio.load_document(args.path)
    mon = sio.monoid_from_document(doc)
    m = monoid_to_monoidale(mon)
    sio.dump(sio.monoidale_to_json(m), args.out)
    _emit(
        args,
        {"command": "from-monoid", "ok": True, "out": args.out},
        ["wrote monoidale to %s" % args.out],
    )
    return EXIT_OK


def cmd_from_category(args) -> int:
    doc = sio.load_document(args.path)
    c = sio.category_from_document(doc)
    m = category_to_monoidale(c)
    sio.dump(sio.monoidale_to_json(m), args.out)
    _emit(
        args,
        {"command": "from-category", "ok": True, "out": args.out},
        ["wrote monoidale to %s" % args.out],
    )
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="skewspan",
        description="Verify, extract and construct skew monoidal span structures.",
    )
    parser.add_argument("--format", choices=["text", "structured"], default="text")
    parser.add_argument("--seed", type=int, default=0, help="seed for randomized helpers")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="check the five axioms under both checkers")
    p.add_argument("path")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("extract", help="verified monoidale file to functor structure file")
    p.add_argument("path")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_extract)

    p = sub.add_parser("build", help="functor structure file to monoidale file")
    p.add_argument("path")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("roundtrip", help="extract then rebuild and compare")
    p.add_argument("path")
    p.set_defaults(func=cmd_roundtrip)

    p = sub.add_parser("enumerate", help="brute-force all functor structures on a category")
    p.add_argument("path")
    p.add_argument("--cap", type=int, default=10**6)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("nerve", help="nerve levels of a category file")
    p.add_argument("path")
    p.add_argument("--depth", type=int, default=3)
    p.set_defaults(func=cmd_nerve)

    p = sub.add_parser("dec", help="category shift of a category file")
    p.add_argument("path")
    p.add_argument("--out")
    p.set_defaults(func=cmd_dec)

    p = sub.add_parser("from-monoid", help="monoid file to monoidale file")
    p.add_argument("path")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_from_monoid)

    p = sub.add_parser("from-category", help="category file to monoidale file")
    p.add_argument("path")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_from_category)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CapExceeded as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_INPUT
    except SkewSpanError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

Subcommands: rsk, derive, specht, tableaux, check.  Exit codes: 0 success,
1 malformed input text, 2 violated precondition, 3 failed check suite.
Machine output via --json round-trips through the documented schemas.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field

from . import checks, rsk, specht, strings, tableaux
from .errors import ParseError, PreconditionError
from .multisegment import Multisegment
from .oracle import EnumerationBounds
from .tableaux import Partition


@dataclass
class CommandReport:
    """Structured outcome of one subcommand invocation."""

    status: str = "ok"
    payload: dict = field(default_factory=dict)
    diagnostics: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "status": self.status,
            "payload": self.payload,
            "diagnostics": self.diagnostics,
        }


def _emit(report: CommandReport, lines: list[str], as_json: bool) -> None:
    if as_json:
        print(json.dumps(report.to_json(), indent=2, sort_keys=True))
    else:
        for line in lines:
            print(line)
        for diag in report.diagnostics:
            print(diag, file=sys.stderr)


def _cmd_rsk(args: argparse.Namespace) -> int:
    report = CommandReport()
    lines: list[str] = []
    m = Multisegment.parse(args.multisegment)
    transform = rsk.rsk_transform(m)
    report.payload["ladders"] = transform.to_json()
    lines.append(str(transform))
    if args.width or args.json:
        report.payload["width"] = len(transform)
        if args.width:
            lines.append(f"width: {len(transform)}")
    if args.bitableau or (args.json and m):
        pair = rsk.bitableau_of(m)
        report.payload["P"] = pair.p.to_json()
        report.payload["Q"] = pair.q.to_json()
        if args.bitableau:
            lines.append(f"P: {pair.p.to_json()}")
            lines.append(f"Q: {pair.q.to_json()}")
    _emit(report, lines, args.json)
    return 0


def _cmd_derive(args: argparse.Namespace) -> int:
    report = CommandReport()
    lines: list[str] = []
    ms = [Multisegment.parse(text) for text in args.multisegment]
    if args.phi:
        phi = strings.phi_multiseg(ms)
        report.payload["phi"] = phi
        report.payload["c"] = strings.c_tuple(ms)
        report.payload["c_prime"] = strings.c_prime_tuple(ms)
        lines.append(f"phi: {phi}")
    else:
        if len(ms) != 1:
            raise PreconditionError("exactly one multisegment expected")
        m = ms[0]
        if args.gamma_descriptor or args.derived:
            desc = tableaux.gamma_descriptor(m, derived=args.derived)
            report.payload["ladders"] = [lad.to_json() for lad in desc.ladders]
            report.payload["shift"] = desc.shift
            lines.append(" ; ".join(str(lad) for lad in desc.ladders))
            lines.append(f"shift: {desc.shift}")
        elif args.single is not None:
            out = strings.single_derivative(m, args.single)
            report.payload["result"] = out.to_json()
            lines.append(str(out))
        elif args.bz is not None:
            out = strings.bz_derivative(m, args.bz)
            report.payload["result"] = out.to_json()
            lines.append(str(out))
        else:
            out = m.derived()
            report.payload["result"] = out.to_json()
            lines.append(str(out))
    _emit(report, lines, args.json)
    return 0


def _cmd_specht(args: argparse.Namespace) -> int:
    report = CommandReport()
    lines: list[str] = []
    kappa = specht.Multicharge.parse(args.charge)
    mp = specht.Multipartition.parse(args.parts)
    if len(kappa) != len(mp):
        raise PreconditionError(
            f"{len(kappa)} charges but {len(mp)} partition components"
        )
    restricted = specht.is_restricted(kappa, mp)
    proper = specht.is_proper(kappa, mp)
    m = specht.multiseg_of(kappa, mp)
    report.payload.update(
        {
            "restricted": restricted,
            "proper": proper,
            "multisegment": m.to_json(),
            "checks": [],
        }
    )
    lines.append(f"restricted: {restricted}")
    lines.append(f"proper: {proper}")
    lines.append(f"multisegment: {m}")
    if args.pad:
        if not restricted:
            raise PreconditionError("padding requires a restricted multipartition")
        padded = specht.pad(kappa, mp)
        report.payload["padded"] = str(padded)
        lines.append(f"padded: {padded}")
    if args.derive:
        cut = mp.cut()
        ok = specht.column_removal_check(kappa, mp) if restricted else None
        report.payload["cut"] = str(cut)
        if ok is not None:
            report.payload["checks"].append({"column_removal": ok})
            lines.append(f"column removal: {'pass' if ok else 'FAIL'}")
        lines.append(f"cut: {cut}")
    if args.verify_rsk:
        if not restricted:
            raise PreconditionError("--verify-rsk requires a restricted multipartition")
        outcome = specht.specht_rsk_verify(kappa, mp)
        report.payload["gamma"] = outcome.gamma.to_json()
        report.payload["ladders"] = [lad.to_json() for lad in outcome.ladders]
        report.payload["checks"].append({"specht_rsk": True})
        lines.append(f"gamma: {outcome.gamma}")
        lines.append(f"ladders: {' ; '.join(str(lad) for lad in outcome.ladders)}")
        lines.append("dictionary checks: pass")
    _emit(report, lines, args.json)
    return 0


def _cmd_tableaux(args: argparse.Namespace) -> int:
    report = CommandReport()
    lines: list[str] = []
    shape = Partition.parse(args.shape)
    fillings = tableaux.standard_tableaux(shape)
    entries = []
    for filling in fillings:
        residues = tableaux.residue_sequence(args.charge, filling)
        entries.append({"rows": [list(r) for r in filling], "residues": list(residues)})
        lines.append(f"{[list(r) for r in filling]} residues: {list(residues)}")
    report.payload.update(
        {"shape": list(shape.parts), "count": len(fillings), "tableaux": entries}
    )
    lines.append(f"count: {len(fillings)}")
    _emit(report, lines, args.json)
    return 0


def _cmd_check(args: argparse.Namespace) -> int:
    bounds = EnumerationBounds(args.min, args.max, args.max_segments)
    results = checks.run_suite(
        args.suite, bounds, seed=args.seed, sample=args.sample, max_level=args.level
    )
    report = CommandReport()
    lines: list[str] = []
    failed = False
    for res in results:
        status = "pass" if res.ok else "FAIL"
        lines.append(f"{res.name}: {status} ({res.cases} cases)")
        for note in res.notes:
            lines.append(f"  note: {note}")
        for failure in res.failures:
            failed = True
            lines.append(f"  counterexample: {failure}")
        report.payload[res.name] = {
            "cases": res.cases,
            "failures": res.failures,
            "notes": res.notes,
        }
    if failed:
        report.status = "check_failure"
    _emit(report, lines, args.json)
    return 3 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="segrsk",
        description="Multisegment calculus: RSK transform, crystal derivatives "
        "and the Specht dictionary, with brute-force checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_rsk = sub.add_parser("rsk", help="RSK-transform a multisegment")
    p_rsk.add_argument("multisegment", help='e.g. "[1,1]+[1,2]" or "0"')
    p_rsk.add_argument("--width", action="store_true", help="also print the width")
    p_rsk.add_argument("--bitableau", action="store_true", help="also print (P,Q)")
    p_rsk.add_argument("--json", action="store_true")
    p_rsk.set_defaults(func=_cmd_rsk)

    p_der = sub.add_parser("derive", help="derivatives and descriptors")
    p_der.add_argument("multisegment", nargs="+", help="one or more multisegments")
    p_der.add_argument("--bz", type=int, metavar="T", help="BZ derivative along (T..-T)")
    p_der.add_argument("--single", type=int, metavar="J", help="single-index derivative")
    p_der.add_argument("--phi", action="store_true", help="shift constant of the tuple")
    p_der.add_argument(
        "--gamma-descriptor", action="store_true", help="ladders and shift of the descriptor"
    )
    p_der.add_argument(
        "--derived", action="store_true", help="use the derived descriptor (P',Q)"
    )
    p_der.add_argument("--json", action="store_true")
    p_der.set_defaults(func=_cmd_derive)

    p_sp = sub.add_parser("specht", help="multipartition dictionary")
    p_sp.add_argument("--charge", required=True, help='multicharge, e.g. "2,1,-1"')
    p_sp.add_argument(
        "--parts", required=True, help='partitions split by |, e.g. "4,2|3,3|2"'
    )
    p_sp.add_argument("--pad", action="store_true", help="print the proper padding")
    p_sp.add_argument("--derive", action="store_true", help="first-column removal")
    p_sp.add_argument(
        "--verify-rsk", action="store_true", help="run the dictionary verification"
    )
    p_sp.add_argument("--json", action="store_true")
    p_sp.set_defaults(func=_cmd_specht)

    p_tab = sub.add_parser("tableaux", help="standard tableaux and residues")
    p_tab.add_argument("--shape", required=True, help='partition, e.g. "2,1"')
    p_tab.add_argument("--charge", type=int, default=0, help="content offset")
    p_tab.add_argument("--json", action="store_true")
    p_tab.set_defaults(func=_cmd_tableaux)

    p_chk = sub.add_parser("check", help="run property suites")
    p_chk.add_argument(
        "--suite",
        choices=["combi", "rsk", "specht", "strings", "all"],
        default="all",
    )
    p_chk.add_argument("--min", type=int, default=-2, help="support/charge minimum")
    p_chk.add_argument("--max", type=int, default=2, help="support/charge maximum")
    p_chk.add_argument(
        "--max-segments", type=int, default=3, help="segment cap (specht: size cap)"
    )
    p_chk.add_argument("--level", type=int, default=3, help="multicharge level cap")
    p_chk.add_argument("--seed", type=int, default=0)
    p_chk.add_argument("--sample", type=int, default=10_000)
    p_chk.add_argument("--json", action="store_true")
    p_chk.set_defaults(func=_cmd_check)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 1
    except PreconditionError as exc:
        print(f"precondition error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

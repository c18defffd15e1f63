"""Command-line front end.

    kummer7 verify --pmax 97 --curve 0,1,-1
    kummer7 eta 1:3,7:3 11
    kummer7 hodge | fibers | identities 30
    kummer7 count 11 kummer
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from dataclasses import dataclass
from typing import Optional

from .curves import EllipticCurveQ, count_points
from .errors import BadPrime, EtaParseError, KummerError
from .fibration import builtin_fibers, count_Y, surface_bad_reason
from .finitefield import MAX_PRIME, PrimeField, is_prime
from .kummer import SweepResult, count_kummer, expand_forms, gamma1_7_invariants, good_prime_reason, sweep
from .qseries import EtaQuotient, coefficient, eta_quotient_expand, hauptmodul_checks, sparse_terms

CSV_COLUMNS = ["p", "a_p_eta", "a_p_count", "b_p", "c_p", "n_counted", "n_predicted", "match", "a_match"]

REPORT_NOTES = [
    "b_p is taken from the eta product eta(t)eta(2t)eta(7t)eta(14t), not counted;",
    "the n_p check covers the counting terms and a_p, while b_p enters only through the V-D term.",
]


@dataclass
class VerifyConfig:
    p_min: int
    p_max: int
    curve: EllipticCurveQ
    method: str = "factored"
    format: str = "csv"
    output: Optional[str] = None
    threads: Optional[int] = None
    timing: bool = True
    b_overrides: Optional[dict] = None

    def __post_init__(self):
        if not 5 <= self.p_min <= self.p_max:
            raise ValueError(f"need 5 <= pmin <= pmax, got pmin={self.p_min}, pmax={self.p_max}")
        if self.p_max >= MAX_PRIME:
            raise ValueError(f"pmax must be below 2^31, got {self.p_max}")


def _fmt(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def summary_dict(result: SweepResult, timing: bool) -> dict:
    out = {
        "checked": len(result.records),
        "skipped": [{"p": p, "reason": r} for p, r in result.skipped],
        "mismatches": [r.p for r in result.mismatches],
    }
    if timing:
        out["elapsed_seconds"] = round(result.elapsed, 4)
    return out


def render_csv(result: SweepResult, config: VerifyConfig) -> str:
    buf = io.StringIO()
    buf.write(f"# kummer7 verify curve={config.curve} method={config.method} "
              f"range=[{config.p_min},{config.p_max}]\n")
    for note in REPORT_NOTES:
        buf.write(f"# {note}\n")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for rec in result.records:
        writer.writerow([_fmt(v) for v in rec.row().values()])
    s = summary_dict(result, config.timing)
    line = f"# summary: checked={s['checked']} skipped={len(s['skipped'])} mismatches={len(s['mismatches'])}"
    if config.timing:
        line += f" elapsed={s['elapsed_seconds']}s"
    buf.write(line + "\n")
    for p, reason in result.skipped:
        buf.write(f"# skipped p={p}: {reason}\n")
    return buf.getvalue()


def render_json(result: SweepResult, config: VerifyConfig) -> str:
    doc = {
        "curve": str(config.curve),
        "method": config.method,
        "range": [config.p_min, config.p_max],
        "notes": REPORT_NOTES,
        "records": [rec.row() for rec in result.records],
        "summary": summary_dict(result, config.timing),
    }
    return json.dumps(doc, indent=2) + "\n"


def cmd_verify(config: VerifyConfig, out=None) -> int:
    result = sweep(config.p_min, config.p_max, config.curve, config.method,
                   config.threads, config.b_overrides)
    text = render_json(result, config) if config.format == "json" else render_csv(result, config)
    if config.output:
        with open(config.output, "w") as fh:
            fh.write(text)
    else:
        (out or sys.stdout).write(text)
    return 0 if result.ok else 1


def format_series(series) -> str:
    parts = []
    for e, c in sparse_terms(series):
        parts.append(f"{c}*q^{e}")
    return " + ".join(parts).replace("+ -", "- ") if parts else "0"


def cmd_eta(quotient: str, terms: int, out) -> int:
    q = EtaQuotient.parse(quotient)
    series = eta_quotient_expand(q, terms)
    out.write(f"weight {q.weight}: {format_series(series)}\n")
    return 0


def cmd_hodge(out, rho: int = 20) -> int:
    inv = gamma1_7_invariants(rho)
    out.write(f"n_plus={inv.n_plus} n_minus={inv.n_minus}\n")
    out.write(f"c(D)={inv.c_D} g(D)={inv.g_D} e(D)={inv.e_D}\n")
    out.write(f"h11={inv.h11} h12={inv.h12} e(X)={inv.euler_X}\n")
    out.write("betti=" + ",".join(str(b) for b in inv.betti) + "\n")
    return 0


def cmd_fibers(out) -> int:
    config = builtin_fibers()
    for fib in config:
        out.write(f"{fib}\n")
    counts = config.type_counts
    out.write("total: " + ", ".join(f"{counts[n]}xI{n}" for n in sorted(counts, reverse=True))
              + f" (sum of indices {config.total})\n")
    return 0


def cmd_count(p: int, target: str, curve: EllipticCurveQ, out) -> int:
    if target == "surface":
        reason = surface_bad_reason(p)
    elif target == "curve":
        bad = curve.bad_reduction_divisor(p)
        reason = f"E has bad reduction ({bad})" if bad else None
    else:
        reason = good_prime_reason(p, curve)
    if reason:
        raise BadPrime(p, reason)
    field = PrimeField(p).with_table()
    if target == "surface":
        count, a_p = count_Y(field)
        out.write(f"#Y(F_{p})={count} a_{p}={a_p}\n")
    elif target == "curve":
        tr = count_points(curve, field)
        out.write(f"#E(F_{p})={tr.count} c_{p}={tr.c_p}\n")
    else:
        _, g2B = expand_forms(p + 1)
        n, terms = count_kummer(field, curve, coefficient(g2B, p))
        out.write(" ".join(f"{k}={v}" for k, v in terms._asdict().items()) + "\n")
        out.write(f"n_{p}={n}\n")
    return 0


def cmd_identities(terms: int, out) -> int:
    checks = hauptmodul_checks(terms)
    for name in ("phi3", "phi4"):
        out.write(f"{name}: {'ok' if checks[name] else 'FAILED'}\n")
    return 0 if all(checks.values()) else 1


def _parse_override(text: str) -> tuple[int, int]:
    try:
        p, v = text.split(":")
        return int(p), int(v)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected p:value, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="kummer7", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="check predicted against counted n_p over a prime range")
    v.add_argument("--pmin", type=int, default=5)
    v.add_argument("--pmax", type=int, default=97)
    v.add_argument("--curve", default="0,1,-1", help="2-torsion roots e1,e2,e3 (n or n/d)")
    v.add_argument("--method", choices=["factored", "naive"], default="factored")
    v.add_argument("--format", choices=["csv", "json"], default="csv")
    v.add_argument("--output", "-o")
    v.add_argument("--threads", type=int)
    v.add_argument("--no-timing", action="store_true")
    v.add_argument("--override-bp", type=_parse_override, action="append", default=[],
                   metavar="P:VALUE", help="corrupt b_p on the prediction side (negative testing)")

    e = sub.add_parser("eta", help="expand an eta quotient such as 1:3,7:3")
    e.add_argument("quotient")
    e.add_argument("terms", type=int)

    h = sub.add_parser("hodge", help="Hodge numbers of the Kummer threefold")
    h.add_argument("--rho", type=int, default=20)

    sub.add_parser("fibers", help="singular fibres of the Gamma_1(7) surface")

    c = sub.add_parser("count", help="point count at a single prime")
    c.add_argument("p", type=int)
    c.add_argument("target", choices=["surface", "curve", "kummer"])
    c.add_argument("--curve", default="0,1,-1")

    i = sub.add_parser("identities", help="check the hauptmodul maps against j")
    i.add_argument("terms", type=int, nargs="?", default=30)
    return parser


def main(argv=None, out=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = out or sys.stdout
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")

    curve = None
    if hasattr(args, "curve"):
        try:
            curve = EllipticCurveQ.parse(args.curve)
        except ValueError as exc:
            parser.error(f"invalid curve: {exc}")

    try:
        if args.command == "verify":
            try:
                config = VerifyConfig(args.pmin, args.pmax, curve, args.method, args.format,
                                      args.output, args.threads, not args.no_timing,
                                      dict(args.override_bp))
            except ValueError as exc:
                parser.error(str(exc))
            return cmd_verify(config, out)
        if args.command == "eta":
            if args.terms < 1:
                parser.error("terms must be positive")
            return cmd_eta(args.quotient, args.terms, out)
        if args.command == "hodge":
            return cmd_hodge(out, args.rho)
        if args.command == "fibers":
            return cmd_fibers(out)
        if args.command == "count":
            if args.p < 3 or not is_prime(args.p) or args.p >= MAX_PRIME:
                parser.error(f"{args.p} is not a supported prime")
            return cmd_count(args.p, args.target, curve, out)
        if args.command == "identities":
            if args.terms < 1:
                parser.error("terms must be positive")
            return cmd_identities(args.terms, out)
    except EtaParseError as exc:
        parser.error(str(exc))
    except BadPrime as exc:
        print(f"skipped: {exc}", file=sys.stderr)
        return 2
    except KummerError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 2


if __name__ == "__main__":
    sys.exit(main())

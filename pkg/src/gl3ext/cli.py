"""Command-line interface.

Exit status is 0 on success, 1 on usage errors and 2 on domain errors (for
instance a weight that is not p-restricted where one is required).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Sequence

from gl3ext.alcoves import classify_alcove, lambda_prime, pair_verdict
from gl3ext.chars import simple_char, tilting_char, weyl_char
from gl3ext.extcmp import MODES, ScanConfig, ext_compare, scan
from gl3ext.tensor import socle_tensor, summands_char, tensor_simple_alpha13
from gl3ext.weights import WeightTuple, parse_tuple, parse_weight

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN = 0, 1, 2


class UsageError(Exception):
    pass


class DomainError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    k = 2
    while k * k <= n:
        if n % k == 0:
            return False
        k += 1
    return True


def _weight(text: str):
    try:
        return parse_weight(text)
    except ValueError as e:
        raise UsageError(str(e)) from None


def _tuple(text: str, f: int | None) -> WeightTuple:
    try:
        lam = parse_tuple(text)
    except ValueError as e:
        raise UsageError(str(e)) from None
    if f is not None and len(lam) != f:
        raise DomainError(f"expected {f} slots, got {len(lam)} in {text!r}")
    return lam


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--p", type=int, required=True, help="prime, at least 5")
    common.add_argument("--out", help="write the result here instead of stdout")
    common.add_argument("--format", choices=("json", "csv"), default="json")

    parser = _Parser(prog="gl3ext", description="Serre weights of GL3 and Ext^1 comparison.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("classify", parents=[common], help="alcove region of a weight")
    s.add_argument("--weight", required=True)

    s = sub.add_parser("char", parents=[common], help="Weyl, simple or tilting character")
    s.add_argument("--weight", required=True)
    s.add_argument("--kind", choices=("weyl", "simple", "tilting"), default="weyl")

    s = sub.add_parser("tensor", parents=[common], help="summands of L(lam) x L(a13)")
    s.add_argument("--weight", required=True)
    s.add_argument("--literal", action="store_true", help="positive-root LT rule on C(2|3) as stated")

    for name, help_ in (
        ("socle", "socle of F(lam) x F(a13)^[j0]"),
        ("pair", "good/bad status of (lam, lam')"),
        ("ext", "Ext^1 comparison verdict"),
    ):
        s = sub.add_parser(name, parents=[common], help=help_)
        s.add_argument("--f", type=int)
        s.add_argument("--lambda", dest="lam", required=True, help="slots 'a,b,c' joined by ';'")
        if name == "socle":
            s.add_argument("--j0", type=int, required=True)
        else:
            s.add_argument("--lambda-prime", dest="lam2", required=True)

    s = sub.add_parser("scan", parents=[common], help="verdicts over a family of pairs")
    s.add_argument("--f", type=int, default=1)
    s.add_argument("--mode", choices=MODES, default="shift")
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--samples", type=int, default=1000)
    s.add_argument("--max-pairs", type=int, default=500_000)
    return parser


def _char_json(ch) -> dict:
    return {"dim": ch.dim, "character": ch.to_json()}


def _run(args) -> object:
    p = args.p
    cmd = args.command
    if cmd == "classify":
        w = _weight(args.weight)
        region = classify_alcove(w, p)
        out = {"weight": str(w), "region": region.value}
        try:
            out["lambda_prime"] = str(lambda_prime(w, p))
        except ValueError:
            out["lambda_prime"] = None
        return out
    if cmd == "char":
        w = _weight(args.weight)
        fn = {"weyl": lambda x: weyl_char(x), "simple": lambda x: simple_char(x, p),
              "tilting": lambda x: tilting_char(x, p)}[args.kind]
        return {"kind": args.kind, "weight": str(w), **_char_json(fn(w))}
    if cmd == "tensor":
        w = _weight(args.weight)
        summands = tensor_simple_alpha13(w, p, literal=args.literal)
        return {
            "weight": str(w),
            "summands": [s.to_json() for s in summands],
            "dim": summands_char(summands, p).dim,
        }
    if cmd == "scan":
        if args.f < 1:
            raise DomainError("f must be positive")
        if args.jobs < 1:
            raise UsageError("--jobs must be positive")
        cfg = ScanConfig(p=p, f=args.f, mode=args.mode, seed=args.seed, samples=args.samples,
                         max_pairs=args.max_pairs, jobs=args.jobs)
        return scan(cfg)

    lam = _tuple(args.lam, args.f)
    if cmd == "socle":
        if not 0 <= args.j0 < len(lam):
            raise DomainError(f"j0={args.j0} out of range for f={len(lam)}")
        return socle_tensor(lam, args.j0, p).to_json()
    lam2 = _tuple(args.lam2, len(lam))
    if cmd == "pair":
        return pair_verdict(lam, lam2, p).to_json()
    return ext_compare(lam, lam2, p).to_json()


def _scan_csv(result) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["lambda", "lambda_prime", "status", "bad_forward", "bad_backward", "h1_dim", "matches"])
    for r in result.records:
        matches = " ".join(f"{m['j0']}:{m['alpha']}:{int(m['good'])}" for m in r["matches"])
        w.writerow([r["lambda"], r["lambda_prime"], r["status"], int(r["bad_forward"]),
                    int(r["bad_backward"]), r["h1_dim"], matches])
    return buf.getvalue()


def _render(result, fmt: str) -> str:
    if fmt == "csv":
        if not hasattr(result, "records"):
            raise UsageError("--format csv is only available for scan")
        return _scan_csv(result)
    if hasattr(result, "to_json"):
        result = result.to_json()
    return json.dumps(result, sort_keys=True, indent=1) + "\n"


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if not (_is_prime(args.p) and args.p >= 5):
            raise DomainError(f"p must be a prime at least 5, got {args.p}")
        text = _render(_run(args), args.format)
    except UsageError as e:
        print(e, file=sys.stderr)
        return EXIT_USAGE
    except (DomainError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_DOMAIN
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())

"""Command-line interface.

Subcommands: gen, neighbors, card, rank, map, verify.  Exit codes are a
stable contract: 0 success, 1 usage error, 2 domain error (parameters or
fractions outside a sequence), 3 verification failure.  Results go to
standard output, diagnostics to standard error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Sequence

from . import counting, maps, neighbors, verify
from .fraction import DomainError, Fraction, parse_fraction
from .sequences import (
    MAX_ENUM_ORDER,
    SequenceKind,
    SequenceSpec,
    enumerate_sequence,
    generate_sequence,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DOMAIN = 2
EXIT_VERIFY = 3

_KINDS = [kind.value for kind in SequenceKind]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(message)


def _require_m(args: argparse.Namespace) -> int:
    kind = SequenceKind(args.kind)
    if args.m is None and kind is not SequenceKind.FULL:
        raise UsageError(f"kind {kind.value!r} requires -m")
    return 0 if args.m is None else args.m


def _spec_metadata(spec: SequenceSpec) -> dict:
    return {"kind": spec.kind.value, "n": spec.n, "m": spec.m}


def _emit_fractions(fractions: list[Fraction], fmt: str, metadata: dict) -> None:
    if fmt == "plain":
        print(" ".join(str(f) for f in fractions))
    elif fmt == "json":
        payload = {"fractions": [str(f) for f in fractions], "metadata": metadata}
        print(json.dumps(payload))
    else:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["num", "den"])
        for f in fractions:
            writer.writerow([f.num, f.den])
        sys.stdout.write(buffer.getvalue())


def cmd_gen(args: argparse.Namespace) -> int:
    spec = SequenceSpec(SequenceKind(args.kind), args.n, _require_m(args))
    fractions = generate_sequence(spec)
    metadata = _spec_metadata(spec) | {"cardinality": len(fractions)}
    _emit_fractions(fractions, args.format, metadata)
    return EXIT_OK


def cmd_neighbors(args: argparse.Namespace) -> int:
    spec = SequenceSpec(SequenceKind(args.kind), args.n, _require_m(args))
    x = _parse_fraction_arg(args.fraction)
    result = neighbors.sequence_neighbors(spec, x)
    if result.predecessor is None or result.successor is None:
        raise DomainError(f"{x} is an endpoint of the sequence; no two-sided neighbors")
    if args.format == "json":
        payload = {
            "predecessor": str(result.predecessor),
            "successor": str(result.successor),
            "metadata": _spec_metadata(spec) | {"target": str(x), "method": "closed-form"},
        }
        print(json.dumps(payload))
    else:
        print(f"{result.predecessor} {result.successor}")
    return EXIT_OK


def _cardinality(spec: SequenceSpec) -> tuple[int, str, dict[str, int]]:
    n, m = spec.n, spec.m
    if spec.kind is SequenceKind.FULL:
        return counting.full_cardinality(n), "moebius-sum", counting.f_cardinality_variants(n, n)
    assert m is not None
    if spec.kind is SequenceKind.FNUM:
        return counting.f_cardinality(n, m), "moebius-sum", counting.f_cardinality_variants(n, m)
    if spec.kind is SequenceKind.GDIFF:
        return counting.g_cardinality(n, m), "phi-sum", counting.g_cardinality_variants(n, m)
    if spec.kind is SequenceKind.BOOLEAN:
        return (
            counting.boolean_cardinality(n, m),
            "half-sum",
            counting.boolean_cardinality_variants(n, m),
        )
    # Half sizes via the order-preserving bijections onto fnum families.
    if spec.kind is SequenceKind.BOOLEAN_LEFT:
        q, p = n - m, m
    else:
        q, p = m, n - m
    return counting.f_cardinality(q, p), "moebius-sum", counting.f_cardinality_variants(q, p)


def cmd_card(args: argparse.Namespace) -> int:
    spec = SequenceSpec(SequenceKind(args.kind), args.n, _require_m(args))
    value, method, variants = _cardinality(spec)
    if args.format == "json":
        payload = {
            "cardinality": value,
            "metadata": _spec_metadata(spec) | {"method": method, "variants": variants},
        }
        print(json.dumps(payload))
    else:
        print(value)
    return EXIT_OK


def cmd_rank(args: argparse.Namespace) -> int:
    spec = SequenceSpec(SequenceKind(args.kind), args.n, _require_m(args))
    x = _parse_fraction_arg(args.fraction)
    if spec.kind is SequenceKind.GDIFF:
        assert spec.m is not None
        variants = counting.g_rank_variants(spec.n, spec.m, x)
        value, method = variants["phi-sum"], "phi-sum"
    else:
        seq = enumerate_sequence(spec, max_order=args.max_order)
        if x not in seq:
            raise DomainError(f"{x} is not in the {spec.kind.value} family n={spec.n}, m={spec.m}")
        value, method, variants = seq.index(x), "oracle-scan", {}
    if args.format == "json":
        metadata = _spec_metadata(spec) | {"target": str(x), "method": method}
        if variants:
            metadata["variants"] = variants
        print(json.dumps({"rank": value, "metadata": metadata}))
    else:
        print(value)
    return EXIT_OK


def cmd_map(args: argparse.Namespace) -> int:
    x = _parse_fraction_arg(args.fraction)
    entry = maps.get_map(args.name)
    if args.m is None and entry.id != "mirror_full":
        raise UsageError(f"map {entry.id!r} requires -m")
    image = maps.apply_named(args.name, args.n, 0 if args.m is None else args.m, x)
    if args.format == "json":
        payload = {
            "image": str(image),
            "metadata": {"map": args.name, "n": args.n, "m": args.m, "argument": str(x)},
        }
        print(json.dumps(payload))
    else:
        print(image)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    selected = []
    if args.all_maps:
        selected.append("maps")
    if args.identities:
        selected.append("identities")
    if args.neighbors:
        selected.append("neighbors")
    if not selected:
        selected = ["maps", "identities", "neighbors"]

    rows = []
    if "maps" in selected:
        rows += verify.map_suite(args.max_n)
    if "identities" in selected:
        rows += verify.identity_suite(max_n=args.max_n, enum_cross_max=min(args.max_n, 30))
    if "neighbors" in selected:
        rows += verify.neighbor_suite(args.max_n)

    width = max(len(row.name) for row in rows)
    print(f"{'suite':<{width}}  {'checks':>8}  {'failures':>8}  status")
    for row in rows:
        status = "ok" if row.ok else f"FAIL ({row.first_failure})"
        print(f"{row.name:<{width}}  {row.checks:>8}  {row.failures:>8}  {status}")
    failed = sum(row.failures for row in rows)
    total = sum(row.checks for row in rows)
    if failed:
        print(f"{failed} of {total} checks failed", file=sys.stderr)
        return EXIT_VERIFY
    print(f"all {total} checks passed")
    return EXIT_OK


def _parse_fraction_arg(text: str) -> Fraction:
    try:
        return parse_fraction(text)
    except DomainError as err:
        raise UsageError(str(err)) from err
    except ValueError as err:
        raise UsageError(str(err)) from err


def _add_common(parser: argparse.ArgumentParser, with_m: bool = True) -> None:
    parser.add_argument("--kind", required=True, choices=_KINDS, help="sequence family")
    parser.add_argument("-n", type=int, required=True, help="order of the ambient Farey sequence")
    if with_m:
        parser.add_argument("-m", type=int, default=None, help="family parameter (see --kind)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="fareysub", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p_gen = sub.add_parser("gen", help="print a whole sequence in ascending order")
    _add_common(p_gen)
    p_gen.add_argument("--format", choices=["plain", "json", "csv"], default="plain")
    p_gen.set_defaults(func=cmd_gen)

    p_nb = sub.add_parser("neighbors", help="closed-form predecessor and successor")
    _add_common(p_nb)
    p_nb.add_argument("fraction", help="reduced fraction h/k interior to the sequence")
    p_nb.add_argument("--format", choices=["plain", "json"], default="plain")
    p_nb.set_defaults(func=cmd_neighbors)

    p_card = sub.add_parser("card", help="cardinality by closed formula")
    _add_common(p_card)
    p_card.add_argument("--format", choices=["plain", "json"], default="plain")
    p_card.set_defaults(func=cmd_card)

    p_rank = sub.add_parser("rank", help="zero-based index of a fraction")
    _add_common(p_rank)
    p_rank.add_argument("fraction", help="reduced fraction h/k in the sequence")
    p_rank.add_argument("--format", choices=["plain", "json"], default="plain")
    p_rank.add_argument(
        "--max-order",
        type=int,
        default=MAX_ENUM_ORDER,
        help="bound for the enumeration fallback used by non-gdiff kinds",
    )
    p_rank.set_defaults(func=cmd_rank)

    p_map = sub.add_parser("map", help="apply a registered monotone map")
    p_map.add_argument("--name", required=True, help="map identifier from the catalog")
    p_map.add_argument("-n", type=int, required=True)
    p_map.add_argument("-m", type=int, default=None)
    p_map.add_argument("fraction", help="reduced fraction h/k in the map's domain")
    p_map.add_argument("--format", choices=["plain", "json"], default="plain")
    p_map.set_defaults(func=cmd_map)

    p_verify = sub.add_parser("verify", help="replay formulas and maps against the oracle")
    p_verify.add_argument("--all-maps", action="store_true", help="verify the map catalog")
    p_verify.add_argument("--identities", action="store_true", help="verify counting identities")
    p_verify.add_argument("--neighbors", action="store_true", help="verify neighbor formulas")
    p_verify.add_argument("--max-n", type=int, default=20, help="sweep bound on the order n")
    p_verify.set_defaults(func=cmd_verify)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as err:
        print(f"fareysub: error: {err}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as err:
        print(f"fareysub: error: {err}", file=sys.stderr)
        return EXIT_USAGE
    except DomainError as err:
        print(f"fareysub: domain error: {err}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())

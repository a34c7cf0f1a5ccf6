"""Command-line surface.

Every verb is a thin shell over the library modules; no domain logic lives
here.  Two output formats: `table` for humans and `machine` for golden
tests (one record per line, tab-separated key=value pairs, multipartitions
as [(2),()]-style lists, matrices as semicolon-separated rows).

Exit codes: 0 success, 1 domain or usage errors (bad witness, q=1 blocks,
malformed parameter strings), 2 internal consistency failures (fast/oracle
disagreement, audit mismatch, regular-representation failure).
"""

import argparse
import sys

from . import bn as bn_mod
from . import oracle, structure
from .blocks import BadWitnessError, QOneBlocksError, block_partition, lambda_family
from .combinatorics import Multipartition, multipartition_count
from .params import (
    KappaInput,
    NoWitnessError,
    ParamScheme,
    SchemeParseError,
    parse_kappa,
    parse_scheme,
    scheme_from_kappa,
)
from .simples import simple_count
from .structure import InconsistentRegimeError

DOMAIN_ERRORS = (
    SchemeParseError,
    QOneBlocksError,
    BadWitnessError,
    NoWitnessError,
    ValueError,
)


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # usage problems are domain errors, exit 1
        self.print_usage(sys.stderr)
        raise SchemeParseError(message)


def format_multipartition(mp: Multipartition) -> str:
    return "[" + ",".join("(" + ",".join(str(p) for p in part) + ")" for part in mp) + "]"


def format_matrix(rows) -> str:
    return ";".join(",".join(str(x) for x in row) for row in rows)


def _format_witness(witness) -> str:
    if witness is None:
        return "none"
    i, j, c = witness
    return f"({i},{j},{c:+d})"


def _emit(out, pairs) -> None:
    out.write("\t".join(f"{k}={v}" for k, v in pairs) + "\n")


def _emit_table(out, pairs, indent=0) -> None:
    for k, v in pairs:
        out.write("  " * indent + f"{k}: {v}\n")


def _resolve_params(args) -> tuple[ParamScheme, int, KappaInput | None]:
    if (args.scheme is None) == (args.kappa is None):
        raise SchemeParseError("exactly one of --scheme and --kappa is required")
    if args.scheme is not None:
        if args.m is None or args.n is None:
            raise SchemeParseError("--scheme requires --m and --n")
        return parse_scheme(args.scheme, args.m), args.n, None
    kappa = parse_kappa(args.kappa)
    if args.m is not None and args.m != kappa.m:
        raise SchemeParseError("--m disagrees with the kappa string")
    if args.n is not None and args.n != kappa.n:
        raise SchemeParseError("--n disagrees with the kappa string")
    return scheme_from_kappa(kappa), kappa.n, kappa


def _cmd_count_simples(args, out) -> int:
    scheme, n, _ = _resolve_params(args)
    count, non_simple = simple_count(scheme, n)
    pairs = [
        ("m", scheme.m),
        ("n", n),
        ("e", scheme.e),
        ("simple_count", count),
        ("irrep_count", multipartition_count(scheme.m, n)),
        ("non_simple", "|".join(format_multipartition(mp) for mp in non_simple) or "none"),
    ]
    _emit(out, pairs) if args.format == "machine" else _emit_table(out, pairs)
    return 0


def _cmd_classify(args, out) -> int:
    scheme, n, kappa = _resolve_params(args)
    report = structure.classify_regime(scheme, n, kappa=kappa)
    pairs = [
        ("kind", report.kind),
        ("simple_count", report.simple_count),
        ("irrep_count", report.irrep_count),
        ("witness", _format_witness(report.witness)),
        (
            "non_kleshchev",
            format_multipartition(report.non_kleshchev) if report.non_kleshchev else "none",
        ),
    ]
    if report.r is not None:
        pairs += [("r", report.r), ("dim_L_chi", report.dim_L_chi)]
    _emit(out, pairs) if args.format == "machine" else _emit_table(out, pairs)
    return 0


def _cmd_blocks(args, out) -> int:
    scheme, n, _ = _resolve_params(args)
    partition = block_partition(scheme, n)
    exceptional = partition.exceptional_index
    head = [
        ("m", scheme.m),
        ("n", n),
        ("block_count", len(partition.blocks)),
        ("exceptional_index", exceptional if exceptional is not None else "none"),
    ]
    if args.format == "machine":
        _emit(out, head)
        for idx, block in enumerate(partition.blocks):
            _emit(
                out,
                [
                    ("block", idx),
                    ("size", len(block)),
                    ("members", "|".join(format_multipartition(mp) for mp in block)),
                ],
            )
    else:
        _emit_table(out, head)
        for idx, block in enumerate(partition.blocks):
            members = " ".join(format_multipartition(mp) for mp in block)
            out.write(f"  block {idx} (size {len(block)}): {members}\n")
    return 0


def _cmd_block_structure(args, out) -> int:
    scheme, n, kappa = _resolve_params(args)
    report = structure.classify_regime(scheme, n, kappa=kappa)
    if report.kind != structure.ALMOST_SEMISIMPLE:
        raise BadWitnessError(f"bad-witness: point is {report.kind}")
    bs = structure.block_structure(report, scheme, n)
    pairs = [
        ("n", bs.n),
        (
            "specht_order",
            "|".join(format_multipartition(mp) for mp in bs.specht_order)
            if bs.specht_order
            else "none",
        ),
        (
            "simple_order",
            "|".join(format_multipartition(mp) for mp in bs.simple_order)
            if bs.simple_order
            else "none",
        ),
        ("decomposition", format_matrix(bs.decomposition)),
        ("cartan", format_matrix(bs.cartan)),
        ("hom_dims", format_matrix(bs.hom_dims)),
        ("kz_dims", ",".join(str(x) for x in bs.kz_dims)),
        ("pkz_multiplicities", ",".join(str(x) for x in bs.pkz_multiplicities)),
        ("exterior_dims", ",".join(str(x) for x in bs.exterior_dims)),
    ]
    if args.format == "machine":
        for pair in pairs:
            _emit(out, [pair])
    else:
        _emit_table(out, pairs)
    return 0


def _cmd_bn_algebra(args, out) -> int:
    if args.n is None:
        raise SchemeParseError("bn-algebra requires --n")
    algebra = bn_mod.build_bn(args.n)
    consistent = bn_mod.regular_representation_consistent(algebra)
    pairs = [
        ("n", algebra.n),
        ("dim", algebra.dimension),
        ("associativity", "pass" if consistent else "fail"),
    ]
    if args.format == "machine":
        _emit(out, pairs)
        out.write(algebra.table_text() + "\n")
    else:
        _emit_table(out, pairs)
        out.write(algebra.table_text() + "\n")
    return 0 if consistent else 2


def _cmd_sweep(args, out) -> int:
    grid = _parse_grid(args.grid) if args.grid else oracle.SweepGrid()
    rows = oracle.regime_locus(grid)
    summary = oracle.locus_summary(rows)
    if args.format == "machine":
        for row in rows:
            _emit(
                out,
                [
                    ("m", row.m),
                    ("n", row.n),
                    ("scheme", row.scheme.describe()),
                    ("kind", row.fast_kind),
                    ("oracle_kind", row.oracle_kind),
                    ("agree", str(row.agree).lower()),
                    ("predicted_regime", str(row.predicted_regime).lower()),
                    ("predicted_match", str(row.predicted_match).lower()),
                ],
            )
        _emit(out, sorted(summary.items()))
    else:
        _emit_table(out, sorted(summary.items()))
    failures = summary["disagreements"] + summary["prediction_mismatches"]
    return 2 if failures else 0


def _cmd_audit(args, out) -> int:
    scheme, n, kappa = _resolve_params(args)
    report = structure.classify_regime(scheme, n, kappa=kappa)
    if report.kind != structure.ALMOST_SEMISIMPLE:
        raise BadWitnessError(f"bad-witness: point is {report.kind}")
    total, expected = structure.hecke_dimension_audit(report, scheme, n)
    pairs = [
        ("total", total),
        ("expected", expected),
        ("match", str(total == expected).lower()),
    ]
    _emit(out, pairs) if args.format == "machine" else _emit_table(out, pairs)
    return 0 if total == expected else 2


def _parse_grid(text: str) -> oracle.SweepGrid:
    """Grid override `m=1,2;n=2,3;e=0,1,2` (e omitted: 0..2n+1 per n)."""
    fields = {}
    for chunk in text.split(";"):
        if "=" not in chunk:
            raise SchemeParseError(f"bad grid chunk {chunk!r}")
        key, value = chunk.split("=", 1)
        if key not in ("m", "n", "e"):
            raise SchemeParseError(f"unknown grid key {key!r}")
        try:
            fields[key] = tuple(int(v) for v in value.split(","))
        except ValueError:
            raise SchemeParseError(f"bad grid values {value!r}") from None
    grid = oracle.SweepGrid()
    return oracle.SweepGrid(
        m_values=fields.get("m", grid.m_values),
        n_values=fields.get("n", grid.n_values),
        e_values=fields.get("e"),
    )


_COMMANDS = {
    "count-simples": _cmd_count_simples,
    "blocks": _cmd_blocks,
    "classify": _cmd_classify,
    "block-structure": _cmd_block_structure,
    "bn-algebra": _cmd_bn_algebra,
    "sweep": _cmd_sweep,
    "audit": _cmd_audit,
}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="akregime",
        description="Exact simple-module and block classification for "
        "Ariki-Koike algebras at symbolic parameters.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)
    for verb in _COMMANDS:
        p = sub.add_parser(verb)
        p.add_argument("--m", type=int, default=None)
        p.add_argument("--n", type=int, default=None)
        p.add_argument("--scheme", type=str, default=None)
        p.add_argument("--kappa", type=str, default=None)
        p.add_argument("--format", choices=("table", "machine"), default="table")
        if verb == "sweep":
            p.add_argument("--grid", type=str, default=None)
    return parser


def run(argv, out) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.verb](args, out)
    except InconsistentRegimeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except DOMAIN_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run(sys.argv[1:], sys.stdout))


if __name__ == "__main__":
    main()

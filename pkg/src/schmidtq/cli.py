"""Command-line front end.

Five subcommands: ``verify`` runs an identity or counting check and
exits 0/1, ``coeff`` prints one exact coefficient, ``witness`` lists the
enumerated objects behind a coefficient, ``map`` applies a bijection,
and ``enumerate`` streams serialized objects.  Usage problems exit 2.
All output is deterministic; ``--json`` emits the verification report
with every number as a decimal string.
"""

from __future__ import annotations

import argparse
import sys

from .bijections import (
    color_conjugate,
    color_conjugate_inverse,
    decompose_multiplicity,
    glaisher_expand,
    glaisher_reduce,
    merge_partitions,
    mork_forward,
    mork_inverse,
)
from .colored import ColoredPartition, colored_partitions, overpartitions
from .identities import (
    COUNTING_THEOREMS,
    SERIES_IDENTITIES,
    cauchy_check,
    enum_side,
    product_side,
    sum_side,
    t1_slice_check,
    verify_counting,
    verify_identity,
    witnesses,
)
from .partitions import Partition, partitions_of, partitions_with_schmidt_weight

_Q_GRADED = ("ak_trivariate", "overpartition", "cor22")
_S_GRADED = ("mork_odd", "mork_even", "psi_all", "psi_dm")
_PSI = ("psi_all", "psi_dm")
_VERIFY_IDS = SERIES_IDENTITIES + COUNTING_THEOREMS + ("cauchy", "t1_slice")


class UsageError(ValueError):
    # ValueError so argparse turns a raise inside a type= callable into
    # its own usage error (exit 2) instead of crashing.
    pass


def _parse_residues(text):
    try:
        values = tuple(int(p) for p in text.split(","))
    except ValueError:
        raise UsageError(f"residue list must be comma-separated integers, got {text!r}")
    if not values:
        raise UsageError("residue list must not be empty")
    return values


def _parse_monomial(text):
    exps = {}
    if text.strip() == "":
        return exps
    for piece in text.split(","):
        name, sep, value = piece.partition("=")
        name = name.strip()
        if not sep or name not in ("q", "t1", "t2", "s"):
            raise UsageError(f"bad monomial component {piece!r}; use q=6,t1=1,t2=2")
        try:
            e = int(value)
        except ValueError:
            raise UsageError(f"exponent in {piece!r} is not an integer")
        if e < 0 or name in exps:
            raise UsageError(f"bad monomial component {piece!r}")
        exps[name] = e
    return exps


def _contiguous_block(residues):
    # The block statistics take residues 1..i; anything else has no
    # product side here.
    block = tuple(range(1, len(residues) + 1))
    if tuple(sorted(set(residues))) != block:
        raise UsageError(f"residues must be 1..i for this identity, got {residues}")
    return len(block)


def _need(args, flag):
    value = getattr(args, flag.lstrip("-").replace("-", "_"))
    if value is None:
        raise UsageError(f"{flag} is required here")
    return value


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="schmidtq",
        description="Exact checks and maps for Schmidt-type partition statistics.",
        allow_abbrev=False,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="check one identity or counting theorem")
    p_verify.add_argument("id", choices=_VERIFY_IDS)
    p_verify.add_argument("--m", type=int)
    p_verify.add_argument("--s", type=_parse_residues, metavar="R1,R2,...")
    p_verify.add_argument("--n", type=int)
    p_verify.add_argument("--q-cap", type=int, dest="q_cap")
    p_verify.add_argument("--s-cap", type=int, dest="s_cap")
    p_verify.add_argument("--json", action="store_true")

    p_coeff = sub.add_parser("coeff", help="print one exact coefficient of one side")
    p_coeff.add_argument("--identity", required=True, choices=SERIES_IDENTITIES)
    p_coeff.add_argument("--side", required=True, choices=("sum", "product", "enum"))
    p_coeff.add_argument("--mono", required=True, type=_parse_monomial, metavar="q=6,t1=1,t2=2")
    p_coeff.add_argument("--m", type=int)
    p_coeff.add_argument("--s", type=_parse_residues, metavar="R1,R2,...")
    p_coeff.add_argument("--q-cap", type=int, dest="q_cap")
    p_coeff.add_argument("--s-cap", type=int, dest="s_cap")

    p_witness = sub.add_parser("witness", help="list objects hitting one monomial")
    p_witness.add_argument("--identity", required=True, choices=SERIES_IDENTITIES)
    p_witness.add_argument("--mono", required=True, type=_parse_monomial, metavar="q=6,t1=1,t2=2")
    p_witness.add_argument("--m", type=int)
    p_witness.add_argument("--s", type=_parse_residues, metavar="R1,R2,...")

    p_map = sub.add_parser("map", help="apply a bijection to one partition")
    p_map.add_argument(
        "--bijection", required=True, choices=("psi", "mork", "glaisher", "decompose")
    )
    p_map.add_argument("--m", type=int)
    p_map.add_argument("--s", type=_parse_residues, metavar="R1,R2,...")
    p_map.add_argument("--partition", required=True)
    p_map.add_argument("--inverse", action="store_true")

    p_enum = sub.add_parser("enumerate", help="stream serialized objects")
    p_enum.add_argument("--class", required=True, dest="cls",
                        choices=("P", "D", "F", "R", "cs", "over"))
    p_enum.add_argument("--n", type=int)
    p_enum.add_argument("--m", type=int)
    p_enum.add_argument("--s", type=_parse_residues, metavar="R1,R2,...")
    p_enum.add_argument("--top", type=int)
    p_enum.add_argument("--schmidt-weight", type=int, dest="schmidt_weight")

    return parser


def _cmd_verify(args, out):
    ident = args.id
    if ident in _Q_GRADED:
        report = verify_identity(ident, qcap=_need(args, "--q-cap"))
    elif ident in ("mork_odd", "mork_even"):
        report = verify_identity(ident, scap=_need(args, "--s-cap"))
    elif ident in _PSI:
        i = _contiguous_block(_need(args, "--s"))
        report = verify_identity(ident, scap=_need(args, "--s-cap"), m=_need(args, "--m"), i=i)
    elif ident in ("schmidt", "uncu"):
        report = verify_counting(ident, n=_need(args, "--n"), m=args.m, s=args.s)
    elif ident in ("ak_main", "franklin_ext"):
        report = verify_counting(
            ident, n=_need(args, "--n"), m=_need(args, "--m"), s=_need(args, "--s")
        )
    elif ident == "cauchy":
        report = cauchy_check(_need(args, "--n"), args.q_cap)
    else:
        report = t1_slice_check(_need(args, "--n"), _need(args, "--q-cap"))

    if args.json:
        print(report.to_json_text(), file=out)
    else:
        print(f"{report.theorem}: {report.status}", file=out)
        if not report.passed:
            print(f"  {report.evidence_text()}", file=out)
    return 0 if report.passed else 1


def _side_series(ident, side, exps, args):
    if ident in _Q_GRADED:
        needed = max([exps.get(v, 0) for v in ("q", "t1", "t2")], default=0)
        if exps.get("s"):
            raise UsageError(f"{ident} has no variable s")
        qcap = args.q_cap if args.q_cap is not None else needed
        if qcap < needed:
            raise UsageError(f"--q-cap {qcap} is below the requested exponents")
        inner = "overpartition" if ident == "cor22" and side != "enum" else ident
        if side == "sum":
            return sum_side(inner, qcap)
        if side == "product":
            return product_side(inner, qcap=qcap)
        return enum_side(ident, qcap=qcap)
    needed = max(exps.get("q", 0), exps.get("s", 0))
    if exps.get("t1") or exps.get("t2"):
        raise UsageError(f"{ident} has no variables t1, t2")
    scap = args.s_cap if args.s_cap is not None else needed
    if scap < needed:
        raise UsageError(f"--s-cap {scap} is below the requested exponents")
    if side == "sum":
        raise UsageError(f"{ident} has no sum side")
    kwargs = {"scap": scap}
    if ident in _PSI:
        kwargs["m"] = _need(args, "--m")
        kwargs["i"] = _contiguous_block(_need(args, "--s"))
    if side == "product":
        return product_side(ident, **kwargs)
    return enum_side(ident, **kwargs)


def _cmd_coeff(args, out):
    series = _side_series(args.identity, args.side, args.mono, args)
    ctx = series.context
    mono = ctx.monomial(**{v: e for v, e in args.mono.items() if v in ctx.variables})
    print(series.coefficient(mono), file=out)
    return 0


def _cmd_witness(args, out):
    kwargs = {}
    if args.identity in _PSI:
        kwargs["m"] = _need(args, "--m")
        kwargs["i"] = _contiguous_block(_need(args, "--s"))
    try:
        lines = witnesses(args.identity, args.mono, **kwargs)
    except ValueError as exc:
        raise UsageError(str(exc))
    for line in lines:
        print(line, file=out)
    return 0


def _split_pair(text):
    if text.count(";") != 1:
        raise UsageError(f"expected two ;-separated partitions, got {text!r}")
    a, b = text.split(";")
    return Partition.from_text(a), Partition.from_text(b)


def _cmd_map(args, out):
    name = args.bijection
    if name == "psi":
        m = _need(args, "--m")
        s = _need(args, "--s")
        if args.inverse:
            result = color_conjugate_inverse(ColoredPartition.from_text(args.partition), m, s)
        else:
            result = color_conjugate(Partition.from_text(args.partition), m, s)
    elif name == "mork":
        lam = Partition.from_text(args.partition)
        result = mork_inverse(lam) if args.inverse else mork_forward(lam)
    elif name == "glaisher":
        m = _need(args, "--m")
        if args.inverse:
            kept, banked = _split_pair(args.partition)
            result = glaisher_expand(kept, banked, m)
        else:
            kept, banked = glaisher_reduce(Partition.from_text(args.partition), m)
            print(f"{kept.to_text()};{banked.to_text()}", file=out)
            return 0
    else:
        m = _need(args, "--m")
        if args.inverse:
            low, bulk = _split_pair(args.partition)
            result = merge_partitions(low, bulk)
        else:
            low, bulk = decompose_multiplicity(Partition.from_text(args.partition), m)
            print(f"{low.to_text()};{bulk.to_text()}", file=out)
            return 0
    print(result.to_text(), file=out)
    return 0


def _cmd_enumerate(args, out):
    cls = args.cls
    if args.schmidt_weight is not None:
        if cls not in ("P", "D"):
            raise UsageError("--schmidt-weight applies to classes P and D only")
        if args.n is not None:
            raise UsageError("give either --n or --schmidt-weight, not both")
        m = args.m if args.m is not None else 2
        s = args.s if args.s is not None else (1,)
        stream = partitions_with_schmidt_weight(args.schmidt_weight, m, s, cls)
    elif cls in ("P", "D", "F", "R"):
        n = _need(args, "--n")
        if cls == "P":
            stream = partitions_of(n)
        else:
            stream = partitions_of(n, cls, _need(args, "--m"))
    elif cls == "cs":
        m = _need(args, "--m")
        top = args.top if args.top is not None else m + 1
        stream = colored_partitions(_need(args, "--n"), m, _need(args, "--s"), top)
    else:
        stream = overpartitions(_need(args, "--n"))
    for obj in stream:
        print(obj.to_text(), file=out)
    return 0


_HANDLERS = {
    "verify": _cmd_verify,
    "coeff": _cmd_coeff,
    "witness": _cmd_witness,
    "map": _cmd_map,
    "enumerate": _cmd_enumerate,
}


def run(argv=None):
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 on --help; pass both through
        return int(exc.code or 0)
    try:
        return _HANDLERS[args.command](args, sys.stdout)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()

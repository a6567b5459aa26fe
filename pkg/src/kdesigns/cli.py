"""Command-line interface.

Subcommands:

    gen kp --khat K [--out PATH]     construct a design and emit its file
    gen kc --khat K [--out PATH]
    gen k5 [--out PATH]
    params kp --khat K               closed-form parameters, no enumeration
    params kc --khat K
    params explode --v V --b B --r R --k K --lambda L --j J
    verify PATH [--t T]              brute-force check of a design file
    verify --stream kp --khat K      check a generated design without storing it
    explode PATH --j J [--out PATH]  replace blocks by their j-subsets
    witness --n N --khat K           shared-block counts for fixed edge pairs
    selftest                         run every bundled check

Exit codes: 0 success/balanced, 1 verification failure, 2 usage or input
error, 3 construction above the block-count ceiling.
"""

from __future__ import annotations

import argparse
import sys
from contextlib import nullcontext
from typing import IO

from .constructions import (
    DEFAULT_MAX_BLOCKS,
    CapacityError,
    build_k5_special,
    build_kc,
    build_kp,
    imbalance_witness,
    kc_parameters,
    kc_vertices,
    kp_parameters,
    kp_vertices,
)
from .design import (
    DesignParams,
    MalformedDesignError,
    TParams,
    binom,
    check_admissibility,
    is_symmetric,
    verify_bibd,
    verify_partitioned,
    verify_t_blocks,
    verify_t_design,
)
from .designfile import DesignFileError, read_design, write_design
from .exploded import explode_design, exploded_parameters
from .graph import edge_count
from .selftest import run_selftest
from .subgraphs import cycle_to_block, enumerate_cycles, enumerate_paths, path_to_block

__all__ = ["main", "entry"]


def _out_stream(path: str | None):
    return open(path, "w") if path else nullcontext(sys.stdout)


def _require_khat(args: argparse.Namespace) -> int:
    if args.khat is None:
        raise ValueError(f"'{args.family}' requires --khat")
    return args.khat


def _cmd_gen(args: argparse.Namespace) -> int:
    if args.family == "kp":
        design = build_kp(_require_khat(args), args.max_blocks)
    elif args.family == "kc":
        design = build_kc(_require_khat(args), args.max_blocks)
    else:
        design = build_k5_special()
    with _out_stream(args.out) as out:
        write_design(design, out)
    return 0


def _cmd_params(args: argparse.Namespace) -> int:
    if args.family == "kp":
        params = kp_parameters(_require_khat(args))
    elif args.family == "kc":
        params = kc_parameters(_require_khat(args))
    else:
        fields = {"v": args.v, "b": args.b, "r": args.r, "k": args.k, "lambda": args.lambda_}
        missing = [f"--{name}" for name, value in fields.items() if value is None]
        if args.j is None:
            missing.append("--j")
        if missing:
            raise ValueError(f"'explode' requires {' '.join(missing)}")
        source = DesignParams(args.v, args.b, args.r, args.k, args.lambda_)
        failure = check_admissibility(source)
        if failure is not None:
            raise ValueError(f"source parameters are inadmissible: {failure}")
        params = exploded_parameters(source, args.j)
    print(params)
    return 0


def _print_report(report, out: IO[str] = sys.stdout) -> None:
    print(f"verdict={report.verdict}", file=out)
    if report.params is not None:
        print(report.params, file=out)
        print(f"symmetric={'yes' if is_symmetric(report.params) else 'no'}", file=out)
    if report.witness is not None:
        print(f"witness: {report.witness}", file=out)


def _stream_family(family: str, khat: int):
    if family == "kp":
        n = kp_vertices(khat)
        return kp_parameters(khat), n, enumerate_paths, path_to_block
    n = kc_vertices(khat)
    return kc_parameters(khat), n, enumerate_cycles, cycle_to_block


def _cmd_verify(args: argparse.Namespace) -> int:
    if args.stream and args.path:
        raise ValueError("give either a design file or --stream, not both")
    if args.stream:
        khat = args.khat
        if khat is None:
            raise ValueError("--stream requires --khat")
        params, n, words, to_block = _stream_family(args.stream, khat)
        if params.b > args.max_blocks:
            raise CapacityError(
                f"streaming {args.stream} khat={khat} means {params.b} blocks, "
                f"above the ceiling of {args.max_blocks}"
            )
        v = edge_count(n)
        sources = [
            (lambda first=first: (to_block(w, n) for w in words(n, khat, first)))
            for first in range(n)
        ]
        report = verify_partitioned(v, sources, workers=args.workers)
        t_result = None
        if args.t is not None:
            t_result = verify_t_blocks(v, (to_block(w, n) for w in words(n, khat)), args.t)
    else:
        if not args.path:
            raise ValueError("give a design file or --stream kp/kc")
        with open(args.path) as f:
            design = read_design(f)
        report = verify_bibd(design)
        t_result = verify_t_design(design, args.t) if args.t is not None else None

    _print_report(report)
    ok = report.balanced
    if t_result is not None:
        if isinstance(t_result, TParams):
            print(t_result)
        else:
            print(f"t-witness: {t_result}")
            ok = False
    return 0 if ok else 1


def _cmd_explode(args: argparse.Namespace) -> int:
    with open(args.path) as f:
        design = read_design(f)
    sizes = {len(block) for block in design.blocks}
    if len(sizes) == 1:
        k = next(iter(sizes))
        if 2 <= args.j <= k:
            total = design.num_blocks * binom(k, args.j)
            if total > args.max_blocks:
                raise CapacityError(
                    f"explosion yields {total} blocks, above the ceiling of {args.max_blocks}"
                )
    exploded = explode_design(design, args.j)
    with _out_stream(args.out) as out:
        write_design(exploded, out)
    return 0


def _cmd_witness(args: argparse.Namespace) -> int:
    w = imbalance_witness(args.n, args.khat)
    print(f"lambda_adj={w.lambda_adj} lambda_non={w.lambda_non} {w.verdict}")
    return 0


def _cmd_selftest(args: argparse.Namespace) -> int:
    return 0 if run_selftest() else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kdesigns",
        description="Block designs from path and cycle subgraphs of complete graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="construct a design and emit its file")
    gen.add_argument("family", choices=["kp", "kc", "k5"])
    gen.add_argument("--khat", type=int, help="block size of the construction")
    gen.add_argument("--out", help="output path (default: stdout)")
    gen.add_argument("--max-blocks", type=int, default=DEFAULT_MAX_BLOCKS)
    gen.set_defaults(handler=_cmd_gen)

    params = sub.add_parser("params", help="print exact design parameters")
    params.add_argument("family", choices=["kp", "kc", "explode"])
    params.add_argument("--khat", type=int)
    params.add_argument("--v", type=int)
    params.add_argument("--b", type=int)
    params.add_argument("--r", type=int)
    params.add_argument("--k", type=int)
    params.add_argument("--lambda", dest="lambda_", type=int)
    params.add_argument("--j", type=int)
    params.set_defaults(handler=_cmd_params)

    verify = sub.add_parser("verify", help="check balance (and the t-design property)")
    verify.add_argument("path", nargs="?", help="design file to verify")
    verify.add_argument("--t", type=int, help="also check the t-design property")
    verify.add_argument("--stream", choices=["kp", "kc"], help="verify a construction on the fly")
    verify.add_argument("--khat", type=int)
    verify.add_argument("--workers", type=int, default=1, help="parallel fold width for --stream")
    verify.add_argument("--max-blocks", type=int, default=DEFAULT_MAX_BLOCKS)
    verify.set_defaults(handler=_cmd_verify)

    explode = sub.add_parser("explode", help="replace every block by its j-subsets")
    explode.add_argument("path")
    explode.add_argument("--j", type=int, required=True)
    explode.add_argument("--out")
    explode.add_argument("--max-blocks", type=int, default=DEFAULT_MAX_BLOCKS)
    explode.set_defaults(handler=_cmd_explode)

    witness = sub.add_parser("witness", help="shared-block counts for fixed edge pairs")
    witness.add_argument("--n", type=int, required=True, help="vertex count of the host graph")
    witness.add_argument("--khat", type=int, required=True)
    witness.set_defaults(handler=_cmd_witness)

    selftest = sub.add_parser("selftest", help="run every bundled check")
    selftest.set_defaults(handler=_cmd_selftest)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except CapacityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except MalformedDesignError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except DesignFileError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()

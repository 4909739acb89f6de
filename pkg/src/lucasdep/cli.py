"""Command line entry point: ``lucasdep {prove,lucas,search,cfrac,lll}``."""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys

from . import cfrac, lattice, mdep, pipeline
from .sequences import CACHE_ENV_VAR, lucas_term


def _k_range(text: str) -> tuple[int, int]:
    try:
        lo, hi = text.split("..") if ".." in text else (text, text)
        lo, hi = int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected A..B, got {text!r}")
    if lo > hi:
        raise argparse.ArgumentTypeError("empty k range")
    return lo, hi


def _write(doc: str, path: str | None) -> None:
    if path:
        with open(path, "w") as fh:
            fh.write(doc + "\n")
    else:
        print(doc)


def cmd_prove(args) -> int:
    lo, hi = (3, pipeline.LARGE_K) if args.full else args.k_range
    cfg = pipeline.ProofConfig(precision_bits=args.precision_bits, workers=args.workers)
    certs = pipeline.prove(range(lo, hi + 1), cfg)
    _write(pipeline.canonical_json(certs), args.report)
    for c in certs:
        sols = ", ".join(f"(m={m}, n={n})" for m, n in c.solutions) or "none"
        print(f"k={c.k}: n <= {c.n_bound_final}, searched n <= {c.searched.n_max}, solutions: {sols}",
              file=sys.stderr)
    return 0


def cmd_lucas(args) -> int:
    print(lucas_term(args.k, args.n))
    return 0


def cmd_search(args) -> int:
    window = mdep.SearchWindow(args.k_range, args.n_max, args.m_min)
    hits = mdep.search(window)
    print(json.dumps({"window": window.to_json(), "hits": [h.to_json() for h in hits]}, indent=2))
    return 0


def cmd_cfrac(args) -> int:
    source = cfrac.CONSTANTS.get(args.value) or cfrac.decimal_source(args.value)
    cf = cfrac.expand(source, args.M, args.bits)
    N = cf.first_index_above(args.M)
    doc = cf.to_json()
    if N is not None:
        a, idx = cfrac.max_quotient(cf, N)
        doc.update({"first_index_above_M": N, "max_quotient": a, "max_quotient_index": idx,
                    "legendre_gap": cfrac.legendre_gap(cf, args.M)})
    print(json.dumps(doc, indent=2))
    return 0


def cmd_lll(args) -> int:
    text = sys.stdin.read() if args.basis == "-" else open(args.basis).read()
    doc = json.loads(text)
    basis = lattice.LatticeBasis.from_json(doc) if isinstance(doc, dict) \
        else lattice.LatticeBasis.from_columns(doc)
    reduced = lattice.lll_reduce(basis)
    out = reduced.basis.to_json()
    out["swaps"] = reduced.swaps
    out["bstar_norms_sq"] = [str(reduced.bstar_norm_sq(j)) for j in range(basis.dim)]
    print(json.dumps(out, indent=2))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lucasdep", description=__doc__)
    parser.add_argument("-v", "--verbose", action="store_true")
    parser.add_argument("--cache-dir", help=f"term cache directory (also ${CACHE_ENV_VAR})")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("prove", help="run the per-k proof and write certificates")
    p.add_argument("--k-range", type=_k_range, default=(2, 25))
    p.add_argument("--full", action="store_true", help="all k in [3, 1000]; very long")
    p.add_argument("--precision-bits", type=int, default=256)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--report", help="write the JSON report here instead of stdout")
    p.set_defaults(func=cmd_prove)

    p = sub.add_parser("lucas", help="print L_n^(k)")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_lucas)

    p = sub.add_parser("search", help="dependent pairs in a window")
    p.add_argument("--k-range", type=_k_range, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--m-min", type=int, default=0)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("cfrac", help="continued fraction up to the first q_N > M")
    p.add_argument("value", help=f"one of {sorted(cfrac.CONSTANTS)} or a decimal")
    p.add_argument("--M", type=int, default=10 ** 114)
    p.add_argument("--bits", type=int)
    p.set_defaults(func=cmd_cfrac)

    p = sub.add_parser("lll", help="LLL-reduce a JSON basis (list of columns or {dim, columns})")
    p.add_argument("basis", nargs="?", default="-")
    p.set_defaults(func=cmd_lll)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    if args.cache_dir:
        os.environ[CACHE_ENV_VAR] = args.cache_dir
    try:
        return args.func(args)
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

"""Command line interface.

Exit codes: 0 success, 1 domain error (bad values, budget refusals,
unreadable caches), 2 usage error (unknown flags or malformed arguments).
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path

import mpmath

from . import __version__
from .bounds import bound_report
from .cache import MAGIC, VERSION, default_cache_path, read_cache, write_cache
from .congruence import classify_mod23
from .hecke import PrimeLocalData, factorize, tau_of_n, tau_prime_power
from .primality import is_probable_prime
from .reports import (
    bound_report_to_dict,
    census_to_dict,
    envelope,
    hit_from_dict,
    hit_to_dict,
    hits_to_csv,
    to_json,
)
from .search import census_by_residue, search_prime_tau, smallest_prime_tau
from .series import TauTable, delta_series
from .spectral import EvenIndexPoly, even_index_poly, root_set
from .verify import Verifier, format_results


def parse_big_int(text: str) -> int:
    """Exact integer from '123', '1_000', '1e40', or '3*10^40' style input."""
    t = text.replace("_", "")
    if re.fullmatch(r"\d+", t):
        return int(t)
    m = re.fullmatch(r"(\d+)[eE](\d+)", t)
    if m:
        return int(m.group(1)) * 10 ** int(m.group(2))
    m = re.fullmatch(r"(?:(\d+)\*)?10\^(\d+)", t)
    if m:
        return (int(m.group(1)) if m.group(1) else 1) * 10 ** int(m.group(2))
    raise argparse.ArgumentTypeError(f"cannot parse {text!r} as an exact integer")


def format_poly(poly: EvenIndexPoly) -> str:
    if poly.k == 0:
        return "1"
    parts = []
    for i, c in enumerate(poly.coeffs):
        if c == 0:
            continue
        xe, ye = i, poly.k - i
        factors = []
        if abs(c) != 1 or (xe == 0 and ye == 0):
            factors.append(str(abs(c)))
        if xe:
            factors.append("x" if xe == 1 else f"x^{xe}")
        if ye:
            factors.append("y" if ye == 1 else f"y^{ye}")
        term = "*".join(factors)
        if not parts:
            parts.append(term if c > 0 else f"-{term}")
        else:
            parts.append(("+ " if c > 0 else "- ") + term)
    return " ".join(parts)


def _table_for(limit: int, cache_arg: str | None) -> TauTable:
    path = Path(cache_arg) if cache_arg else default_cache_path()
    if path and path.exists():
        table = read_cache(path)
        if table.limit >= limit:
            return table
    return delta_series(limit)


def _require_prime(p: int) -> None:
    if p < 2 or not is_probable_prime(p):
        raise ValueError(f"{p} is not prime")


def _cmd_series(args) -> int:
    table = delta_series(args.limit)
    if args.out:
        write_cache(table, args.out)
        print(f"wrote {args.out} with tau(1..{table.limit})")
    else:
        out = sys.stdout
        out.write(f"{MAGIC} {VERSION}\n{table.limit}\n")
        for n, t in table.items():
            out.write(f"{n} {t}\n")
    return 0


def _cmd_tau(args) -> int:
    n = args.n
    if n < 1:
        raise ValueError("n must be >= 1")
    path = Path(args.cache) if args.cache else default_cache_path()
    if path and path.exists():
        table = read_cache(path)
        if n <= table.limit:
            print(table[n])
            return 0
    f = factorize(n)
    largest = max((p for p, _ in f.factors), default=1)
    table = delta_series(max(largest, 1))
    print(tau_of_n(f, {p: table[p] for p, _ in f.factors}))
    return 0


def _cmd_prime_power(args) -> int:
    _require_prime(args.p)
    if args.k < 0:
        raise ValueError("k must be >= 0")
    table = delta_series(args.p)
    print(tau_prime_power(PrimeLocalData(args.p, table[args.p]), args.k))
    return 0


def _cmd_classify(args) -> int:
    _require_prime(args.p)
    cls = classify_mod23(args.p)
    if cls.witness is not None:
        a, b = cls.witness
        print(f"{cls.tag.value} a={a} b={b}")
    else:
        print(cls.tag.value)
    return 0


def _cmd_congruence_table(args) -> int:
    if args.pmax < 2:
        raise ValueError("--pmax must be >= 2")
    table = delta_series(args.pmax)
    from .congruence import Class23Tag
    from .primality import primes_up_to
    from .reports import class23_to_dict

    predicted = {
        Class23Tag.NON_RESIDUE: 0,
        Class23Tag.PRINCIPAL_FORM: 2,
        Class23Tag.SPLIT_NON_PRINCIPAL: 22,
    }
    entries = []
    for p in primes_up_to(args.pmax):
        cls = classify_mod23(p)
        want = predicted.get(cls.tag)
        got = table[p] % 23
        entries.append(
            {
                "p": p,
                "class23": class23_to_dict(cls),
                "predicted_residue": want,
                "actual_residue": got,
                "match": (want == got) if want is not None else None,
            }
        )
    doc = envelope("congruence-table", {"pmax": args.pmax}, {"entries": entries})
    sys.stdout.write(to_json(doc))
    return 0


def _cmd_poly(args) -> int:
    poly = even_index_poly(args.k)
    print(format_poly(poly))
    if args.roots:
        if args.k < 1:
            raise ValueError("--roots needs k >= 1")
        digits = args.digits or max(50, 4 * args.k)
        rs = root_set(args.k, digits)
        for j, alpha in enumerate(rs.alphas, start=1):
            print(f"alpha[{j}] = {mpmath.nstr(alpha, digits)}")
    return 0


def _cmd_search(args) -> int:
    hits = search_prime_tau(args.pmax, args.kmax, args.vmax)
    if args.csv:
        sys.stdout.write(hits_to_csv(hits))
        return 0
    params = {
        "pmax": args.pmax,
        "kmax": args.kmax,
        "vmax": str(args.vmax),
    }
    doc = envelope("search", params, {"count": len(hits), "hits": [hit_to_dict(h) for h in hits]})
    sys.stdout.write(to_json(doc))
    return 0


def _cmd_smallest_prime(args) -> int:
    if args.limit < 1:
        raise ValueError("--limit must be >= 1")
    table = _table_for(args.limit, args.cache)
    found = smallest_prime_tau(args.limit, table=table)
    if found is None:
        print("none")
    else:
        print(f"{found[0]} {found[1]}")
    return 0


def _cmd_bounds(args) -> int:
    report = bound_report(args.n)
    doc = envelope("bounds", {"N": str(args.n)}, bound_report_to_dict(report))
    sys.stdout.write(to_json(doc))
    return 0


def _cmd_census(args) -> int:
    with open(args.from_path, encoding="utf-8") as fh:
        doc = json.load(fh)
    hits = [hit_from_dict(d) for d in doc["payload"]["hits"]]
    report = census_by_residue(hits, args.cap)
    out = envelope(
        "census",
        {"from": str(args.from_path), "cap": str(args.cap)},
        census_to_dict(report),
    )
    sys.stdout.write(to_json(out))
    return 0


def _cmd_verify(args) -> int:
    results = Verifier(args.cache).run(args.suite)
    print(format_results(results))
    return 0 if all(r.passed for r in results) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tauprimes",
        description="Exact Ramanujan tau tables, congruences, prime-value search, and bounds.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("series", help="tabulate tau(1..N)")
    p.add_argument("--limit", type=int, required=True)
    p.add_argument("--out", help="write a TAUCACHE file instead of printing")
    p.set_defaults(func=_cmd_series)

    p = sub.add_parser("tau", help="tau(N) via cache or multiplicative reconstruction")
    p.add_argument("n", type=parse_big_int)
    p.add_argument("--cache", help="TAUCACHE file to consult first")
    p.set_defaults(func=_cmd_tau)

    p = sub.add_parser("prime-power", help="tau(P^K) by the local recurrence")
    p.add_argument("p", type=int)
    p.add_argument("k", type=int)
    p.set_defaults(func=_cmd_prime_power)

    p = sub.add_parser("classify", help="mod-23 class of a prime")
    p.add_argument("p", type=int)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("congruence-table", help="predicted vs actual tau(p) mod 23")
    p.add_argument("--pmax", type=int, required=True)
    p.set_defaults(func=_cmd_congruence_table)

    p = sub.add_parser("poly", help="even-index polynomial G_k and optionally its roots")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--roots", action="store_true")
    p.add_argument("--digits", type=int)
    p.set_defaults(func=_cmd_poly)

    p = sub.add_parser("search", help="prime values among tau(p^{2k})")
    p.add_argument("--pmax", type=int, required=True)
    p.add_argument("--kmax", type=int, required=True)
    p.add_argument("--vmax", type=parse_big_int, required=True)
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="JSON envelope (default)")
    fmt.add_argument("--csv", action="store_true")
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser("smallest-prime", help="first n with tau(n) prime")
    p.add_argument("--limit", type=int, required=True)
    p.add_argument("--cache")
    p.set_defaults(func=_cmd_smallest_prime)

    p = sub.add_parser("bounds", help="explicit count bounds at ceiling N")
    p.add_argument("--N", dest="n", type=parse_big_int, required=True)
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser("census", help="residue census of saved search hits")
    p.add_argument("--from", dest="from_path", required=True)
    p.add_argument("--cap", type=parse_big_int, required=True)
    p.set_defaults(func=_cmd_census)

    p = sub.add_parser("verify", help="run a reproduction suite")
    p.add_argument("--suite", required=True, choices=("series", "congruence", "spectral", "search", "bounds", "all"))
    p.add_argument("--cache", help="TAUCACHE file to reuse for the heavy suites")
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (ValueError, KeyError, OSError, RuntimeError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

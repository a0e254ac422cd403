"""Command-line front end.

Every command prints one machine-readable document on stdout (JSON by
default; tsv/text/dot where it makes sense) and reports errors as a JSON
object on stderr.  Exit codes: 0 success, 2 budget exhausted or undecided,
1 error.  Outputs are byte-deterministic: everything is sorted, never
emitted in completion order.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor

from . import canonical as canon
from . import crystal as crys
from . import klr
from . import superweights as sw
from .errors import BudgetExceeded, SuperklError
from .laurent import render
from .qmodule import ModuleVec
from .weights import (
    Interval,
    TypeNC,
    defect,
    defect_in_window,
    enumerate_weights,
    minimal_window,
    order_leq,
    parse_matrix,
    truncate,
)


class Unknown(Exception):
    """Raised when a budgeted computation ends undecided (exit code 2)."""

    def __init__(self, payload):
        super().__init__("undecided")
        self.payload = payload


def _parse_type(args) -> TypeNC:
    n = tuple(int(x) for x in args.n.split(",")) if args.n else ()
    c = tuple(int(x) for x in args.c.split(",")) if args.c else ()
    return TypeNC(n, c)


def _context(args):
    return Interval.parse(args.interval), _parse_type(args)


def _vec_json(v: ModuleVec) -> list:
    return [{"basis": lam.to_json(), "coeff": render(c)}
            for lam, c in sorted(v.terms.items(), key=lambda kv: kv[0].text())]


def _map_blocks(fn, items, threads: int):
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(fn, items))
    return [fn(item) for item in items]


def _finite_pair(args, interval, tnc):
    lam = parse_matrix(args.matrix, interval, tnc)
    mu = parse_matrix(args.mu, interval, tnc)
    return lam, mu


def cmd_poset(args):
    interval, tnc = _context(args)
    weights = enumerate_weights(interval, tnc)
    texts = [w.text() for w in weights]
    lt = {}
    for a in weights:
        for b in weights:
            if a != b and order_leq(a, b):
                lt.setdefault(a, set()).add(b)
    covers = []
    for a in weights:
        above = lt.get(a, set())
        for b in sorted(above, key=lambda m: m.text()):
            if not any(b in lt.get(c, set()) for c in above):
                covers.append({"lower": a.text(), "upper": b.text()})
    payload = {"weights": [w.to_json() for w in weights],
               "count": len(weights),
               "covers": sorted(covers, key=lambda e: (e["lower"], e["upper"]))}
    rows = [(e["lower"], e["upper"]) for e in payload["covers"]]
    return payload, rows


def cmd_blocks(args):
    interval, tnc = _context(args)
    table = canon.block_table(interval, tnc)
    blocks = [{"weight": b.weight.to_json(),
               "members": [m.text() for m in b.members]}
              for b in table.blocks]
    payload = {"blocks": blocks, "count": len(blocks)}
    rows = [(json.dumps(b["weight"]), " ".join(b["members"])) for b in blocks]
    return payload, rows


def _check_block_budget(args, lam):
    if args.max_block and canon.block_data(lam).size > args.max_block:
        raise BudgetExceeded(
            f"block of {lam.text()} exceeds --max-block {args.max_block}")


def cmd_canonical(args):
    interval, tnc = _context(args)
    if args.matrix:
        lams = [parse_matrix(args.matrix, interval, tnc)]
    else:
        lams = enumerate_weights(interval, tnc)

    def one(lam):
        _check_block_budget(args, lam)
        return {"lambda": lam.to_json(),
                "terms": _vec_json(canon.canonical_basis(lam))}

    basis = _map_blocks(one, lams, args.threads)
    basis.sort(key=lambda e: json.dumps(e["lambda"], sort_keys=True))
    payload = {"basis": basis}
    rows = [(json.dumps(e["lambda"]),
             " + ".join(f"({t['coeff']}) {json.dumps(t['basis'])}"
                        for t in e["terms"])) for e in basis]
    return payload, rows


def cmd_klpoly(args):
    interval, tnc = _context(args)
    if interval.is_finite():
        lam, mu = _finite_pair(args, interval, tnc)
        _check_block_budget(args, lam)
        d = canon.kl_d(lam, mu)
        p = canon.kl_p(lam, mu)
        payload = {"lambda": lam.to_json(), "mu": mu.to_json(),
                   "d": render(d), "p": render(p)}
    else:
        lam = parse_matrix(args.matrix, interval, tnc)
        mu = parse_matrix(args.mu, interval, tnc)
        window = minimal_window(
            interval, tnc, sorted(set(lam.all_dev_cols()) | set(mu.all_dev_cols())))
        d = canon.kl_d_stable(lam, mu)
        p = canon.kl_p(truncate(lam, window), truncate(mu, window))
        payload = {"lambda": lam.to_json(), "mu": mu.to_json(),
                   "d": render(d), "p": render(p), "window": window.text()}
    return payload, [(payload["d"], payload["p"])]


def cmd_dualbasis(args):
    interval, tnc = _context(args)
    lam = parse_matrix(args.matrix, interval, tnc)
    v = canon.dual_canonical(lam)
    payload = {"lambda": lam.to_json(), "terms": _vec_json(v)}
    return payload, [(t["coeff"], json.dumps(t["basis"])) for t in payload["terms"]]


def cmd_twisted(args):
    interval, tnc = _context(args)
    lam = parse_matrix(args.matrix, interval, tnc)
    v = canon.twisted_canonical(lam)
    payload = {"lambda": lam.to_json(), "terms": _vec_json(v)}
    return payload, [(t["coeff"], json.dumps(t["basis"])) for t in payload["terms"]]


def cmd_crystal(args):
    interval, tnc = _context(args)
    weights, edges = crys.crystal_edges(interval, tnc)
    payload = {
        "vertices": [w.to_json() for w in weights],
        "edges": [{"from": a.text(), "color": i, "to": b.text()}
                  for a, i, b in edges],
    }
    rows = [(e["from"], str(e["color"]), e["to"]) for e in payload["edges"]]
    dot = crys.crystal_dot(interval, tnc)
    return payload, rows, dot


def cmd_prinjective(args):
    interval, tnc = _context(args)
    if interval.is_finite():
        members = sorted(m.text() for m in crys.lambda_circ(interval, tnc))
        payload = {"members": members, "count": len(members)}
        return payload, [(m,) for m in members]
    tower = crys.WindowTower(interval, tnc, schedule=args.schedule)
    lam = parse_matrix(args.matrix, interval, tnc)
    r = crys.is_prinjective(lam, tower, args.max_r)
    windows = [{"r": k, "interval": tower.window(k).text(),
                "kappa": tower.kappa_r(k).text()}
               for k in range(1, args.max_r + 1)]
    shifts = [{"r": k, "word": list(tower.shift(k).word),
               "sigma": str(tower.shift(k).sigma),
               "Sigma": str(tower.sigma_total(k + 1))}
              for k in range(1, args.max_r)]
    payload = {"matrix": lam.to_json(),
               "prinjective": True if r is not None else "unknown",
               "r": r, "windows": windows, "shifts": shifts,
               "max_r": args.max_r}
    if r is None:
        raise Unknown(payload)
    return payload, [(lam.text(), str(r))]


def cmd_defect(args):
    interval, tnc = _context(args)
    lam = parse_matrix(args.matrix, interval, tnc)
    if interval.is_finite():
        payload = {"matrix": lam.to_json(), "defect": defect(lam),
                   "window": interval.text()}
    else:
        window = minimal_window(interval, tnc, lam.all_dev_cols())
        payload = {"matrix": lam.to_json(),
                   "defect": defect_in_window(lam, window),
                   "window": window.text()}
    return payload, [(lam.text(), str(payload["defect"]))]


def _coords(text) -> tuple[int, ...]:
    return tuple(int(x) for x in text.split(","))


def cmd_superweight(args):
    _, tnc = _context(args)
    lam = sw.SuperWeight(_coords(args.coords), tnc)
    mat = sw.to_matrix01(lam)
    back = sw.from_matrix01(mat)
    payload = {"weight": lam.to_json(),
               "rho": list(sw.rho(tnc).coords),
               "matrix": mat.to_json(),
               "roundtrip": back == lam}
    return payload, [(args.coords, mat.text())]


def cmd_bruhat(args):
    _, tnc = _context(args)
    lam = sw.SuperWeight(_coords(args.coords), tnc)
    mu = sw.SuperWeight(_coords(args.mu_coords), tnc)
    payload = {"lhs": lam.to_json(), "rhs": mu.to_json(),
               "leq": sw.bruhat_leq(lam, mu),
               "geq": sw.bruhat_leq(mu, lam),
               "dominance_leq": sw.dominance_super(mu, lam)}
    return payload, [(str(payload["leq"]), str(payload["geq"]))]


def cmd_linkage(args):
    _, tnc = _context(args)
    lam = sw.SuperWeight(_coords(args.coords), tnc)
    ups = sw.linkage_up(lam)
    payload = {"weight": lam.to_json(),
               "up": sorted([list(mu.coords) for mu in ups])}
    return payload, [(",".join(map(str, mu)),) for mu in payload["up"]]


def cmd_youngdim(args):
    interval, tnc = _context(args)
    lam = parse_matrix(args.matrix, interval, tnc)
    word = [int(x) for x in args.word.split(",")] if args.word else []
    value = canon.young_word_dim(lam, word)
    dl = defect(lam)
    normalized = value.shift(-dl)
    payload = {"lambda": lam.to_json(), "word": word,
               "value": render(value), "defect": dl,
               "normalized": render(normalized),
               "bar_symmetric": normalized.is_bar_symmetric()}
    return payload, [(render(value),)]


def cmd_klr_verify(args):
    colors = ([int(x) for x in args.colors.split(",")]
              if args.colors else list(Interval.parse(args.interval).colors()))
    report = klr.verify_relations(colors, args.d)
    report["failures"] = [repr(f) for f in report["failures"]]
    return report, [(str(report["checked"]), str(report["ok"]))]


def cmd_nilhecke_rank(args):
    report = klr.nilhecke_graded_rank_check(args.m, args.cap)
    return report, [(str(report["ok"]),)]


COMMANDS = {
    "poset": cmd_poset,
    "canonical": cmd_canonical,
    "klpoly": cmd_klpoly,
    "dualbasis": cmd_dualbasis,
    "twisted": cmd_twisted,
    "crystal": cmd_crystal,
    "blocks": cmd_blocks,
    "prinjective": cmd_prinjective,
    "defect": cmd_defect,
    "superweight": cmd_superweight,
    "bruhat": cmd_bruhat,
    "linkage": cmd_linkage,
    "youngdim": cmd_youngdim,
    "klr-verify": cmd_klr_verify,
    "nilhecke-rank": cmd_nilhecke_rank,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="superkl",
        description="exact canonical-basis and crystal combinatorics "
                    "for tensor products of quantum exterior powers")
    parser.add_argument("command", choices=sorted(COMMANDS))
    parser.add_argument("--interval", default="0:1",
                        help="a:b | z | geq:N | leq:N")
    parser.add_argument("--n", default="", help="comma-separated exterior degrees")
    parser.add_argument("--c", default="", help="comma-separated polarities (0/1)")
    parser.add_argument("--format", default="json",
                        choices=["json", "tsv", "dot", "text"])
    parser.add_argument("--matrix", default="", help="weight, e.g. @0:110/101")
    parser.add_argument("--mu", default="", help="second weight")
    parser.add_argument("--coords", default="", help="superweight coordinates")
    parser.add_argument("--mu-coords", default="", help="second superweight")
    parser.add_argument("--word", default="", help="comma-separated colors")
    parser.add_argument("--colors", default="", help="KLR colors")
    parser.add_argument("--d", type=int, default=2, help="number of strands")
    parser.add_argument("--m", type=int, default=2, help="nil-Hecke rank")
    parser.add_argument("--cap", type=int, default=8, help="graded degree cap")
    parser.add_argument("--max-r", type=int, default=4, dest="max_r",
                        help="window budget for prinjective search")
    parser.add_argument("--max-block", type=int, default=0, dest="max_block",
                        help="refuse blocks larger than this (0 = unlimited)")
    parser.add_argument("--schedule", default="default",
                        help="tower growth: default|left|right|alternate_lr|alternate_rl")
    parser.add_argument("--threads", type=int, default=1)
    parser.add_argument("--out", default="", help="write output to FILE")
    return parser


def _emit(args, payload, rows, dot=None) -> str:
    if args.format == "dot":
        if dot is None:
            raise SuperklError("dot output is only available for crystal")
        return dot
    if args.format == "tsv":
        return "\n".join("\t".join(row) for row in rows)
    if args.format == "text":
        return "\n".join("  ".join(row) for row in rows)
    return json.dumps(payload, indent=2, sort_keys=True)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    cache_dir = os.environ.get("SUPERKL_CACHE_DIR")
    try:
        if cache_dir:
            try:
                interval, tnc = _context(args)
                if interval.is_finite():
                    canon.load_psi_cache(cache_dir, interval, tnc)
            except (ValueError, SuperklError):
                pass
        result = COMMANDS[args.command](args)
        payload, rows = result[0], result[1]
        dot = result[2] if len(result) > 2 else None
        meta = {"command": args.command, "interval": args.interval}
        if args.n:
            meta["type"] = {"n": [int(x) for x in args.n.split(",")],
                            "c": [int(x) for x in args.c.split(",")]}
        if isinstance(payload, dict):
            payload = {**meta, **payload}
        text = _emit(args, payload, rows, dot)
        if args.out:
            with open(args.out, "w") as fh:
                fh.write(text + "\n")
        else:
            print(text)
        if cache_dir:
            canon.save_psi_cache(cache_dir)
        return 0
    except Unknown as exc:
        print(json.dumps({"command": args.command, **exc.payload},
                         indent=2, sort_keys=True))
        return 2
    except BudgetExceeded as exc:
        json.dump({"error": "budget", "message": str(exc)}, sys.stderr)
        sys.stderr.write("\n")
        return 2
    except (SuperklError, ValueError) as exc:
        json.dump({"error": type(exc).__name__, "message": str(exc)}, sys.stderr)
        sys.stderr.write("\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())

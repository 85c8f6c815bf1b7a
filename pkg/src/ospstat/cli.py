"""
Command-line front end.

    ospstat stat --object "7*3*2 6 4*1 5" --stat op_inv
    ospstat dist --family sgt --n 3 --k 1 --stat op_maj
    ospstat verify --identity haglund --n 5 --json
    ospstat bijection --map psi --input 52143 --trace
    ospstat render --placement '{"heights":[1,2],"rooks":[...]}'
    ospstat enumerate --family mixed --n 4 --k 2 --count

Exit status: 0 success, 1 failed verification, 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from collections.abc import Sequence

from . import insertion, perm, rook, starred
from .qanalog import distribution, distribution_by_k, enumerate_family, verify
from .qanalog.distribution import family_stats, resolve_family
from .qanalog.identities import IDENTITIES, PQ_IDENTITIES, VARIANTS

__all__ = ["main", "build_parser", "parse_object", "MAPS"]

DEFAULT_SEED = 0


class InputError(ValueError):
    pass


# -- object parsing ------------------------------------------------------------

def parse_object(text: str, flavor: str | None = None):
    """Guess the object type from its text.

    '{...}' is a rook placement, '|' separates blocks of an ordered set
    partition, '*' marks a starred permutation (descent flavor unless told
    otherwise), anything else is a permutation.
    """
    text = text.strip()
    if text.startswith("{"):
        return rook.placement_from_json(text)
    if "|" in text:
        return starred.OrderedSetPartition.parse(text)
    if flavor is not None and flavor != "perm":
        cls = {"descent": starred.DescentStarred, "ascent": starred.AscentStarred,
               "primed": starred.PrimedStarred}[flavor]
        return cls.parse(text)
    if "*" in text:
        return starred.DescentStarred.parse(text)
    return perm.Permutation.parse(text)


def _family_of(obj) -> str:
    if isinstance(obj, perm.Permutation):
        return "S"
    if isinstance(obj, starred.DescentStarred):
        return "desc"
    if isinstance(obj, starred.AscentStarred):
        return "asc"
    if isinstance(obj, starred.PrimedStarred):
        return "primed"
    if isinstance(obj, rook.RookPlacement):
        return {"file": "file", "nonattacking": "na", "mixed": "mixed",
                "mixed_prime": "mixed_prime"}[obj.family]
    raise InputError(f"no statistics for {type(obj).__name__}")


def compute_stat(obj, name: str) -> int:
    if isinstance(obj, starred.OrderedSetPartition):
        obj = starred.osp_to_descent_starred(obj)
    table = family_stats(_family_of(obj))
    if name not in table:
        raise InputError(f"statistic {name!r} is not defined here; choose from {', '.join(sorted(table))}")
    return table[name](obj)


# -- bijections ----------------------------------------------------------------

def _as_perm(x):
    if not isinstance(x, perm.Permutation):
        raise InputError("this map takes a permutation")
    return x


def _as_desc(x):
    if isinstance(x, perm.Permutation):
        return starred.DescentStarred(x, frozenset())
    if isinstance(x, starred.OrderedSetPartition):
        return starred.osp_to_descent_starred(x)
    if not isinstance(x, starred.DescentStarred):
        raise InputError("this map takes a descent-starred permutation")
    return x


def _as_primed(x):
    if isinstance(x, starred.PrimedStarred):
        return x
    raise InputError("this map takes a primed starred permutation (use --flavor primed)")


def _as_placement(x, family=None):
    if not isinstance(x, rook.RookPlacement):
        raise InputError("this map takes a rook placement in JSON")
    if family and x.family != family:
        raise InputError(f"this map takes a {family} placement, got {x.family}")
    return x


def _trivial(which):
    def fn(x):
        if isinstance(x, perm.Permutation):
            return perm.trivial_bijection(x, which)
        if isinstance(x, (starred.DescentStarred, starred.AscentStarred)):
            return starred.starred_trivial_bijection(x, which)
        raise InputError("trivial bijections take a permutation or a starred permutation")
    return fn


MAPS = {
    "psi": lambda x: insertion.psi(_as_perm(x)),
    "psi_inverse": lambda x: insertion.psi_inverse(_as_perm(x)),
    "psi_osp": lambda x: insertion.psi_osp(_as_desc(x)),
    "psi_osp_inverse": lambda x: insertion.psi_osp_inverse(_as_desc(x)),
    "psi_primed": lambda x: insertion.psi_primed(_as_primed(x)),
    "psi_primed_inverse": lambda x: insertion.psi_primed_inverse(_as_primed(x)),
    "alpha": lambda x: rook.alpha(_as_placement(x, "file")),
    "beta": lambda x: rook.beta(_as_placement(x, "file")),
    "alpha_inverse": lambda x: rook.alpha_inverse(_as_perm(x)),
    "beta_inverse": lambda x: rook.beta_inverse(_as_perm(x)),
    "gamma": lambda x: rook.gamma(_as_desc(x)),
    "delta": lambda x: rook.delta(_as_desc(x)),
    "gamma_inverse": lambda x: rook.gamma_inverse(_as_placement(x, "mixed")),
    "delta_inverse": lambda x: rook.delta_inverse(_as_placement(x, "mixed")),
    "osp_of_mixed": lambda x: rook.osp_of_mixed(_as_placement(x, "mixed")),
    "to_descent_starred": _as_desc,
    "to_osp": lambda x: starred.descent_starred_to_osp(_as_desc(x)),
    "reverse": _trivial("reverse"),
    "complement": _trivial("complement"),
    "reverse_complement": _trivial("reverse_complement"),
}

TRACES = {
    "psi": lambda x: insertion.psi_trace(_as_perm(x)),
    "psi_osp": lambda x: insertion.psi_osp_trace(_as_desc(x)),
}


def _show(obj) -> str:
    if isinstance(obj, rook.RookPlacement):
        return obj.to_json()
    return str(obj)


def _json_obj(obj):
    if isinstance(obj, rook.RookPlacement):
        return obj.to_dict()
    if hasattr(obj, "to_json"):
        return json.loads(obj.to_json())
    return str(obj)


# -- subcommands ---------------------------------------------------------------

def _cmd_stat(args, out) -> int:
    obj = parse_object(args.object, args.flavor)
    value = compute_stat(obj, args.stat)
    if args.json:
        out.write(json.dumps({"object": str(args.object), "stat": args.stat, "value": value}) + "\n")
    else:
        out.write(f"{value}\n")
    return 0


def _cmd_dist(args, out) -> int:
    stats = args.stat or ["inv"]
    if args.by_k:
        poly = distribution_by_k(args.family, args.n, stats)
    else:
        poly = distribution(args.family, args.n, args.k, stats)
    out.write((poly.to_json() if args.json else str(poly)) + "\n")
    return 0


def _cmd_verify(args, out) -> int:
    name = args.identity
    if name not in IDENTITIES:
        raise InputError(f"unknown identity {name!r}; choose from {', '.join(IDENTITIES)}")
    bound = args.max_n if args.max_n is not None else (6 if name in PQ_IDENTITIES else 8)
    if args.n > bound:
        raise InputError(f"n={args.n} exceeds --max-n {bound}")
    if args.variant is not None and name not in VARIANTS:
        raise InputError(f"{name} has no variants")
    report = verify(name, args.n, args.variant)
    out.write((report.to_json() if args.json else report.text()) + "\n")
    return 0 if report.passed else 1


def _cmd_bijection(args, out) -> int:
    if args.map not in MAPS:
        raise InputError(f"unknown map {args.map!r}; choose from {', '.join(MAPS)}")
    obj = parse_object(args.input, args.flavor)
    image = MAPS[args.map](obj)
    steps = []
    if args.trace:
        if args.map not in TRACES:
            raise InputError(f"--trace is available for {', '.join(TRACES)}")
        steps = TRACES[args.map](obj)
    if args.json:
        payload = {"map": args.map, "input": args.input, "output": _json_obj(image)}
        if args.trace:
            payload["trace"] = [
                {"n": s.n, "label": s.label, "kind": s.kind, "intermediate": str(s.remaining)}
                for s in steps
            ]
        out.write(json.dumps(payload) + "\n")
        return 0
    out.write(_show(image) + "\n")
    for s in steps:
        out.write(f"{s}\n")
    return 0


def _cmd_render(args, out) -> int:
    p = rook.placement_from_json(args.placement)
    out.write(rook.render(p, args.rule) + "\n")
    if args.stats:
        out.write(f"unc={rook.unc(p)}\n")
    return 0


def _cmd_enumerate(args, out) -> int:
    resolve_family(args.family)
    objs = enumerate_family(args.family, args.n, args.k)
    if args.count:
        total = sum(1 for _ in objs)
        out.write((json.dumps({"count": total}) if args.json else str(total)) + "\n")
        return 0
    objs = list(objs)
    if args.sample is not None:
        rng = random.Random(args.seed)
        picks = sorted(rng.sample(range(len(objs)), min(args.sample, len(objs))))
        objs = [objs[i] for i in picks]
    if args.json:
        out.write(json.dumps([_json_obj(o) for o in objs]) + "\n")
    else:
        for o in objs:
            out.write(_show(o) + "\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="ospstat", description=__doc__.split("\n\n")[0].strip())
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("stat", help="evaluate a statistic on one object")
    p.add_argument("--object", required=True)
    p.add_argument("--stat", required=True)
    p.add_argument("--flavor", choices=["perm", "descent", "ascent", "primed"])
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_stat)

    p = sub.add_parser("dist", help="distribution polynomial over a family")
    p.add_argument("--family", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--stat", action="append",
                   help="statistic, optionally var=stat; repeat for several variables")
    p.add_argument("--by-k", action="store_true", help="sum over k, marking k with z")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_dist)

    p = sub.add_parser("verify", help="check an identity by enumeration")
    p.add_argument("--identity", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--variant", choices=["j", "j+1"])
    p.add_argument("--max-n", type=int,
                   help="refuse larger n (default 8, or 6 for p,q identities)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("bijection", help="apply a map")
    p.add_argument("--map", required=True)
    p.add_argument("--input", required=True)
    p.add_argument("--flavor", choices=["perm", "descent", "ascent", "primed"])
    p.add_argument("--trace", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_bijection)

    p = sub.add_parser("render", help="draw a rook placement")
    p.add_argument("--placement", required=True)
    p.add_argument("--rule", choices=list(rook.RULES))
    p.add_argument("--stats", action="store_true", help="also print unc")
    p.set_defaults(func=_cmd_render)

    p = sub.add_parser("enumerate", help="list or count a family")
    p.add_argument("--family", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--count", action="store_true")
    p.add_argument("--sample", type=int, help="print a random subset of this size")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_enumerate)
    return ap


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except (ValueError, KeyError, IndexError) as exc:
        msg = exc.args[0] if exc.args else exc
        print(f"ospstat: error: {msg}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

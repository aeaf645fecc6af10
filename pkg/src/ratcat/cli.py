"""Command-line interface: ``ratcat {map,stat,verify,catalan,count,enumerate}``.

Exit status: 0 on success, 1 on invalid input, 2 when a theorem suite finds a
counterexample, 3 when two internal computations disagree (a bug).
"""

from __future__ import annotations

import argparse
import json
import sys
from math import gcd
from typing import Any, Callable

from . import abacus as ab
from . import affine as af
from . import dyck as dk
from . import partition as pt
from . import rootsystem as rs
from . import verify as vf
from .errors import InvariantViolation

OBJECTS = ("perm", "core", "abacus", "dyck")


class UsageError(ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(message)


# -- object parsing and formatting --------------------------------------------


def _maybe_json(text: str) -> Any:
    text = text.strip()
    if text.startswith("{"):
        try:
            return json.loads(text)
        except json.JSONDecodeError as exc:
            raise ValueError(f"malformed JSON input at character {exc.pos}: {exc.msg}") from None
    return None


def parse_object(kind: str, text: str, n: int | None, p: int | None):
    data = _maybe_json(text)
    if kind == "perm":
        if data is not None:
            return af.AffinePermutation(tuple(data["window"]))
        return af.parse_window(text)
    if kind == "core":
        if data is not None:
            return pt.Partition(data["partition"])
        return pt.parse_partition(text)
    if kind == "abacus":
        if data is not None:
            return ab.Abacus(tuple(data["beads"]), tuple(data["gaps"]))
        return ab.parse_abacus(text)
    if kind == "dyck":
        if data is not None:
            return dk.RationalDyckPath(data["n"], data["p"], data["word"])
        n, p = _need_np(n, p, "a Dyck path")
        return dk.RationalDyckPath(n, p, text.strip())
    raise ValueError(f"unknown object {kind!r}")


def object_json(obj) -> dict:
    if isinstance(obj, af.AffinePermutation):
        return {"window": list(obj.window)}
    if isinstance(obj, pt.Partition):
        return {"partition": list(obj)}
    if isinstance(obj, ab.Abacus):
        return {"beads": list(obj.pos_beads), "gaps": list(obj.neg_gaps)}
    if isinstance(obj, dk.RationalDyckPath):
        return {"n": obj.n, "p": obj.p, "word": obj.word}
    if isinstance(obj, rs.AffineWeylElement):
        return obj.to_dict()
    raise TypeError(type(obj))


def object_text(obj) -> str:
    if isinstance(obj, af.AffinePermutation):
        return af.format_window(obj)
    if isinstance(obj, ab.Abacus):
        return ab.format_abacus(obj)
    if isinstance(obj, rs.AffineWeylElement):
        return json.dumps(obj.to_dict())
    if isinstance(obj, pt.Partition) and not obj:
        return "()"
    return str(obj)


def guess_kind(text: str) -> str:
    data = _maybe_json(text)
    if data is not None:
        for key, kind in (("window", "perm"), ("partition", "core"), ("beads", "abacus"), ("word", "dyck")):
            if key in data:
                return kind
        raise ValueError("cannot tell which object the JSON input describes")
    s = text.strip()
    if s.startswith("["):
        return "perm"
    if s.startswith("beads"):
        return "abacus"
    if s and set(s.upper()) <= set("NE"):
        return "dyck"
    return "core"


def _need_np(n: int | None, p: int | None, what: str) -> tuple[int, int]:
    if n is None or p is None:
        raise ValueError(f"-n and -p are required for {what}")
    _check_pair(n, p)
    return n, p


def _check_pair(n: int | None, p: int | None) -> None:
    if n is not None and n < 1:
        raise ValueError("-n must be positive")
    if p is not None and p < 1:
        raise ValueError("-p must be positive")
    if n is not None and p is not None and gcd(n, p) != 1:
        raise ValueError(f"gcd({n}, {p}) != 1")


# -- map -----------------------------------------------------------------------------


def _to_core(kind: str, obj, n: int | None, p: int | None) -> pt.Partition:
    if kind == "core":
        kappa = obj
    elif kind == "perm":
        if p is not None and not af.is_p_stable(obj, p):
            raise ValueError(f"{af.format_window(obj)} is not {p}-stable")
        kappa = af.core_of(obj)
    elif kind == "abacus":
        if n is not None and not ab.is_flush(obj, n):
            raise ValueError(f"abacus is not {n}-flush")
        kappa = ab.alpha_inv(obj)
    else:
        kappa = dk.anderson_phi(obj)
    return kappa


def _from_core(kind: str, kappa: pt.Partition, n: int | None, p: int | None):
    if n is not None and not pt.is_core(kappa, n):
        raise ValueError(f"{tuple(kappa)} is not a {n}-core")
    if p is not None and not pt.is_core(kappa, p):
        raise ValueError(f"{tuple(kappa)} is not a {p}-core")
    if kind == "core":
        return kappa
    if kind == "abacus":
        return ab.alpha(kappa)
    if kind == "perm":
        if n is None:
            raise ValueError("-n is required to produce an affine permutation")
        return af.gamma_inv(ab.alpha(kappa), n)
    n, p = _need_np(n, p, "a Dyck path")
    return dk.anderson_phi_inv(kappa, n, p)


def cmd_map(args) -> tuple[str, Any]:
    n, p = args.n, args.p
    _check_pair(n, p)
    obj = parse_object(args.source, args.input, n, p)
    if args.source == "perm":
        if n is not None and obj.n != n:
            raise ValueError(f"window has {obj.n} entries but -n is {n}")
        n = obj.n
        _check_pair(n, p)
    if args.source == "dyck":
        n, p = obj.n, obj.p
    if args.source == args.target:
        out = obj
    else:
        out = _from_core(args.target, _to_core(args.source, obj, n, p), n, p)
    return object_text(out), object_json(out)


# -- stat ------------------------------------------------------------------------------

StatFn = Callable[[Any, argparse.Namespace], tuple[str, Any]]


def _tab(t) -> tuple[str, Any]:
    return t.to_text(), json.loads(t.to_json())


def _need_p(args) -> int:
    if args.p is None:
        raise ValueError("-p is required for this statistic")
    return args.p


def _tuple(v) -> tuple[str, Any]:
    return " ".join(map(str, v)), list(v)


PERM_STATS: dict[str, StatFn] = {
    "shi": lambda w, a: _tab(af.shi_tableau(w, _need_p(a))),
    "inv": lambda w, a: _tab(af.inversion_table(w)),
    "length": lambda w, a: (str(af.length(w)), af.length(w)),
    "pak_stanley": lambda w, a: _tuple(af.pak_stanley(w, _need_p(a))),
    "dual_pak_stanley": lambda w, a: _tuple(af.dual_pak_stanley(w, _need_p(a))),
    "inverse": lambda w, a: (af.format_window(af.inverse(w)), list(af.inverse(w).window)),
    "star": lambda w, a: (af.format_window(af.star(w)), list(af.star(w).window)),
    "dominant": lambda w, a: (str(af.is_dominant(w)).lower(), af.is_dominant(w)),
    "p_stable": lambda w, a: (str(af.is_p_stable(w, _need_p(a))).lower(), af.is_p_stable(w, _need_p(a))),
}

CORE_STATS: dict[str, StatFn] = {
    "hooks": lambda k, a: ("\n".join(" ".join(map(str, r)) for r in pt.hook_table(k)),
                           [list(r) for r in pt.hook_table(k)]),
    "skl": lambda k, a: (str(pt.skew_length(k, *_need_np(a.n, a.p, "skew length"))),
                         pt.skew_length(k, a.n, a.p)),
    "hnp": lambda k, a: _tuple(pt.h_np(k, *_need_np(a.n, a.p, "H_{n,p}"))),
    "n_rows": lambda k, a: _tuple(pt.n_rows(k, _need_n(a))),
    "p_columns": lambda k, a: _tuple(pt.p_columns(k, _need_p(a))),
    "conjugate": lambda k, a: (str(pt.conjugate(k)), list(pt.conjugate(k))),
    "length": lambda k, a: (str(len(k)), len(k)),
}

DYCK_STATS: dict[str, StatFn] = {
    "codinv": lambda x, a: _tab(dk.codinv_tableau(x)),
    "area": lambda x, a: (str(dk.area(x)), dk.area(x)),
    "labels": lambda x, a: _tuple(dk.north_labels(x)),
    "h_set": lambda x, a: _tuple(sorted(dk.h_set(x))),
    "complement": lambda x, a: _tuple(dk.complement(x)),
    "zeta": lambda x, a: (dk.zeta(x).word, dk.zeta(x).word),
    "eta": lambda x, a: (dk.eta(x).word, dk.eta(x).word),
}

ELEMENT_STATS: dict[str, StatFn] = {
    "shi": lambda e, a: _tuple(rs.shi_tableau(e, _need_p(a))),
    "shi_coords": lambda e, a: _tuple(rs.shi_coordinates(e)),
    "k_alpha": lambda e, a: _tuple(rs.k_alpha(e, i) for i in range(len(e.system.positive_roots))),
    "length": lambda e, a: (str(rs.length(e)), rs.length(e)),
    "dominant": lambda e, a: (str(rs.is_dominant(e)).lower(), rs.is_dominant(e)),
    "p_stable": lambda e, a: (str(rs.is_p_stable(e, _need_p(a))).lower(), rs.is_p_stable(e, _need_p(a))),
}

ALL_STATS = sorted(set(PERM_STATS) | set(CORE_STATS) | set(DYCK_STATS) | set(ELEMENT_STATS))


def _need_n(args) -> int:
    if args.n is None:
        raise ValueError("-n is required for this statistic")
    return args.n


def cmd_stat(args) -> tuple[str, Any]:
    chosen = [s for s in ALL_STATS if getattr(args, s)]
    if not chosen:
        raise ValueError("choose at least one statistic, e.g. --shi")
    _check_pair(args.n, args.p)
    if args.type:
        system = rs.parse_root_system(args.type)
        data = _maybe_json(args.input)
        if data is None:
            raise ValueError('root system elements are given as JSON {"q": [...], "word": [...]}')
        obj = rs.from_dict(system, data)
        table, kind = ELEMENT_STATS, f"{system.name} element"
    else:
        kind = args.source or guess_kind(args.input)
        obj = parse_object(kind, args.input, args.n, args.p)
        if kind == "perm" and args.n is not None and obj.n != args.n:
            raise ValueError(f"window has {obj.n} entries but -n is {args.n}")
        table = {"perm": PERM_STATS, "core": CORE_STATS, "dyck": DYCK_STATS}.get(kind)
        if table is None:
            raise ValueError(f"no statistics are defined for {kind}")
    texts, payload = [], {}
    for s in chosen:
        if s not in table:
            raise ValueError(f"--{s.replace('_', '-')} does not apply to a {kind}")
        text, value = table[s](obj, args)
        texts.append(text if len(chosen) == 1 else f"{s}:\n{text}" if "\n" in text else f"{s}: {text}")
        payload[s] = value
    return "\n".join(texts), payload


# -- verify ----------------------------------------------------------------------------


def cmd_verify(args) -> tuple[str, Any, int]:
    names = args.suites or list(vf.SUITES)
    for name in names:
        if name not in vf.SUITES:
            raise ValueError(f"unknown suite {name!r}; choose from {', '.join(vf.SUITES)}")
    params: dict = {}
    for key in ("n_max", "p_max", "size_max"):
        if getattr(args, key) is not None:
            params[key] = getattr(args, key)
    if args.type:
        for t in args.type:
            rs.parse_root_system(t)
        params["types"] = args.type
    if args.n is not None or args.p is not None:
        if args.n is not None and args.p is not None:
            params["pairs"] = [[args.n, args.p]]
        elif args.n is not None:
            raise ValueError("-n needs -p as well")
        else:
            params["p_values"] = [args.p]
    jobs = args.jobs if args.jobs is not None else vf.default_jobs()
    reports = [vf.verify_suite(name, params, jobs) for name in names]
    failed = any(r.kind == "theorem" and not r.passed for r in reports)
    text = "\n".join(r.to_text() for r in reports)
    return text, [r.to_dict() for r in reports], 2 if failed else 0


# -- catalan / count / enumerate ---------------------------------------------------------


def cmd_catalan(args) -> tuple[str, Any]:
    if args.type:
        system = rs.parse_root_system(args.type)
        poly = vf.c_phi_p(system, _need_p(args))
    else:
        poly = vf.qt_catalan(*_need_np(args.n, args.p, "the q,t-Catalan polynomial"))
    return str(poly), poly.to_dict()


def cmd_count(args) -> tuple[str, Any]:
    if args.type:
        system = rs.parse_root_system(args.type)
        count = len(rs.enumerate_dominant_p_stable(system, _need_p(args)))
    else:
        n, p = _need_np(args.n, args.p, "counting")
        count = sum(1 for _ in dk.enumerate_paths(n, p))
    return str(count), count


def cmd_enumerate(args) -> tuple[str, Any]:
    if args.type:
        system = rs.parse_root_system(args.type)
        items = rs.enumerate_dominant_p_stable(system, _need_p(args))
    else:
        n, p = _need_np(args.n, args.p, "enumeration")
        paths = list(dk.enumerate_paths(n, p))
        if args.object == "dyck":
            items = paths
        elif args.object == "core":
            items = [dk.anderson_phi(x) for x in paths]
        elif args.object == "abacus":
            items = [ab.alpha(dk.anderson_phi(x)) for x in paths]
        else:
            items = [dk.anderson_map_inv(x) for x in paths]
    return "\n".join(object_text(o) for o in items), [object_json(o) for o in items]


# -- parser ------------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ratcat", description="Rational Catalan combinatorics toolkit.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, input_required: bool = False):
        sp.add_argument("-n", type=int)
        sp.add_argument("-p", type=int)
        sp.add_argument("--json", action="store_true", help="emit JSON")
        if input_required:
            sp.add_argument("--input", required=True)

    m = sub.add_parser("map", help="convert between permutations, cores, abaci and Dyck paths")
    common(m, True)
    m.add_argument("--from", dest="source", choices=OBJECTS, required=True)
    m.add_argument("--to", dest="target", choices=OBJECTS, required=True)

    s = sub.add_parser("stat", help="statistics of a single object")
    common(s, True)
    s.add_argument("--from", dest="source", choices=("perm", "core", "dyck"),
                   help="object kind (guessed from the input when omitted)")
    s.add_argument("--type", help="root system such as A5, B3, G2 (input is a JSON element)")
    for name in ALL_STATS:
        s.add_argument("--" + name.replace("_", "-"), dest=name, action="store_true")

    v = sub.add_parser("verify", help="run verification suites")
    v.add_argument("suites", nargs="*", help=f"any of: {', '.join(vf.SUITES)} (default: all)")
    v.add_argument("-n", type=int)
    v.add_argument("-p", type=int)
    v.add_argument("--n-max", type=int)
    v.add_argument("--p-max", type=int)
    v.add_argument("--size-max", type=int)
    v.add_argument("--type", action="append", help="root system for conj_shi (repeatable)")
    v.add_argument("--jobs", type=int, help="worker processes (default: $RATCAT_JOBS or 1)")
    v.add_argument("--json", action="store_true")

    c = sub.add_parser("catalan", help="q,t-Catalan polynomial, or C_{Phi,p}(q) with --type")
    common(c)
    c.add_argument("--type")

    k = sub.add_parser("count", help="number of Dyck paths, or dominant p-stable elements with --type")
    common(k)
    k.add_argument("--type")

    e = sub.add_parser("enumerate", help="list every object for given n, p")
    common(e)
    e.add_argument("--object", choices=OBJECTS, default="dyck")
    e.add_argument("--type")
    return parser


COMMANDS = {"map": cmd_map, "stat": cmd_stat, "verify": cmd_verify, "catalan": cmd_catalan,
            "count": cmd_count, "enumerate": cmd_enumerate}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        result = COMMANDS[args.command](args)
    except InvariantViolation as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 3
    except (ValueError, KeyError, TypeError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"error: {msg}", file=sys.stderr)
        return 1
    code = 0
    if len(result) == 3:
        text, payload, code = result
    else:
        text, payload = result
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    elif text:
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())

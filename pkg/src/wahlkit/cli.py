"""Command-line front end.

    wahlkit wahl --n 3 --a 2
    wahlkit hj --frac 9/5
    wahlkit pic --base F2 --blowup E1 --blowup E2 --class G --mult E1=1,E2=1
    wahlkit lattice --system E6 --divisor 1,0,0,0,0,0
    wahlkit flop --system A3 --omega 0,1,0 --a 0,1,0
    wahlkit local --sing D5 --tangency "x=y^2"
    wahlkit dims --type 2b
    wahlkit verify-paper

Every subcommand takes ``--format text|json``; the default comes from the
WAHLKIT_FORMAT environment variable, else text.  Exit status: 0 success,
1 domain error, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import math
import os
import sys
from fractions import Fraction
from typing import Any, Sequence

from wahlkit._linalg import frac_str

FORMAT_ENV = "WAHLKIT_FORMAT"


class DomainError(Exception):
    """A well-formed request with no valid answer; ``payload`` is reported as is."""

    def __init__(self, message: str, payload: dict | None = None):
        super().__init__(message)
        self.payload = payload or {"error": message}


def _ints(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _assignments(text: str) -> dict[str, int]:
    out = {}
    for part in text.split(","):
        if not part:
            continue
        key, sep, val = part.partition("=")
        if not sep:
            raise argparse.ArgumentTypeError(f"expected LABEL=INT pairs, got {part!r}")
        try:
            out[key.strip()] = int(val)
        except ValueError:
            raise argparse.ArgumentTypeError(f"expected an integer in {part!r}") from None
    return out


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a fraction: {text!r}") from None


def _exact(obj: Any) -> Any:
    """Make a result JSON-safe with exact rationals as "p/q" strings."""
    if isinstance(obj, Fraction):
        return frac_str(obj)
    if isinstance(obj, float) and math.isinf(obj):
        return "inf"
    if isinstance(obj, dict):
        return {str(k): _exact(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_exact(v) for v in obj]
    return obj


# ---------------------------------------------------------------------------
# subcommands: each returns (json object, text lines)


def cmd_wahl(args) -> tuple[dict, list[str]]:
    from wahlkit.qsing import classify, describe, enumerate_wahl, wahl_string

    if args.enumerate is not None:
        strings = enumerate_wahl(args.enumerate)
        obj = {"r_max": args.enumerate, "strings": [describe(t) for t in strings]}
        lines = [f"{list(t.entries)}  n={classify(t).n} a={classify(t).a}" for t in strings]
        return obj, lines
    if args.string is not None:
        from wahlkit.qsing import TString

        t = TString(args.string)
    else:
        if args.n is None or args.a is None:
            raise DomainError("give --n and --a, --string, or --enumerate")
        t = wahl_string(args.n, args.a)
    obj = describe(t)
    lines = [f"entries: {obj['entries']}", f"class: {obj['class']}"]
    if "discrepancies" in obj:
        lines.append("discrepancies: " + ", ".join(obj["discrepancies"]))
    return obj, lines


def cmd_hj(args) -> tuple[dict, list[str]]:
    from wahlkit.qsing import TString, hj_eval, hj_expand

    if args.frac is not None:
        t = hj_expand(args.frac)
        obj = {"fraction": frac_str(args.frac), "entries": list(t.entries)}
    elif args.string is not None:
        f = hj_eval(TString(args.string))
        obj = {"entries": list(args.string), "fraction": frac_str(f)}
    else:
        raise DomainError("give --frac or --string")
    return obj, [f"{obj['fraction']} = {obj['entries']}"]


def cmd_pic(args) -> tuple[dict, list[str]]:
    from wahlkit.pic import adjunction_genus, blow_up, hirzebruch, projective_plane, proper_transform, riemann_roch_chi

    if args.base == "P2":
        L = projective_plane()
    else:
        L = hirzebruch(int(args.base[1:]))
    base = L
    for label in args.blowup:
        L = blow_up(L, label)
    obj: dict = {"lattice": L.to_json(), "name": L.name}
    lines = [f"lattice {L.name}: basis {list(L.labels)}, K = {list(L.canonical)}"]
    if args.cls is not None:
        try:
            cls = base.divisor(_assignments(args.cls)) if "=" in args.cls else base.basis_class(args.cls)
        except argparse.ArgumentTypeError as e:
            raise DomainError(str(e)) from None
        D = proper_transform(L, cls, args.mult or {})
        obj["class"] = {
            "coeffs": list(D.coeffs),
            "self_intersection": D * D,
            "K_dot": L.K * D,
            "arithmetic_genus": adjunction_genus(L, D),
            "chi": riemann_roch_chi(L, D),
        }
        c = obj["class"]
        lines.append(
            f"class {c['coeffs']}: D^2 = {c['self_intersection']}, K.D = {c['K_dot']}, "
            f"p_a = {frac_str(Fraction(c['arithmetic_genus']))}, chi = {c['chi']}"
        )
    return obj, lines


def cmd_lattice(args) -> tuple[dict, list[str]]:
    from wahlkit.ade import is_dominant, is_minuscule, norm2, parse_system, positive_roots, weight_of_divisor

    rs = parse_system(args.system)
    obj: dict = {
        "system": rs.name,
        "rank": rs.rank,
        "cartan": [list(r) for r in rs.cartan],
        "positive_roots": len(positive_roots(rs)),
        "minuscule": [i for i in range(1, rs.rank + 1) if is_minuscule(rs, i)],
    }
    lines = [
        f"{rs.name}: rank {rs.rank}, {obj['positive_roots']} positive roots",
        f"minuscule fundamental weights: {obj['minuscule']}",
    ]
    if args.divisor is not None:
        w = weight_of_divisor(rs, args.divisor)
        obj["weight"] = {
            "intersections": list(args.divisor),
            "vector": [frac_str(x) for x in w.vector],
            "norm2": frac_str(norm2(rs, w)),
            "dominant": is_dominant(rs, w),
        }
        lines.append(f"weight {w!r}: norm^2 = {obj['weight']['norm2']}, dominant = {obj['weight']['dominant']}")
    return obj, lines


def cmd_flop(args) -> tuple[dict, list[str]]:
    from wahlkit.ade import parse_system
    from wahlkit.flopsim import FiberState, reduce

    rs = parse_system(args.system)
    s = FiberState(rs, tuple(args.omega), tuple(args.a))
    trace = reduce(s, args.policy)
    obj = trace.to_json()
    obj["system"] = rs.name
    obj["policy"] = args.policy
    lines = [
        f"{rs.name}, omega = {obj['omega']}, a = {obj['initial_a']}",
        f"flopped: {obj['steps'] or 'nothing'}",
        f"final a = {obj['final_a']}, dominant = {obj['final_dominant']}",
    ]
    return obj, lines


def _split_sing(label: str) -> tuple[str, int]:
    fam, num = label[:1].upper(), label[1:].lstrip("_")
    if fam not in "ADE" or not num.isdigit():
        raise DomainError(f"singularity label must look like A3, D5 or E7, got {label!r}")
    return fam, int(num)


def cmd_local(args) -> tuple[dict, list[str]]:
    from wahlkit.localint import FIGURES, Impossible, case_one, classify_config, enumerate_configs, find_config

    if args.enumerate:
        groups: dict[str, list] = {label: [] for label, *_ in FIGURES}
        for rec in enumerate_configs(args.n_max, args.k_max):
            if case_one(rec):
                groups[rec.figure].append(rec.to_json())
        lines = [f"{label}: {len(v)} configurations" for label, v in groups.items()]
        return {"figures": groups}, lines
    if args.sing is None:
        raise DomainError("give --sing, or --enumerate")
    fam, n = _split_sing(args.sing)
    if args.mult is not None:
        rec = find_config(fam, n, args.mult)
        if isinstance(rec, Impossible):
            raise DomainError(f"{rec.family}{rec.n} with (B.D)_p = {rec.mult} is impossible: {rec.reason}", rec.to_json())
    else:
        rec = classify_config(fam, n, args.tangency, variant=args.variant)
    obj = rec.to_json()
    lines = [
        f"{obj['sing']} against {obj['graph']}: k = {obj['k']}, (B.D)_p = {obj['mult']}, "
        f"separation = {obj['separation']}, B_1' singular at q_1: {obj['post_blowup_singular']}",
        f"figure entry: {obj['figure'] or 'none'}",
    ]
    return obj, lines


def cmd_dims(args) -> tuple[dict, list[str]]:
    from wahlkit.modulidim import D_IN_B, NAMED_TYPES, locus_dimension

    if args.all:
        reports = {label: locus_dimension(spec) for label, spec in NAMED_TYPES.items()}
        reports["DsubB"] = locus_dimension(D_IN_B)
        obj = {"types": {k: r.to_json() for k, r in reports.items()}}
        lines = [f"{k:6s} {r.formula()}" for k, r in reports.items()]
        return obj, lines
    label = args.type
    if label in ("DsubB", "D_in_B"):
        rep = locus_dimension(D_IN_B)
    elif label in NAMED_TYPES:
        rep = locus_dimension(NAMED_TYPES[label])
    else:
        raise DomainError(f"unknown type {label!r}; choose from {sorted(NAMED_TYPES) + ['DsubB']}")
    obj = rep.to_json()
    obj["formula"] = rep.formula()
    lines = [f"type {label}: {rep.formula()}"]
    if rep.unverified:
        lines.append(f"codimensions supplied without derivation: {', '.join(rep.unverified)}")
    return obj, lines


def cmd_verify(args) -> tuple[dict, list[str]]:
    from wahlkit.verify import run_all

    checks = run_all()
    obj = {"passed": all(c.passed for c in checks), "checks": [c.to_json() for c in checks]}
    lines = [c.line() + f"  ({c.anchor})" for c in checks]
    lines.append("all checks passed" if obj["passed"] else "SOME CHECKS FAILED")
    if not obj["passed"]:
        raise DomainError("some checks failed", obj | {"_lines": lines})
    return obj, lines


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    default_format = os.environ.get(FORMAT_ENV, "text")
    if default_format not in ("text", "json"):
        default_format = "text"
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default=default_format)

    p = argparse.ArgumentParser(prog="wahlkit", description="Exact tools for Wahl singularities.")
    sub = p.add_subparsers(dest="command", required=True, metavar="COMMAND")

    s = sub.add_parser("wahl", parents=[common], help="Wahl strings and discrepancies")
    s.add_argument("--n", type=int)
    s.add_argument("--a", type=int)
    s.add_argument("--string", type=_ints, help="e.g. 2,5")
    s.add_argument("--enumerate", type=int, metavar="R", help="all Wahl strings of length <= R")
    s.set_defaults(func=cmd_wahl)

    s = sub.add_parser("hj", parents=[common], help="Hirzebruch-Jung continued fractions")
    s.add_argument("--frac", type=_fraction, help="p/q with p > q > 0")
    s.add_argument("--string", type=_ints)
    s.set_defaults(func=cmd_hj)

    s = sub.add_parser("pic", parents=[common], help="Picard lattices of blown-up F_d or P2")
    s.add_argument("--base", default="F0", help="F<d> or P2")
    s.add_argument("--blowup", action="append", default=[], metavar="LABEL")
    s.add_argument("--class", dest="cls", help="a basis label, or LABEL=INT,... on the base")
    s.add_argument("--mult", type=_assignments, help="multiplicities at the blown-up points, E1=1,...")
    s.set_defaults(func=cmd_pic)

    s = sub.add_parser("lattice", parents=[common], help="root systems and weights")
    s.add_argument("--system", required=True, help="e.g. A3, E6 or A3+D5")
    s.add_argument("--divisor", type=_ints, help="intersection numbers C.E_i")
    s.set_defaults(func=cmd_lattice)

    s = sub.add_parser("flop", parents=[common], help="flop reduction of C + sum a_i E_i")
    s.add_argument("--system", required=True)
    s.add_argument("--omega", type=_ints, required=True)
    s.add_argument("--a", type=_ints, required=True)
    s.add_argument("--policy", choices=("smallest", "largest", "most_negative"), default="smallest")
    s.set_defaults(func=cmd_flop)

    s = sub.add_parser("local", parents=[common], help="local intersections of B and D")
    s.add_argument("--sing", help="A<n>, D<n> or E<n>")
    s.add_argument("--tangency", default="transversal", help='"transversal", "tangent:k", "x=y^2+..." or "y=..."')
    s.add_argument("--variant", choices=("plus", "minus"), help="sign in the D_n normal form")
    s.add_argument("--mult", type=int, help="look for a configuration with this (B.D)_p")
    s.add_argument("--enumerate", action="store_true", help="list the odd-case configurations by figure entry")
    s.add_argument("--n-max", type=int, default=10)
    s.add_argument("--k-max", type=int, default=5)
    s.set_defaults(func=cmd_local)

    s = sub.add_parser("dims", parents=[common], help="dimension counts of the named loci")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--type", help="1, 1', 1'', 1''', 2a, 2a', 2a'', 2b or DsubB")
    g.add_argument("--all", action="store_true")
    s.set_defaults(func=cmd_dims)

    s = sub.add_parser("verify-paper", parents=[common], help="run every acceptance check")
    s.set_defaults(func=cmd_verify)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)  # exits with status 2 on usage errors
    try:
        obj, lines = args.func(args)
        status = 0
    except DomainError as e:
        obj, status = e.payload, 1
        lines = obj.pop("_lines", None) or [f"error: {e}"]
    except (ValueError, KeyError) as e:  # includes FlopError and Inconclusive
        msg = e.args[0] if isinstance(e, KeyError) and e.args else str(e)
        obj, lines, status = {"error": str(msg)}, [f"error: {msg}"], 1
    if args.format == "json":
        print(json.dumps(_exact(obj), indent=2))
    else:
        out = sys.stdout if status == 0 else sys.stderr
        if status == 1 and args.func is cmd_verify:
            out = sys.stdout
        for line in lines:
            print(line, file=out)
    return status


if __name__ == "__main__":
    sys.exit(main())

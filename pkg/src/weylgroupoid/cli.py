"""Command-line front end.  Every subcommand prints one canonical JSON object.

Exit codes: 0 success, 1 malformed input, 2 domain or unsupported-setting
error, 3 Groebner budget exceeded.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction
from typing import Callable, Dict, List, Optional

from . import __version__
from .groebner import (
    GREVLEX, LEX, BudgetExceeded, GroebnerBudget, Ideal, contains, eliminate,
    get_default_budget, groebner_basis, radical_contains, set_default_budget,
)
from .groupoid import (
    NotDefinedAt, atyp, maximal_isoset_at, orbit_contains, orbit_description,
)
from .invariants import (
    ADDITIVE, MULTIPLICATIVE, RankTooSmall, Setting, UnsupportedSetting,
    check_membership, ev_map, ev_target_ring, is_w_invariant, reduced_setting,
    t_element,
)
from .poly import PolynomialSyntaxError, RingMismatch, parse_polynomial
from .rootdata import InvalidType, NotIsotropic, SuperType, build_root_system
from .sgeom import (
    Z_BETA, Z_SIGMA, ClosedSet, orbit_closure_ideal, s_closure, symmetrize_report,
)

EXIT_OK, EXIT_INPUT, EXIT_DOMAIN, EXIT_BUDGET = 0, 1, 2, 3

PAPER_REF = {
    "describe": "root data, Weyl group, positive isotropic roots and defect of a classical Lie superalgebra",
    "check": "membership in the supersymmetric invariant ring: W-invariance plus the isotropic-root condition",
    "telem": "the distinguished invariant T whose principal ideal is the kernel of the rank-lowering evaluation",
    "ev": "rank-lowering evaluation map to the invariants of the reduced superalgebra",
    "atyp": "degree of atypicality as the size of a maximal iso-set whose domains contain the point",
    "orbit": "groupoid orbits are W-translates of an affine or toric family of dimension atyp",
    "equiv": "two points lie in one groupoid orbit iff related by an explicit witness path",
    "groebner": "reduced Groebner bases, ideal membership, radical membership and elimination",
    "sclosure": "smallest superalgebraic set containing a W-invariant closed set, built level by level",
    "orbitideal": "vanishing ideal of the Zariski closure of a groupoid orbit",
    "selftest": "property-based acceptance checks with exact arithmetic",
    "error": "no result; see the error field",
}


class InputError(ValueError):
    """Malformed JSON or polynomial text."""


# -- helpers -------------------------------------------------------------------

def load_schema(name: str) -> dict:
    """Published JSON schema for a subcommand's output (or 'error')."""
    from importlib.resources import files

    return json.loads(files("weylgroupoid").joinpath("schemas", f"{name}.json").read_text(encoding="utf-8"))


def canonical_json(obj, pretty: bool = False) -> str:
    if pretty:
        return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False)
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def _load_payload(text: str):
    """JSON given inline, as @path, as a path to an existing .json file, or '-' for stdin."""
    if text == "-":
        text = sys.stdin.read()
    elif text.startswith("@"):
        with open(text[1:], encoding="utf-8") as fh:
            text = fh.read()
    elif text.endswith(".json") and not text.lstrip().startswith(("{", "[")):
        with open(text, encoding="utf-8") as fh:
            text = fh.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON: {exc}") from None


def _super_type(args) -> SuperType:
    t = args.type
    if t is None:
        raise InputError("--type is required")
    if t.lstrip().startswith("{"):
        return SuperType.from_dict(_load_payload(t))
    return SuperType(t, args.m or 0, args.n or 0)


def _setting(args) -> Setting:
    return Setting(build_root_system(_super_type(args)), args.space, experimental=args.experimental)


def _point(text: str, setting: Setting):
    d = _load_payload(text)
    if isinstance(d, list):
        pt = tuple(Fraction(str(v)) for v in d)
        if len(pt) != setting.rs.dim:
            raise ValueError(f"point needs {setting.rs.dim} coordinates")
        return pt
    if not isinstance(d, dict):
        raise InputError("point must be a JSON object or list")
    return setting.rs.point_from_json(d, setting.multiplicative)


def _point_json(pt, setting: Setting) -> dict:
    rs = setting.rs
    return rs.torus_to_json(pt) if setting.multiplicative else rs.weight_to_json(pt)


def _poly(text: str, setting: Setting):
    return parse_polynomial(text, setting.ring)


def _ideal(text: str, setting: Optional[Setting]) -> Ideal:
    d = _load_payload(text)
    if isinstance(d, list):
        if setting is None:
            raise InputError("a bare generator list needs --type to fix the ring")
        d = {"generators": d}
    if not isinstance(d, dict) or "generators" not in d:
        raise InputError("ideal JSON needs a 'generators' list")
    if setting is not None:
        return Ideal.from_json(d, setting.ring)
    if "ring" not in d:
        raise InputError("ideal JSON needs a 'ring' when --type is not given")
    return Ideal.from_json(d)


# -- subcommands -------------------------------------------------------------------

def cmd_describe(args) -> dict:
    rs = build_root_system(_super_type(args))
    out = rs.describe()
    if rs.defect:
        try:
            beta = rs.standard_chain()[0] if rs.is_km else (rs.m - 2, rs.m - 1)
            out["ds_reduction"] = rs.ds_reduction(beta).to_json()
        except (ValueError, NotIsotropic):
            out["ds_reduction"] = None
    else:
        out["ds_reduction"] = None
    return out


def cmd_check(args) -> dict:
    S = _setting(args)
    f = _poly(args.poly, S)
    res = check_membership(f, S, strict=args.strict)
    return {
        "type": S.rs.type.to_dict(),
        "space": S.space,
        "poly": str(f),
        "member": res.member,
        "w_invariant": is_w_invariant(f, S),
        "witness": res.witness,
        "checked_roots": [S.rs.root_to_json(a) for a in res.checked_roots],
    }


def cmd_telem(args) -> dict:
    S = _setting(args)
    T = t_element(S)
    try:
        image = str(ev_map(T.poly, S))
    except RankTooSmall:
        image = None
    return {
        "type": S.rs.type.to_dict(),
        "space": S.space,
        "T": str(T.poly),
        "degree": T.poly.total_degree(),
        "ev_T": image,
        "verified": True,
    }


def cmd_ev(args) -> dict:
    S = _setting(args)
    red = reduced_setting(S, allow_none=True)
    target = ev_target_ring(S)
    out = {
        "type": S.rs.type.to_dict(),
        "space": S.space,
        "target_type": red.rs.type.to_dict() if red else None,
        "target_ring": target.to_dict(),
    }
    if args.poly is not None:
        f = _poly(args.poly, S)
        out["poly"] = str(f)
        out["image"] = str(ev_map(f, S))
    return out


def cmd_atyp(args) -> dict:
    S = _setting(args)
    pt = _point(args.point, S)
    F, E = maximal_isoset_at(pt, S)
    return {
        "type": S.rs.type.to_dict(),
        "space": S.space,
        "point": _point_json(pt, S),
        "atyp": atyp(pt, S),
        "F": [S.rs.root_to_json(a) for a in F],
        "E": [S.rs.root_to_json(a) for a in E],
    }


def cmd_orbit(args) -> dict:
    S = _setting(args)
    return orbit_description(_point(args.point, S), S).to_json()


def cmd_equiv(args) -> dict:
    S = _setting(args)
    a, b = _point(args.a, S), _point(args.b, S)
    wit, direction = orbit_contains(a, b, S), "a->b"
    if wit is None:
        wit, direction = orbit_contains(b, a, S), "b->a"
    return {
        "type": S.rs.type.to_dict(),
        "space": S.space,
        "a": _point_json(a, S),
        "b": _point_json(b, S),
        "equivalent": wit is not None,
        "witness": None if wit is None else dict(wit.to_json(S), direction=direction),
    }


def cmd_groebner(args) -> dict:
    S = _setting(args) if args.type else None
    I = _ideal(args.ideal, S)
    order = LEX if args.order == "lex" else GREVLEX
    out: Dict[str, object] = {"ideal": I.to_json()}
    if not I.ring.laurent:
        out["order"] = order.to_dict(I.ring)
        out["basis"] = [str(g) for g in groebner_basis(I, order)]
    if args.member is not None:
        f = parse_polynomial(args.member, I.ring)
        out["member"] = {"poly": str(f), "in_ideal": contains(I, f)}
    if args.radical is not None:
        f = parse_polynomial(args.radical, I.ring)
        out["radical"] = {"poly": str(f), "in_radical": radical_contains(I, f)}
    if args.eliminate:
        drop = [v.strip() for v in args.eliminate.split(",") if v.strip()]
        E = eliminate(I, drop, contract=True)
        out["elimination"] = {"eliminated": drop, "ideal": E.to_json()}
    return out


def cmd_sclosure(args) -> dict:
    S = _setting(args)
    I = _ideal(args.ideal, S)
    res = s_closure(ClosedSet.from_ideal(I, S), args.z_convention, symmetrize=args.symmetrize)
    out = res.to_json()
    out["z_convention"] = args.z_convention
    return out


def cmd_orbitideal(args) -> dict:
    S = _setting(args)
    pt = _point(args.point, S)
    I = orbit_closure_ideal(pt, S)
    out = {
        "type": S.rs.type.to_dict(),
        "space": S.space,
        "point": _point_json(pt, S),
        "atyp": len(orbit_description(pt, S).F),
        "ideal": I.to_json(),
    }
    if args.symmetrize:
        out["symmetrized_generators"] = symmetrize_report(I, S)
    return out


def cmd_selftest(args) -> dict:
    from .acceptance import run_all

    selected = [int(k) for k in args.criteria.split(",")] if args.criteria else None
    results = run_all(selected)
    for r in results:
        print(r.line(), file=sys.stderr)
    return {
        "criteria": [
            {"number": r.number, "name": r.name, "passed": r.passed, "detail": r.detail, "counts": r.counts}
            for r in results
        ],
        "passed": all(r.passed for r in results),
    }


COMMANDS: Dict[str, Callable] = {
    "describe": cmd_describe,
    "check": cmd_check,
    "telem": cmd_telem,
    "ev": cmd_ev,
    "atyp": cmd_atyp,
    "orbit": cmd_orbit,
    "equiv": cmd_equiv,
    "groebner": cmd_groebner,
    "sclosure": cmd_sclosure,
    "orbitideal": cmd_orbitideal,
    "selftest": cmd_selftest,
}


# -- parser --------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--pretty", action="store_true", help="indented JSON")
    common.add_argument("--timing", action="store_true", help="add wall-clock seconds to the output")
    common.add_argument("--output", "-o", help="write JSON here instead of stdout")
    common.add_argument("--max-pairs", type=int, help="Groebner pair budget")
    common.add_argument("--max-degree", type=int, help="Groebner degree budget")
    common.add_argument("--seed", type=int, default=0, help="recorded in the run manifest")

    typed = argparse.ArgumentParser(add_help=False)
    typed.add_argument("--type", help="family (gl, sl, osp, p, q) or a JSON type descriptor")
    typed.add_argument("--m", type=int, default=0)
    typed.add_argument("--n", type=int, default=0)
    typed.add_argument("--space", default=ADDITIVE, choices=[ADDITIVE, MULTIPLICATIVE, "torus"])
    typed.add_argument("--experimental", action="store_true", help="allow p(n) on h*")

    p = argparse.ArgumentParser(prog="weylgroupoid", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    sub.add_parser("describe", parents=[common, typed], help="root data summary")
    s = sub.add_parser("check", parents=[common, typed], help="invariant-ring membership")
    s.add_argument("--poly", required=True)
    s.add_argument("--strict", action="store_true", help="check every root of Omega")
    sub.add_parser("telem", parents=[common, typed], help="the T element")
    s = sub.add_parser("ev", parents=[common, typed], help="evaluation map")
    s.add_argument("--poly")
    s = sub.add_parser("atyp", parents=[common, typed], help="degree of atypicality")
    s.add_argument("--point", required=True)
    s = sub.add_parser("orbit", parents=[common, typed], help="groupoid orbit description")
    s.add_argument("--point", required=True)
    s = sub.add_parser("equiv", parents=[common, typed], help="orbit equivalence with witness")
    s.add_argument("--a", required=True)
    s.add_argument("--b", required=True)
    s = sub.add_parser("groebner", parents=[common, typed], help="Groebner basis utilities")
    s.add_argument("--ideal", required=True)
    s.add_argument("--order", choices=["grevlex", "lex"], default="grevlex")
    s.add_argument("--member")
    s.add_argument("--radical")
    s.add_argument("--eliminate", help="comma-separated variable names")
    s = sub.add_parser("sclosure", parents=[common, typed], help="S-closure of a W-invariant set")
    s.add_argument("--ideal", required=True)
    s.add_argument("--z-convention", choices=[Z_BETA, Z_SIGMA], default=Z_BETA)
    s.add_argument("--symmetrize", action="store_true")
    s = sub.add_parser("orbitideal", parents=[common, typed], help="ideal of an orbit closure")
    s.add_argument("--point", required=True)
    s.add_argument("--symmetrize", action="store_true")
    s = sub.add_parser("selftest", parents=[common], help="run the acceptance checks")
    s.add_argument("--criteria", help="comma-separated criterion numbers")
    return p


def _config(args) -> dict:
    budget = get_default_budget()
    cfg = {
        "command": args.command,
        "seed": args.seed,
        "budget": {"max_pairs": budget.max_pairs, "max_degree": budget.max_degree},
    }
    if getattr(args, "type", None) is not None:
        cfg["type"] = args.type
        cfg["m"], cfg["n"] = args.m, args.n
        cfg["space"] = MULTIPLICATIVE if args.space == "torus" else args.space
    if getattr(args, "z_convention", None):
        cfg["z_convention"] = args.z_convention
    return cfg


def run(argv: Optional[List[str]] = None) -> tuple:
    """Parse and dispatch; returns (exit code, JSON document, parsed args)."""
    args = build_parser().parse_args(argv)
    if getattr(args, "space", None) == "torus":
        args.space = MULTIPLICATIVE
    budget = get_default_budget()
    if args.max_pairs or args.max_degree:
        set_default_budget(GroebnerBudget(args.max_pairs or budget.max_pairs, args.max_degree or budget.max_degree))
    cfg = _config(args)
    start = time.perf_counter()
    code, doc = EXIT_OK, None
    try:
        result = COMMANDS[args.command](args)
        doc = {"command": args.command, "paper_ref": PAPER_REF[args.command], "result": result}
        if args.command == "selftest" and not result["passed"]:
            code = EXIT_DOMAIN
    except (InputError, PolynomialSyntaxError, OSError, KeyError) as exc:
        code, doc = EXIT_INPUT, _error("input", exc, args)
    except BudgetExceeded as exc:
        code, doc = EXIT_BUDGET, _error("budget", exc, args)
    except (NotDefinedAt, UnsupportedSetting, RankTooSmall, InvalidType, NotIsotropic,
            RingMismatch, ValueError) as exc:
        code, doc = EXIT_DOMAIN, _error("domain", exc, args)
    finally:
        set_default_budget(budget)
    doc["config"] = cfg
    if args.timing:
        doc["timing"] = {"seconds": round(time.perf_counter() - start, 6)}
    return code, doc, args


def _error(kind: str, exc: Exception, args) -> dict:
    return {
        "command": args.command,
        "paper_ref": PAPER_REF["error"],
        "error": {"kind": kind, "exception": type(exc).__name__, "message": str(exc)},
    }


def main(argv: Optional[List[str]] = None) -> int:
    code, doc, args = run(argv)
    text = canonical_json(doc, args.pretty) + "\n"
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())

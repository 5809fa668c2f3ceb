"""Batch command-line interface: build objects, run verifications, emit reports.

Subcommands::

    reduce TERM                     normalize and reduce against a saturated basis
    verify m-coassoc                twisted coassociativity of the matrix comultiplication
    verify affine-comodule          the comodule law for the plane coaction
    verify m2-representability      pullback along the comultiplication = matrix product
    verify twist                    scaling twists of the classical bialgebra/comodule
    verify envelope [FILE]          the envelope comultiplication suite
    check algebra FILE              axiom checks on a carrier descriptor file

The congruence defaults to the literal unital relation set; ``--non-unital``
switches to associator instances without unit arguments.  Reports echo every
parameter; JSON output is deterministic unless ``--timings`` is requested.
"""

from __future__ import annotations

import argparse
import sys
import time
from fractions import Fraction

from .algebras import (PreconditionError, check_hom_associative,
                       check_multiplicative, check_unital, matrix_algebra,
                       poly_algebra, q_poly_algebra, random_matrix,
                       yau_twist_algebra)
from .bialgebras import (FreeHomBialgebra, check_comodule,
                         check_comodule_homalgebra, check_delta_is_morphism,
                         check_hom_coassoc, check_comultiplicative,
                         classical_affine_comodule, classical_m2_bialgebra,
                         hom_affine_plane, lambda_scaling_pair, m_bialgebra,
                         representability_check, twist_comodule,
                         yau_twist_bialgebra)
from .congruence import (Bound, OutOfWindowError, ResourceCapError,
                         SaturationConfig, saturate)
from .grammar import TermSyntaxError, format_lincomb, parse_lincomb
from .homlie import (affine_line_twisted, check_envelope_bialgebra,
                     check_hom_lie, envelope, load_hom_lie)
from .morphisms import FreeAlgebraHandle
from .poly import PolyEndo, parse_poly
from .reports import LawReport, dump_json, render_text, report_document
from .terms import LinComb
import random


def _bound_args(p):
    p.add_argument("--max-arity", type=int, default=3)
    p.add_argument("--max-exp", type=int, default=1)
    p.add_argument("--non-unital", action="store_true",
                   help="drop unit arguments from the relation instances")


def _output_args(p):
    p.add_argument("--json", action="store_true", help="emit a JSON report")
    p.add_argument("--timings", action="store_true",
                   help="include wall-clock time in the report (breaks byte-determinism)")
    p.add_argument("--seed", type=int, default=0)


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="homalgebra", description=__doc__,
                                  formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("reduce", help="normalize a term and reduce it")
    p.add_argument("expr", help="a linear combination in the term grammar")
    p.add_argument("--gens", help="comma-separated generator names (default: inferred)")
    _bound_args(p)
    _output_args(p)

    v = sub.add_parser("verify", help="run a verification suite")
    vs = v.add_subparsers(dest="suite", required=True)

    p = vs.add_parser("m-coassoc")
    p.add_argument("--file", help="free-bialgebra descriptor file (default: built-in)")
    _bound_args(p)
    _output_args(p)

    p = vs.add_parser("affine-comodule")
    _bound_args(p)
    _output_args(p)

    p = vs.add_parser("m2-representability")
    p.add_argument("--carrier", choices=["classical", "q-poly"], default="classical")
    p.add_argument("--q", default="2", help="twist scale for the q-poly carrier")
    p.add_argument("--pairs", type=int, default=50)
    _output_args(p)

    p = vs.add_parser("twist")
    p.add_argument("--lambda", dest="lam", default="3", help="scaling parameter")
    p.add_argument("--file", help="twist descriptor file (overrides --lambda)")
    _output_args(p)

    p = vs.add_parser("envelope")
    p.add_argument("file", nargs="?", help="Hom-Lie descriptor file (default: built-in fixture)")
    p.add_argument("--max-arity", type=int, default=3)
    p.add_argument("--non-unital", action="store_true")
    _output_args(p)

    c = sub.add_parser("check", help="axiom checks")
    cs = c.add_subparsers(dest="what", required=True)
    p = cs.add_parser("algebra")
    p.add_argument("file", help="carrier descriptor file")
    p.add_argument("--samples", type=int, default=100)
    _output_args(p)

    return top


def _config(args) -> SaturationConfig:
    return SaturationConfig(unit_instances=not args.non_unital)


def _params(args, **extra) -> dict:
    out = dict(extra)
    for key in ("max_arity", "max_exp", "seed"):
        if hasattr(args, key):
            out[key] = getattr(args, key)
    if hasattr(args, "non_unital"):
        out["unit_instances"] = not args.non_unital
    return out


# ---------------------------------------------------------------------------
# subcommand bodies (each returns a list of reports)
# ---------------------------------------------------------------------------

def run_reduce(args):
    v = parse_lincomb(args.expr)
    gens = sorted(args.gens.split(",")) if args.gens else sorted(v.generators())
    if not gens or gens == [""]:
        raise ValueError("no generators: pass --gens for constant inputs")
    basis = saturate(gens, Bound(args.max_arity, args.max_exp), _config(args))
    residue = basis.reduce(v)
    report = LawReport("reduce", context=basis.describe())
    from .reports import LawItem
    # reducing is a query, not a check: a nonzero residue is a normal outcome
    report.items.append(LawItem(
        label="residue class representative",
        lhs=format_lincomb(v),
        rhs=format_lincomb(residue),
        verdict="PASS",
        residue=format_lincomb(residue)))
    return [report], {"normalized": format_lincomb(v),
                      "residue": format_lincomb(residue),
                      "reduces_to_zero": residue.is_zero()}


def _load_free_bialgebra(path: str) -> FreeHomBialgebra:
    gens = None
    images = {}
    with open(path) as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            head, _, rest = line.partition(" ")
            rest = rest.strip()
            if head == "kind":
                if rest != "free-bialgebra":
                    raise ValueError(f"line {lineno}: expected kind free-bialgebra")
            elif head == "gens":
                gens = tuple(rest.split())
            elif head == "delta":
                name, _, expr = rest.partition("=")
                images[name.strip()] = parse_lincomb(expr.strip())
            else:
                raise ValueError(f"line {lineno}: unknown directive {head!r}")
    if gens is None or set(images) != set(gens):
        raise ValueError("descriptor needs gens and a delta image per generator")
    return FreeHomBialgebra(FreeAlgebraHandle(gens), images)


def run_m_coassoc(args):
    B = _load_free_bialgebra(args.file) if args.file else m_bialgebra()
    bound = Bound(args.max_arity, args.max_exp)
    config = _config(args)
    reports = [
        check_hom_coassoc(B, bound=bound, config=config),
        check_comultiplicative(B),
        check_delta_is_morphism(B, bound=bound,
                                config=SaturationConfig(unit_instances=config.unit_instances),
                                seed=args.seed),
    ]
    return reports, {}


def run_affine_comodule(args):
    C = hom_affine_plane()
    bound = Bound(args.max_arity, args.max_exp)
    config = _config(args)
    reports = [
        check_comodule(C, bound=bound, config=config),
        check_comodule_homalgebra(C, bound=bound,
                                  config=SaturationConfig(unit_instances=config.unit_instances),
                                  seed=args.seed),
    ]
    return reports, {}


def run_m2_representability(args):
    rng = random.Random(args.seed)
    reports = []
    if args.carrier == "classical":
        entries = [f"{m}{i}{j}" for m in "xy" for i in (1, 2) for j in (1, 2)]
        A = poly_algebra(entries)
        from .poly import Poly
        X = ((Poly.var("x11"), Poly.var("x12")), (Poly.var("x21"), Poly.var("x22")))
        Y = ((Poly.var("y11"), Poly.var("y12")), (Poly.var("y21"), Poly.var("y22")))
        rep = representability_check(A, X, Y)
        rep.law = "matrix_representability (generic symbols)"
        reports.append(rep)
    else:
        A = q_poly_algebra(Fraction(args.q))
    for k in range(args.pairs):
        X, Y = random_matrix(A, rng), random_matrix(A, rng)
        rep = representability_check(A, X, Y)
        rep.law = f"matrix_representability (random pair {k})"
        reports.append(rep)
    return reports, {"carrier": A.name, "pairs": args.pairs}


def _load_twist_file(path: str):
    lam = None
    phi_h = {}
    phi_a = {}
    with open(path) as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            head, _, rest = line.partition(" ")
            rest = rest.strip()
            if head == "kind":
                if rest != "twist":
                    raise ValueError(f"line {lineno}: expected kind twist")
            elif head == "lambda":
                lam = Fraction(rest)
            elif head in ("phi_H", "phi_A"):
                name, _, expr = rest.partition("=")
                target = phi_h if head == "phi_H" else phi_a
                target[name.strip()] = parse_poly(expr.strip())
            else:
                raise ValueError(f"line {lineno}: unknown directive {head!r}")
    if lam is not None:
        return lambda_scaling_pair(lam)
    return PolyEndo(phi_h), PolyEndo(phi_a)


def run_twist(args):
    if args.file:
        phi_H, phi_A = _load_twist_file(args.file)
        lam = None
    else:
        lam = Fraction(args.lam)
        phi_H, phi_A = lambda_scaling_pair(lam)
    H = classical_m2_bialgebra()
    C = classical_affine_comodule()
    Ht = yau_twist_bialgebra(H, phi_H)
    Ct = twist_comodule(H, C, phi_H, phi_A)
    reports = [
        check_hom_coassoc(Ht),
        check_comultiplicative(Ht),
        check_delta_is_morphism(Ht),
        check_comodule(Ct),
        check_comodule_homalgebra(Ct),
    ]
    return reports, {"lambda": str(lam) if lam is not None else "file"}


def run_envelope(args):
    if args.file:
        with open(args.file) as fh:
            L = load_hom_lie(fh.read())
    else:
        L = affine_line_twisted()
    reports = [check_hom_lie(L)]
    model = envelope(L, max_arity=min(args.max_arity, 2),
                     unit_instances=not args.non_unital)
    from .reports import LawItem
    bracket_rep = LawReport("bracket_relations", context=model.basis.describe())
    for i, ni in enumerate(L.names):
        for j in range(i + 1, L.dim):
            nj = L.names[j]
            u = model.gen(ni) * model.gen(nj) - model.gen(nj) * model.gen(ni)
            rhs = LinComb.zero()
            for k, c in enumerate(L.bracket_table[i][j]):
                if c:
                    rhs = rhs + c * model.gen(L.names[k])
            res = model.equal_mod(u, rhs)
            bracket_rep.items.append(LawItem(
                f"[{ni},{nj}]", format_lincomb(u), format_lincomb(rhs),
                res.verdict.value,
                None if res.proven else format_lincomb(res.residue)))
    reports.append(bracket_rep)
    reports.extend(check_envelope_bialgebra(L, max_arity=args.max_arity,
                                            unit_instances=not args.non_unital))
    extra = {"hom_lie": list(L.names),
             "residual_dimensions": {str(k): v for k, v in model.dimension_report().items()}}
    return reports, extra


def _load_algebra_file(path: str):
    kind = None
    names = []
    twist = {}
    with open(path) as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            head, _, rest = line.partition(" ")
            rest = rest.strip()
            if head == "kind":
                kind = rest
            elif head == "vars":
                names = rest.split()
            elif head == "twist":
                name, _, expr = rest.partition("=")
                twist[name.strip()] = parse_poly(expr.strip())
            else:
                raise ValueError(f"line {lineno}: unknown directive {head!r}")
    if kind not in ("poly", "matrix"):
        raise ValueError("descriptor kind must be poly or matrix")
    if not names:
        raise ValueError("descriptor needs a vars line")
    A = poly_algebra(names)
    if twist:
        A = yau_twist_algebra(A, PolyEndo(twist))
    if kind == "matrix":
        A = matrix_algebra(A)
    return A


def run_check_algebra(args):
    A = _load_algebra_file(args.file)
    reports = [
        check_hom_associative(A, args.samples, args.seed),
        check_multiplicative(A, args.samples, args.seed),
        check_unital(A, args.samples, args.seed),
    ]
    return reports, {"carrier": A.name}


# ---------------------------------------------------------------------------

def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    t0 = time.time()
    try:
        if args.command == "reduce":
            job = "reduce"
            reports, extra = run_reduce(args)
        elif args.command == "verify" and args.suite == "m-coassoc":
            job = "verify m-coassoc"
            reports, extra = run_m_coassoc(args)
        elif args.command == "verify" and args.suite == "affine-comodule":
            job = "verify affine-comodule"
            reports, extra = run_affine_comodule(args)
        elif args.command == "verify" and args.suite == "m2-representability":
            job = "verify m2-representability"
            reports, extra = run_m2_representability(args)
        elif args.command == "verify" and args.suite == "twist":
            job = "verify twist"
            reports, extra = run_twist(args)
        elif args.command == "verify" and args.suite == "envelope":
            job = "verify envelope"
            reports, extra = run_envelope(args)
        elif args.command == "check" and args.what == "algebra":
            job = "check algebra"
            reports, extra = run_check_algebra(args)
        else:
            print("unknown command", file=sys.stderr)
            return 2
    except TermSyntaxError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except (OutOfWindowError, ResourceCapError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except PreconditionError as exc:
        print(f"precondition failed: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    doc = report_document(job, _params(args, **extra), reports,
                          elapsed=(time.time() - t0) if args.timings else None)
    print(dump_json(doc) if args.json else render_text(doc))
    if doc["passed"]:
        return 0
    for rep in doc["reports"]:
        if not rep["passed"]:
            name = rep.get("law", "report")
            print(f"first failing law: {name}", file=sys.stderr)
            break
    return 1


if __name__ == "__main__":
    raise SystemExit(main())

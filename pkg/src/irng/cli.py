"""Command-line entry point.

Exit codes: 0 on success, 1 when a verification fails, 2 on usage or
input errors. Reports are plain text with a stable line format.
"""

import argparse
import sys

from . import catalog, config
from .constructions import (
    brute_force_unit,
    find_unit_commutative,
    single_generator_finite_irng,
)
from .elgroup import (
    generate_group,
    group_weight,
    quotient_hom_check,
    steinberg_check,
    thm11_upper_bound_witness,
)
from .errors import IrngError, LemmaViolated, CorollaryViolated, ParseError
from .freeidem import build_membership_certificate, theorem3_chain, verify_certificate, verify_fixing_identities
from .ideals import ideal_generated_by, is_irng, left_ideal_generated_by, weight_exact, weight_lower_bound
from .rng import load_rng, serialize_rng
from .semigroups import corollary8_generator, lemma9_extract, load_semigroup, serialize_semigroup


class VerificationFailed(Exception):
    pass


def _emit(lines):
    for ln in lines:
        print(ln)


def _parse_vector(R, text):
    parts = text.replace(",", " ").split()
    if len(parts) != R.rank:
        raise ParseError(f"element {text!r} needs {R.rank} coefficients")
    try:
        return R.element([int(p) for p in parts])
    except ValueError:
        raise ParseError(f"non-integer coefficient in {text!r}") from None


def _parse_subset(text):
    try:
        return [int(p) for p in text.replace(",", " ").split()]
    except ValueError:
        raise ParseError(f"bad element list {text!r}") from None


def _load_rng(path):
    try:
        return load_rng(path)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None


def _load_semigroup(path):
    try:
        return load_semigroup(path)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None


# -- commands ------------------------------------------------------------------

def cmd_verify(args):
    if args.rng:
        R = _load_rng(args.rng)
        _emit([f"rng: {R.name}", f"factors: {' '.join(map(str, R.factors))}",
               f"order: {R.order}", "axioms: verified",
               f"commutative: {'yes' if R.is_commutative() else 'no'}",
               f"irng: {'yes' if is_irng(R) else 'no'}"])
    else:
        S = _load_semigroup(args.semigroup)
        diag = all(S.table[a][a] == a for a in range(S.order))
        _emit([f"semigroup: {S.name}", f"order: {S.order}", "associativity: verified",
               f"band: {'yes' if diag else 'no'}"])


def cmd_ideal(args):
    R = _load_rng(args.rng)
    Z = [_parse_vector(R, g) for g in args.gen]
    I = left_ideal_generated_by(R, Z) if args.left else ideal_generated_by(R, Z)
    lines = [f"rng: {R.name} order {R.order}", f"kind: {I.kind}",
             f"generators: {len(Z)}"]
    lines += [f"  {z}" for z in Z]
    lines.append(f"ideal order: {I.order}")
    lines.append("spanning set:")
    lines += [f"  {g}" for g in I.generators()]
    lines.append(f"whole rng: {'yes' if I.is_full() else 'no'}")
    _emit(lines)


def cmd_weight(args):
    R = _load_rng(args.rng)
    res = weight_exact(R, cap=args.cap, enum_cap=args.enum_cap, workers=args.workers)
    print(res)
    if args.verbose:
        print(f"lower bound: {weight_lower_bound(R)}")
        for x in res.witness:
            print(f"witness: {x}")


def cmd_unit(args):
    R = _load_rng(args.rng)
    wit = find_unit_commutative(R)
    lines = [f"rng: {R.name} order {R.order}", f"generators: {len(wit.generators)}"]
    for i, row in enumerate(wit.A, 1):
        lines.append(f"A row {i}: " + "; ".join(str(a) for a in row))
    lines.append(f"det(I - A) = {wit.det}")
    lines.append(f"adj(I - A)(I - A) = det(I - A) I: {'verified' if wit.adjugate_ok else 'FAILED'}")
    lines.append(f"z = {wit.z}")
    ok = wit.adjugate_ok and wit.annihilates
    if R.order <= config.ENUM_CAP:
        b = brute_force_unit(R)
        agree = b == wit.z
        ok = ok and agree
        lines.append(f"brute-force unit: {b} ({'agrees' if agree else 'DISAGREES'})")
    lines.append(f"verdict: {'verified' if ok else 'FAILED'}")
    _emit(lines)
    if not ok:
        raise VerificationFailed()


def cmd_cor6(args):
    R = _load_rng(args.rng)
    try:
        _, report = single_generator_finite_irng(R, cap=args.enum_cap)
    except CorollaryViolated as exc:
        print(f"FAILED: {exc}")
        raise VerificationFailed() from None
    _emit(report.lines())


def cmd_thm3_free(args):
    n = args.n
    sides = args.sides or "L" * n
    chain = theorem3_chain(n, sides)
    lines = [f"free idempotent rng on {n} generators, sides {''.join(chain.sides)}"]
    for i in range(n):
        lines.append(f"w{i + 1} = {chain.w[i]}")
    ok_fix = verify_fixing_identities(chain)
    lines.append(f"fixing identities: {'verified' if ok_fix else 'FAILED'}")
    lines.append(f"z = {chain.z[-1]}")
    good = 0
    for i in range(1, n + 1):
        cert = build_membership_certificate(chain, i, budget=args.budget)
        ok = verify_certificate(cert)
        good += ok
        lines.append(f"x{i}: {len(cert.pairs)} pairs, {cert.term_count()} terms, "
                     f"{'verified' if ok else 'FAILED'}")
        if args.show:
            for p, q in cert.pairs:
                lines.append(f"  ({p}) z ({q})")
    lines.append(f"certificates: {good}/{n} verified")
    _emit(lines)
    if not ok_fix or good != n:
        raise VerificationFailed()


def cmd_x0(args):
    S = _load_semigroup(args.semigroup)
    X = _parse_subset(args.X) if args.X else list(range(S.order))
    try:
        res = lemma9_extract(S, X)
    except LemmaViolated as exc:
        print(f"FAILED: {exc}")
        raise VerificationFailed() from None
    _emit([f"semigroup: {S.name} order {S.order}"] + res.lines())


def cmd_cor8(args):
    S = _load_semigroup(args.semigroup)
    X = _parse_subset(args.X) if args.X else list(range(S.order))
    _, report = corollary8_generator(args.m, S, X)
    _emit(report.lines())
    if not report.ok:
        raise VerificationFailed()


def cmd_el_generate(args):
    R = _load_rng(args.rng)
    G = generate_group(R, args.n, cap=args.cap)
    print(f"rng: {R.name}, n = {args.n}")
    print(f"generators: {len(G.generators)}")
    print(f"group order: {G.order}")


def cmd_el_weight(args):
    R = _load_rng(args.rng)
    G = generate_group(R, args.n, cap=args.cap)
    print(f"group order: {G.order}")
    res = group_weight(G, cap=args.subset_cap)
    print(f"group weight: {res}")
    for g in res.witness:
        print("witness: " + "; ".join(" ".join(r) for r in g.rows()))


def cmd_el_thm11(args):
    R = _load_rng(args.rng)
    rep = thm11_upper_bound_witness(R, args.n, group_cap=args.cap, subset_cap=args.subset_cap)
    _emit(rep.lines())
    if rep.upper_ok is False or rep.lower_ok is False:
        raise VerificationFailed()


def cmd_el_steinberg(args):
    R = _load_rng(args.rng)
    rep = steinberg_check(R, args.n, exhaustive=args.exhaustive, samples=args.samples,
                          seed=args.seed)
    _emit(rep.lines())
    if not rep.ok:
        raise VerificationFailed()


def cmd_el_quotient(args):
    R = _load_rng(args.rng)
    Z = [_parse_vector(R, g) for g in args.gen]
    rep = quotient_hom_check(R, Z, args.n, samples=args.samples, seed=args.seed)
    _emit(rep.lines())
    if not rep.ok:
        raise VerificationFailed()


def cmd_catalog_list(args):
    for name in catalog.catalog_names():
        e = catalog.CATALOG[name]
        obj = e.build()
        print(f"{name}\t{e.kind}\torder {obj.order}")


def cmd_catalog_emit(args):
    if args.name not in catalog.CATALOG:
        raise ParseError(f"no catalog entry named {args.name!r}")
    e = catalog.CATALOG[args.name]
    obj = e.build()
    text = serialize_rng(obj) if e.kind == "rng" else serialize_semigroup(obj)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# -- parser ---------------------------------------------------------------------

def build_parser():
    p = argparse.ArgumentParser(
        prog="irng",
        description="Ideal generators, units and elementary groups of finite rngs.",
        epilog="Caps default to IRNG_ENUM_CAP, IRNG_GROUP_CAP, IRNG_SUBSET_CAP and "
               "IRNG_TERM_BUDGET when set.")
    sub = p.add_subparsers(dest="command", required=True)

    def rng_arg(q):
        q.add_argument("--rng", required=True, help="rng file")

    q = sub.add_parser("verify", help="parse and validate an rng or semigroup file")
    g = q.add_mutually_exclusive_group(required=True)
    g.add_argument("--rng")
    g.add_argument("--semigroup")
    q.set_defaults(func=cmd_verify)

    q = sub.add_parser("ideal", help="ideal generated by elements")
    rng_arg(q)
    q.add_argument("--gen", action="append", default=[],
                   help="coefficient vector, e.g. '1 0 1'; repeatable")
    q.add_argument("--left", action="store_true", help="left ideal instead of two-sided")
    q.set_defaults(func=cmd_ideal)

    q = sub.add_parser("weight", help="least number of ideal generators")
    rng_arg(q)
    q.add_argument("--cap", type=int, default=None,
                   help=f"join budget (default {config.SUBSET_CAP})")
    q.add_argument("--enum-cap", type=int, default=None,
                   help=f"max rng order to enumerate (default {config.ENUM_CAP})")
    q.add_argument("--workers", type=int, default=1, help="processes for principal ideals")
    q.add_argument("--verbose", action="store_true", help="print lower bound and witness")
    q.set_defaults(func=cmd_weight)

    q = sub.add_parser("unit", help="unit of a commutative irng from its generators")
    rng_arg(q)
    q.set_defaults(func=cmd_unit)

    q = sub.add_parser("cor6", help="single ideal generator of a finite irng")
    rng_arg(q)
    q.add_argument("--enum-cap", type=int, default=None)
    q.set_defaults(func=cmd_cor6)

    q = sub.add_parser("thm3-free", help="chain element and certificates in the free idempotent rng")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--sides", default=None, help="string over L/R, default all L")
    q.add_argument("--budget", type=int, default=None,
                   help=f"term budget (default {config.TERM_BUDGET})")
    q.add_argument("--show", action="store_true", help="print certificate pairs")
    q.set_defaults(func=cmd_thm3_free)

    for name, fn, help_ in (("x0", cmd_x0, "X_1 / X_0 extraction for S = SX"),
                            ("cor8", cmd_cor8, "single generator of a semigroup algebra")):
        q = sub.add_parser(name, help=help_)
        q.add_argument("--semigroup", required=True)
        q.add_argument("--X", default=None, help="element indices, default all of S")
        if name == "cor8":
            q.add_argument("--m", type=int, default=2, help="coefficient modulus")
        q.set_defaults(func=fn)

    el = sub.add_parser("el", help="elementary matrix groups EL_n(R)")
    esub = el.add_subparsers(dest="el_command", required=True)

    def el_common(q):
        rng_arg(q)
        q.add_argument("--n", type=int, required=True)
        q.add_argument("--cap", type=int, default=None,
                       help=f"group size cap (default {config.GROUP_CAP})")

    q = esub.add_parser("generate", help="BFS closure of EL_n(R)")
    el_common(q)
    q.set_defaults(func=cmd_el_generate)

    q = esub.add_parser("weight", help="normal generation weight of EL_n(R)")
    el_common(q)
    q.add_argument("--subset-cap", type=int, default=None)
    q.set_defaults(func=cmd_el_weight)

    q = esub.add_parser("thm11", help="packed-matrix upper bound and weight lower bound")
    el_common(q)
    q.add_argument("--subset-cap", type=int, default=None)
    q.set_defaults(func=cmd_el_thm11)

    q = esub.add_parser("steinberg", help="check the Steinberg relations")
    rng_arg(q)
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--exhaustive", action="store_true")
    q.add_argument("--samples", type=int, default=1000)
    q.add_argument("--seed", type=int, default=0)
    q.set_defaults(func=cmd_el_steinberg)

    q = esub.add_parser("quotient", help="reduction EL_n(R) -> EL_n(R/<Z>) on samples")
    rng_arg(q)
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--gen", action="append", default=[])
    q.add_argument("--samples", type=int, default=1000)
    q.add_argument("--seed", type=int, default=0)
    q.set_defaults(func=cmd_el_quotient)

    cat = sub.add_parser("catalog", help="built-in example rngs and semigroups")
    csub = cat.add_subparsers(dest="catalog_command", required=True)
    q = csub.add_parser("list")
    q.set_defaults(func=cmd_catalog_list)
    q = csub.add_parser("emit")
    q.add_argument("name")
    q.add_argument("-o", "--output", default=None)
    q.set_defaults(func=cmd_catalog_emit)
    return p


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code
    try:
        args.func(args)
    except VerificationFailed:
        return 1
    except (IrngError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())

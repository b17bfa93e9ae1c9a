"""Command surface.  Exit codes: 0 success/PASS, 1 NO/FAIL verdicts,
2 UNKNOWN, 3 input errors.  Reports go to standard output."""

import argparse
import sys

from .complexes import (ComplexError, OrbifoldComplex, SimplicialGComplex,
                        quotient_orbifold_complex)
from .equivalence import morita_equivalent
from .groupoid import FiniteGroupoid, GroupoidError, orbits, skeleton
from .groups import AbstractGroup, GroupError, conjugacy_classes
from .inertia import (baez_dolan_cardinality, inertia_groupoid,
                      model_cardinalities, sectors_discrete,
                      sectors_simplicial, string_euler_cardinality)
from .io import ParseError, load
from .lscat import (ToolConfig, cat_bounds, deformable_into,
                    inertia_cat_report, relative_cat, wcat)
from .morse import critical_orbits, m_function, verify_ls_inequality

OK, FAIL, UNKNOWN_EXIT, BAD_INPUT = 0, 1, 2, 3


def _load(path, kinds):
    value = load(path)
    names = {FiniteGroupoid: "groupoid", AbstractGroup: "group",
             OrbifoldComplex: "model", SimplicialGComplex: "model",
             dict: "function"}
    if not isinstance(value, kinds):
        want = "/".join(sorted({names.get(k, k.__name__) for k in kinds}))
        raise ParseError("%s: expected a %s file" % (path, want))
    return value


def _as_model(value):
    if isinstance(value, SimplicialGComplex):
        return quotient_orbifold_complex(value)
    return value


def _config(args):
    return ToolConfig(depth=args.depth, budget=args.budget)


def _print_header(args):
    if getattr(args, "seed", None) is not None:
        print("seed: %d" % args.seed)


def cmd_validate(args):
    value = load(args.file)
    kind = type(value).__name__
    print("ok: %s (%s)" % (args.file, kind))
    return OK


def cmd_orbits(args):
    g = _load(args.file, (FiniteGroupoid,))
    for block in orbits(g):
        print("orbit: %s" % " ".join(block))
    return OK


def cmd_skeleton(args):
    g = _load(args.file, (FiniteGroupoid,))
    for rec in skeleton(g):
        print("orbit %s: representative %s, isotropy order %d, classes %d"
              % (rec.orbit_id, rec.representative, len(rec.group),
                 conjugacy_classes(rec.group)[1]))
    return OK


def cmd_morita(args):
    a = _load(args.a, (FiniteGroupoid,))
    b = _load(args.b, (FiniteGroupoid,))
    got = morita_equivalent(a, b)
    print("morita: %s" % ("yes" if got else "no"))
    if not got:
        print("obstruction: %s" % (got.obstruction,))
    return OK if got else FAIL


def cmd_inertia(args):
    g = _load(args.file, (FiniteGroupoid,))
    ig = inertia_groupoid(g)
    print("inertia: %d objects, %d arrows, %d orbits"
          % (len(ig.objects), len(ig.arrows), len(orbits(ig))))
    for rec in skeleton(ig):
        print("orbit %s: isotropy order %d" % (rec.orbit_id, len(rec.group)))
    return OK


def cmd_sectors(args):
    value = _load(args.file, (FiniteGroupoid, OrbifoldComplex,
                              SimplicialGComplex))
    if isinstance(value, FiniteGroupoid):
        dec = sectors_discrete(value)
        for s in dec:
            print("sector %s: %s, %d loops"
                  % (s.sector_id, "twisted" if s.twisted else "untwisted",
                     len(s.objects)))
    else:
        dec = sectors_simplicial(value)
        for s in dec:
            print("sector %s: %s, %d vertices, dim %d"
                  % (s.sector_id, "twisted" if s.twisted else "untwisted",
                     len(s.submodel.vertices), s.submodel.complex.dim))
    print("sectors: %d" % len(dec))
    return OK


def cmd_card(args):
    value = _load(args.file, (FiniteGroupoid, OrbifoldComplex,
                              SimplicialGComplex))
    if isinstance(value, FiniteGroupoid):
        bd = baez_dolan_cardinality(value)
        se = string_euler_cardinality(value)
    else:
        bd, se = model_cardinalities(_as_model(value))
    print("baez-dolan: %s" % bd)
    print("string-euler: %d" % se)
    return OK


def _print_covering(report):
    for piece in report.covering:
        print("piece: %d simplices" % len(piece.simplices))
        print("  target: %s" % piece.weight_target)
        print("  weight: %d" % piece.weight)
        cert = piece.certificates[piece.weight_target]
        print("  collapse length: %d" % len(cert.pairs))


def cmd_cat(args):
    model = _as_model(_load(args.file, (OrbifoldComplex, SimplicialGComplex)))
    _print_header(args)
    report = cat_bounds(model, _config(args))
    upper = "unknown" if report.upper is None else report.upper
    print("cat: lower %d, upper %s" % (report.lower, upper))
    for tag, value in report.lower_tags:
        print("  lower[%s] = %d" % (tag, value))
    _print_covering(report)
    if report.upper is None:
        return UNKNOWN_EXIT
    return OK


def cmd_wcat(args):
    model = _as_model(_load(args.file, (OrbifoldComplex, SimplicialGComplex)))
    _print_header(args)
    got = wcat(model, _config(args))
    if got.value is None:
        print("wcat: interval %s..%s" % got.interval)
        return UNKNOWN_EXIT
    print("wcat: %d" % got.value)
    for piece in got.covering:
        print("piece: %d simplices, target %s, weight %d"
              % (len(piece.simplices), piece.weight_target, piece.weight))
    return OK


def cmd_relcat(args):
    model = _as_model(_load(args.file, (OrbifoldComplex, SimplicialGComplex)))
    part = model.complex.full_subcomplex(args.vertices)
    report = relative_cat(model, part, _config(args))
    upper = "unknown" if report.upper is None else report.upper
    print("relcat: lower %d, upper %s" % (report.lower, upper))
    return OK if report.upper is not None else UNKNOWN_EXIT


def cmd_deform(args):
    model = _as_model(_load(args.file, (OrbifoldComplex, SimplicialGComplex)))
    m_part = model.complex.full_subcomplex(args.from_vertices.split(","))
    n_part = model.complex.full_subcomplex(args.into_vertices.split(","))
    verdict, cert = deformable_into(model, m_part, n_part, _config(args))
    print("deformable: %s" % verdict)
    if cert is not None:
        print("collapse length: %d" % len(cert.pairs))
    return OK if verdict == "yes" else UNKNOWN_EXIT


def cmd_critical(args):
    model = _as_model(_load(args.model, (OrbifoldComplex, SimplicialGComplex)))
    values = _load(args.function, (dict,))
    report = critical_orbits(model, values, _config(args))
    if report.degenerate:
        print("degenerate: yes (conservative report)")
    for value, vs, _sub in report.levels:
        labels = ", ".join("%s (isotropy %d)" % (v, model.label_order((v,)))
                           for v in vs)
        print("critical value %s: %s" % (value, labels))
    print("critical orbits: %d" % report.orbit_count())
    return OK


def cmd_ls_verify(args):
    model = _as_model(_load(args.model, (OrbifoldComplex, SimplicialGComplex)))
    values = _load(args.function, (dict,))
    config = _config(args)
    _print_header(args)
    verdict = verify_ls_inequality(model, values, config)
    m = m_function(model, values, config)
    print("cat lower bound: %d" % verdict.cat_lower)
    print("sum of critical relative cats: %s" % verdict.sum_upper)
    print("critical orbits: %d" % verdict.n_critical)
    for tag, _c, bounds in m["samples"]:
        print("m %s: (%s, %s)" % (tag, bounds[0], bounds[1]))
    print("m weakly increasing: %s" % ("yes" if m["weakly_increasing"] else "no"))
    print("verdict: %s" % verdict.verdict)
    if verdict.verdict == "PASS":
        return OK
    if verdict.verdict == "FAIL":
        return FAIL
    return UNKNOWN_EXIT


def cmd_conjecture(args):
    value = _load(args.file, (OrbifoldComplex, SimplicialGComplex))
    model = value if isinstance(value, SimplicialGComplex) else value
    report = inertia_cat_report(model, _config(args))
    lo, hi = report.total
    print("inertia cat: %s" % ("%d" % hi if hi is not None and lo == hi
                               else "(%s, %s)" % (lo, hi)))
    for sid, bounds in report.sector_bounds:
        print("  sector %s: (%s, %s)" % (sid, bounds[0], bounds[1]))
    print("wcat: %s" % (report.wcat.value if report.wcat.value is not None
                        else "interval %s..%s" % report.wcat.interval))
    print("conjecture: %s" % report.verdict)
    if report.verdict == "equal":
        return OK
    if report.verdict == "unequal":
        return FAIL
    return UNKNOWN_EXIT


def build_parser():
    parser = argparse.ArgumentParser(
        prog="orbicat",
        description="Finite groupoid invariants and certified LS-category "
                    "bounds for combinatorial orbifold models.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--depth", type=int, default=2,
                       help="union depth for candidate pieces (default 2)")
        p.add_argument("--budget", type=int, default=100000,
                       help="collapse search budget in elementary steps")
        p.add_argument("--seed", type=int, default=None,
                       help="seed printed in report headers (corpus runs)")

    p = sub.add_parser("validate", help="validate any input file")
    p.add_argument("file")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("orbits", help="orbit partition of a groupoid")
    p.add_argument("file")
    p.set_defaults(func=cmd_orbits)

    p = sub.add_parser("skeleton", help="orbit/isotropy skeleton of a groupoid")
    p.add_argument("file")
    p.set_defaults(func=cmd_skeleton)

    p = sub.add_parser("morita", help="decide Morita equivalence of two groupoids")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=cmd_morita)

    p = sub.add_parser("inertia", help="inertia groupoid summary")
    p.add_argument("file")
    p.set_defaults(func=cmd_inertia)

    p = sub.add_parser("sectors", help="sector decomposition")
    p.add_argument("file")
    p.set_defaults(func=cmd_sectors)

    p = sub.add_parser("card", help="Baez-Dolan and string-Euler cardinalities")
    p.add_argument("file")
    p.set_defaults(func=cmd_card)

    p = sub.add_parser("cat", help="certified LS-category bounds of a model")
    p.add_argument("file")
    common(p)
    p.set_defaults(func=cmd_cat)

    p = sub.add_parser("wcat", help="weighted LS-category of a model")
    p.add_argument("file")
    common(p)
    p.set_defaults(func=cmd_wcat)

    p = sub.add_parser("relcat", help="relative category of a full submodel")
    p.add_argument("file")
    p.add_argument("vertices", nargs="+")
    common(p)
    p.set_defaults(func=cmd_relcat)

    p = sub.add_parser("deform", help="search a deformation between submodels")
    p.add_argument("file")
    p.add_argument("--from", dest="from_vertices", required=True,
                   help="comma-separated vertices of M")
    p.add_argument("--into", dest="into_vertices", required=True,
                   help="comma-separated vertices of N")
    common(p)
    p.set_defaults(func=cmd_deform)

    p = sub.add_parser("critical", help="critical orbits of a PL function")
    p.add_argument("model")
    p.add_argument("function")
    common(p)
    p.set_defaults(func=cmd_critical)

    p = sub.add_parser("ls-verify", help="critical-point inequality report")
    p.add_argument("model")
    p.add_argument("function")
    common(p)
    p.set_defaults(func=cmd_ls_verify)

    p = sub.add_parser("conjecture",
                       help="compare wcat with the inertia model's category")
    p.add_argument("file")
    common(p)
    p.set_defaults(func=cmd_conjecture)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, OSError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return BAD_INPUT
    except (GroupError, GroupoidError, ComplexError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())

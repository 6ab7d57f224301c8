"""Command line front end.

Every run prints exactly one JSON document to stdout.  Domain failures
exit 1 with {"error": code}; malformed invocations exit 2 and write the
complaint to stderr.  --pretty sketches the shapes involved on stderr,
leaving stdout machine-readable.
"""

import argparse
import json
import sys

from . import cohomology, lr, shimura
from .errors import AmbientNotSquare, DomainError, IncompatiblePair
from .partition import (
    bar_closure,
    check_reduction,
    complement,
    conjugate,
    format_box,
    format_partition,
    minus_part,
    parse_box,
    parse_partition,
    plus_part,
    rect,
)
from .skew import SkewShape, parse_skew, rectangle_decomposition

FLAVOR_CHOICES = ("unitary", "symplectic", "orthogonal")


def _parse_factor(tok):
    if "x" in tok:
        return rect(*parse_box(tok))
    return parse_partition(tok)


def _parse_factors(text):
    text = text.strip()
    if not text:
        return []
    return [_parse_factor(tok) for tok in text.split("*")]


def _parse_levi(text, center=None):
    rects = []
    text = text.strip()
    if text:
        rects = [parse_box(tok) for tok in text.split("*")]
    return cohomology.LeviShape(tuple(rects), center)


def _parse_factor_pairs(text):
    out = []
    text = text.strip()
    if not text:
        return out
    for tok in text.split(";"):
        box, lam, mu = tok.split(":")
        out.append((parse_box(box), parse_partition(lam), parse_partition(mu)))
    return out


def _class_doc(x):
    return {
        "ambient": format_box(x.ambient),
        "terms": [
            {"partition": format_partition(l), "coeff": c} for l, c in x.terms.items()
        ],
    }


def _tensor_doc(x):
    return {
        "factors": [format_box(b) for b in x.factors],
        "terms": [
            {"partitions": [format_partition(l) for l in keys], "coeff": c}
            for keys, c in x.terms.items()
        ],
    }


def _draw(shape):
    if not isinstance(shape, SkewShape):
        shape = SkewShape(shape, ())
    pad = shape.inner + (0,) * (len(shape.outer) - len(shape.inner))
    if not shape.outer:
        return "(empty)"
    return "\n".join(
        "   " * pad[i] + "[ ]" * (shape.outer[i] - pad[i])
        for i in range(len(shape.outer))
    )


def _ambient(args):
    q = args.q if args.q is not None else args.p
    return (args.p, q)


def _pair_of(args, flavor=None):
    return shimura.make_pair(
        parse_partition(args.lam),
        parse_partition(args.mu),
        _ambient(args),
        flavor or args.type,
    )


# ---------------------------------------------------------------- partition


def _cmd_partition(args):
    lam = parse_partition(args.partition)
    if args.op == "conj":
        out = conjugate(lam)
    elif args.op == "comp":
        out = complement(lam, *parse_box(args.box))
    elif args.op == "plus":
        out = plus_part(lam)
    elif args.op == "bar":
        out = bar_closure(lam)
    elif args.op == "minus":
        out = minus_part(lam)
    else:
        out = check_reduction(lam)
    return {"partition": format_partition(out)}, [("result", out)]


# ---------------------------------------------------------------- skew


def _cmd_skew_decompose(args):
    s = parse_skew(args.skew)
    chain = rectangle_decomposition(s)
    if chain is None:
        raise IncompatiblePair("%s is not a rectangle chain" % args.skew)
    return {"chain": [format_box(b) for b in chain]}, [("skew", s)]


# ---------------------------------------------------------------- lr


def _cmd_lr_coeff(args):
    outer = parse_partition(args.outer)
    inner = parse_partition(args.inner)
    nu = parse_partition(args.nu)
    c = lr.lr_coefficient(outer, inner, nu)
    return {"coefficient": c}, [("outer/inner", SkewShape(outer, inner)), ("nu", nu)]


def _cmd_lr_multi(args):
    target = parse_partition(args.target)
    factors = _parse_factors(args.factors)
    return {"coefficient": lr.multi_lr_coefficient(target, factors)}, [("target", target)]


def _cmd_lr_inscribes(args):
    nu = parse_partition(args.nu)
    s = parse_skew(args.skew)
    shapes = [("nu", nu), ("window", s)]
    if args.symmetric or args.antisymmetric:
        fn = lr.inscribes_symmetric if args.symmetric else lr.inscribes_antisymmetric
        w = fn(nu, s)
        if w is None:
            return {"inscribes": False, "witness": None}, shapes
        witness = {
            "orientation": list(w.orientation),
            "center": None if w.center is None else format_partition(w.center),
            "gammas": [format_partition(g) for g in w.gammas],
        }
        return {"inscribes": True, "witness": witness}, shapes
    mu_prime = lr.inscribes_witness(nu, s)
    if mu_prime is None:
        return {"inscribes": False, "witness": None}, shapes
    return {"inscribes": True, "witness": {"mu_prime": format_partition(mu_prime)}}, shapes


# ---------------------------------------------------------------- cohom


def _cmd_cohom_product(args):
    ambient = parse_box(args.ambient)
    x = cohomology.schubert_class(ambient, parse_partition(args.lhs))
    y = cohomology.schubert_class(ambient, parse_partition(args.rhs))
    return _class_doc(cohomology.cup(x, y)), []


def _cmd_cohom_pair(args):
    ambient = parse_box(args.ambient)
    x = cohomology.schubert_class(ambient, parse_partition(args.lhs))
    y = cohomology.schubert_class(ambient, parse_partition(args.rhs))
    return {"pairing": cohomology.poincare_pair(x, y)}, []


def _cmd_cohom_restrict(args):
    ambient = parse_box(args.ambient)
    x = cohomology.schubert_class(ambient, parse_partition(args.cls))
    levi = _parse_levi(args.levi)
    return _tensor_doc(cohomology.restrict_levi(x, levi)), []


def _cmd_cohom_dual_class(args):
    ambient = parse_box(args.ambient)
    if args.type == "unitary":
        out = cohomology.dual_class_unitary(ambient, _parse_levi(args.levi or ""))
    else:
        if ambient[0] != ambient[1]:
            raise AmbientNotSquare("%dx%d" % ambient)
        if args.type == "gsp":
            out = cohomology.dual_class_gsp(ambient[0])
        else:
            out = cohomology.dual_class_ostar(ambient[0])
    return _class_doc(out), [("dual", k) for k in out.terms]


# ---------------------------------------------------------------- shimura


def _cmd_sh_pairs(args):
    bidegree = None
    if args.bidegree:
        i, j = args.bidegree.split(",")
        bidegree = (int(i), int(j))
    pairs = shimura.enumerate_pairs(_ambient(args), args.type, bidegree)
    doc = {
        "pairs": [
            {"lambda": format_partition(p.lam), "mu": format_partition(p.mu)}
            for p in pairs
        ]
    }
    return doc, []


def _cmd_sh_bidegree(args):
    pair = _pair_of(args)
    return {"bidegree": list(shimura.vz_bidegree(pair))}, [("window", pair.skew)]


def _cmd_sh_chern_action(args):
    pair = _pair_of(args)
    nu = parse_partition(args.nu)
    w = shimura.chern_action_nonzero(nu, pair)
    if w is None:
        return {"nonzero": False, "witness": None}, [("window", pair.skew)]
    witness = {}
    for k, v in w.items():
        if k == "gammas":
            witness[k] = [format_partition(g) for g in v]
        elif k == "orientation":
            witness[k] = list(v)
        elif v is None:
            witness[k] = None
        else:
            witness[k] = format_partition(v)
    return {"nonzero": True, "witness": witness}, [("window", pair.skew)]


def _cmd_sh_inject(args):
    if args.type == "gsp":
        pair = _pair_of(args, "symplectic")
        return {"injective": shimura.injectivity_gsp(pair)}, [("window", pair.skew)]
    pair = _pair_of(args, "unitary")
    levi = cohomology.LeviShape(
        tuple(parse_box(tok) for tok in args.factors.split("*")) if args.factors else (),
        None,
    )
    ok, nu = shimura.injectivity_unitary(pair, levi)
    witness = {"nu": format_partition(nu)} if ok else None
    return {"injective": ok, "witness": witness}, [("window", pair.skew)]


def _cmd_sh_kunneth(args):
    pair = _pair_of(args, "unitary")
    factor_pairs = _parse_factor_pairs(args.factor_pairs)
    return {"vanishes": shimura.kunneth_vanishing(pair, factor_pairs)}, []


def _cmd_sh_vanish(args):
    pair = _pair_of(args, "unitary")
    return {"vanishes": shimura.vanishing_criterion(pair, args.bound, args.side)}, []


def _cmd_sh_structure(args):
    pair = _pair_of(args, "unitary")
    return {"structure": shimura.low_degree_structure(pair)}, [("window", pair.skew)]


def _cmd_sh_arthur(args):
    entries = shimura.arthur_cover(_ambient(args), args.max_degree)
    doc = {
        "entries": [
            {
                "lambda": format_partition(pair.lam),
                "mu": format_partition(pair.mu),
                "structure": label,
                "suggestion": (
                    "U(%d,%d)" % sug[1:] if sug[0] == "U" else "GSp_%d" % sug[1]
                ),
            }
            for pair, label, sug in entries
        ]
    }
    return doc, []


def _cmd_sh_partha(args):
    windows = shimura.partha_decomposition(_ambient(args), args.degree)
    return {"windows": [[a, b] for a, b in windows]}, []


def _cmd_sh_ostar(args):
    comps = shimura.ostar_holomorphic_components(args.p)
    idents = shimura.ostar_identifications(args.p)
    doc = {
        "components": [
            {
                "family": c.family,
                "param": c.param,
                "shape": format_partition(c.shape),
                "label": format_partition(c.label),
                "degree": c.degree,
            }
            for c in comps
        ],
        "identifications": [
            {
                "label": format_partition(g["label"]),
                "members": [[f, n] for f, n in g["members"]],
            }
            for g in idents
        ],
    }
    return doc, []


# ---------------------------------------------------------------- wiring


def build_parser():
    top = argparse.ArgumentParser(prog="schubcalc")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--pretty", action="store_true", help="sketch shapes on stderr")
    sub = top.add_subparsers(dest="command", required=True)

    p_part = sub.add_parser("partition").add_subparsers(dest="op", required=True)
    for op in ("conj", "comp", "plus", "bar", "minus", "check"):
        sp = p_part.add_parser(op, parents=[common])
        sp.add_argument("--partition", required=True)
        if op == "comp":
            sp.add_argument("--box", required=True)
        sp.set_defaults(fn=_cmd_partition)

    p_skew = sub.add_parser("skew").add_subparsers(dest="op", required=True)
    sp = p_skew.add_parser("decompose", parents=[common])
    sp.add_argument("--skew", required=True)
    sp.set_defaults(fn=_cmd_skew_decompose)

    p_lr = sub.add_parser("lr").add_subparsers(dest="op", required=True)
    sp = p_lr.add_parser("coeff", parents=[common])
    sp.add_argument("--outer", required=True)
    sp.add_argument("--inner", default="")
    sp.add_argument("--nu", required=True)
    sp.set_defaults(fn=_cmd_lr_coeff)
    sp = p_lr.add_parser("multi", parents=[common])
    sp.add_argument("--target", required=True)
    sp.add_argument("--factors", required=True)
    sp.set_defaults(fn=_cmd_lr_multi)
    sp = p_lr.add_parser("inscribes", parents=[common])
    sp.add_argument("--nu", required=True)
    sp.add_argument("--skew", required=True)
    mode = sp.add_mutually_exclusive_group()
    mode.add_argument("--symmetric", action="store_true")
    mode.add_argument("--antisymmetric", action="store_true")
    sp.set_defaults(fn=_cmd_lr_inscribes)

    p_coh = sub.add_parser("cohom").add_subparsers(dest="op", required=True)
    sp = p_coh.add_parser("product", parents=[common])
    sp.add_argument("--ambient", required=True)
    sp.add_argument("--lhs", required=True)
    sp.add_argument("--rhs", required=True)
    sp.set_defaults(fn=_cmd_cohom_product)
    sp = p_coh.add_parser("pair", parents=[common])
    sp.add_argument("--ambient", required=True)
    sp.add_argument("--lhs", required=True)
    sp.add_argument("--rhs", required=True)
    sp.set_defaults(fn=_cmd_cohom_pair)
    sp = p_coh.add_parser("restrict", parents=[common])
    sp.add_argument("--ambient", required=True)
    sp.add_argument("--class", dest="cls", required=True)
    sp.add_argument("--levi", required=True)
    sp.set_defaults(fn=_cmd_cohom_restrict)
    sp = p_coh.add_parser("dual-class", parents=[common])
    sp.add_argument("--ambient", required=True)
    sp.add_argument("--type", choices=("unitary", "gsp", "ostar"), default="unitary")
    sp.add_argument("--levi", default="")
    sp.set_defaults(fn=_cmd_cohom_dual_class)

    p_sh = sub.add_parser("shimura").add_subparsers(dest="op", required=True)

    def sh(name, fn, pair_args=True, flavors=FLAVOR_CHOICES):
        sp = p_sh.add_parser(name, parents=[common])
        sp.add_argument("--p", type=int, required=True)
        sp.add_argument("--q", type=int)
        if flavors:
            sp.add_argument("--type", choices=flavors, default=flavors[0])
        if pair_args:
            sp.add_argument("--lambda", dest="lam", required=True)
            sp.add_argument("--mu", required=True)
        sp.set_defaults(fn=fn)
        return sp

    sp = sh("pairs", _cmd_sh_pairs, pair_args=False)
    sp.add_argument("--bidegree")
    sh("bidegree", _cmd_sh_bidegree)
    sp = sh("chern-action", _cmd_sh_chern_action)
    sp.add_argument("--nu", required=True)
    sp = sh("inject", _cmd_sh_inject, flavors=("unitary", "gsp"))
    sp.add_argument("--factors", default="")
    sp = sh("kunneth-vanish", _cmd_sh_kunneth, flavors=("unitary",))
    sp.add_argument("--factor-pairs", dest="factor_pairs", required=True)
    sp = sh("vanish", _cmd_sh_vanish, flavors=("unitary",))
    sp.add_argument("--side", choices=("P", "Q"), required=True)
    sp.add_argument("--bound", type=int, required=True)
    sh("structure", _cmd_sh_structure, flavors=("unitary",))
    sp = sh("arthur", _cmd_sh_arthur, pair_args=False, flavors=None)
    sp.add_argument("--max-degree", dest="max_degree", type=int, required=True)
    sp = sh("partha", _cmd_sh_partha, pair_args=False, flavors=None)
    sp.add_argument("--degree", type=int, required=True)
    sp = p_sh.add_parser("ostar-holo", parents=[common])
    sp.add_argument("--p", type=int, required=True)
    sp.set_defaults(fn=_cmd_sh_ostar)

    return top


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        doc, shapes = args.fn(args)
    except DomainError as err:
        print(json.dumps({"error": err.code}, separators=(",", ":")))
        return 1
    except (ValueError, KeyError) as err:
        print("error: %s" % err, file=sys.stderr)
        return 2
    print(json.dumps(doc, separators=(",", ":")))
    if getattr(args, "pretty", False):
        for label, shape in shapes:
            print("%s:" % label, file=sys.stderr)
            print(_draw(shape), file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())

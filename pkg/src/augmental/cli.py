"""Command-line interface: ``augmental <verb> ...``.

Exit status is 0 on success, 1 when a verification reports a failure and 2 on
usage or input errors.
"""

from __future__ import annotations

import argparse
import sys

from . import cm, manifolds, suites
from .abelian import ZZ, parse_coefficients
from .complex import VOID, ComplexPair, contrastar, euler_reduced, link
from .constructions import join, product
from .errors import FaceNotPresentError
from .homology import homology
from .io import ComplexFormatError, dumps_complex, read_complex, read_ordered
from .kunneth import verify_join, verify_product
from .stanley_reisner import hilbert_function, product_groebner_set, sr_ideal


class UsageError(Exception):
    pass


def _coeff(text: str):
    try:
        return parse_coefficients(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def _face(text: str) -> list:
    return [v for v in text.split(",") if v] if text else []


def _add_coeff(p):
    p.add_argument("--coeff", type=_coeff, default=ZZ, help="Z, Zp:<prime> or Q (default Z)")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="augmental", description="Augmental simplicial homology toolkit.")
    sub = ap.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("homology", help="homology of a complex")
    p.add_argument("complex")
    _add_coeff(p)
    p.add_argument("--verbose", action="store_true", help="also print zero groups")

    p = sub.add_parser("relative", help="homology of a pair")
    p.add_argument("total")
    p.add_argument("sub")
    _add_coeff(p)
    p.add_argument("--verbose", action="store_true")

    for verb in ("link", "costar"):
        p = sub.add_parser(verb, help=f"{verb} of a face, as complex JSON")
        p.add_argument("complex")
        p.add_argument("--face", required=True, help="comma-separated vertices; empty for the empty face")

    for verb in ("join", "product"):
        p = sub.add_parser(verb, help=f"{verb} of two complexes, as complex JSON")
        p.add_argument("a")
        p.add_argument("b")

    p = sub.add_parser("boundary", help="boundary over the coefficients, as complex JSON")
    p.add_argument("complex")
    _add_coeff(p)

    p = sub.add_parser("classify", help="manifold classification report")
    p.add_argument("complex")
    _add_coeff(p)

    p = sub.add_parser("cm-classify", help="Cohen-Macaulay family report")
    p.add_argument("complex")
    _add_coeff(p)
    p.add_argument("--k", type=int, default=None, help="also find the largest k <= K with k-CM")

    p = sub.add_parser("sr-ideal", help="face ideal generators")
    p.add_argument("complex")
    p.add_argument("--universe", default=None, help="comma-separated variables")

    p = sub.add_parser("sr-product", help="face ideal of an ordered product")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--emit-groebner", action="store_true", help="split generators into C' and D")

    p = sub.add_parser("hilbert", help="Hilbert function of the face ring")
    p.add_argument("complex")
    p.add_argument("--upto", type=int, required=True)

    p = sub.add_parser("kunneth-verify", help="compare Künneth predictions with direct homology")
    p.add_argument("--op", choices=("join", "product"), required=True)
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--subA", default=None)
    p.add_argument("--subB", default=None)
    _add_coeff(p)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", required=True, choices=sorted(suites.SUITES))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--n", type=int, default=200, help="number of random cases")
    p.add_argument("--exhaustive", action="store_true", help="add every pair on four labels")

    p = sub.add_parser("euler", help="reduced Euler characteristic")
    p.add_argument("complex")
    return ap


def _load(path):
    return read_complex(path)[0]


def _homology_lines(pair, args) -> list:
    h = homology(pair, args.coeff)
    top = pair.total.dim if not pair.total.is_void else -1
    return h.lines(verbose=args.verbose, top=top)


def _run(args, out) -> int:
    v = args.verb
    if v == "homology":
        out.extend(_homology_lines(ComplexPair(_load(args.complex)), args))
    elif v == "relative":
        out.extend(_homology_lines(ComplexPair(_load(args.total), _load(args.sub)), args))
    elif v in ("link", "costar"):
        sigma = _load(args.complex)
        if sigma.is_void:
            raise UsageError("the void complex has no faces")
        face = _face(args.face)
        if tuple(sorted(face)) not in sigma.faces:
            raise UsageError(f"{face} is not a face")
        op = link if v == "link" else contrastar
        out.append(dumps_complex(op(sigma, face)))
    elif v == "join":
        out.append(dumps_complex(join(_load(args.a), _load(args.b))))
    elif v == "product":
        out.append(dumps_complex(product(read_ordered(args.a), read_ordered(args.b))))
    elif v == "boundary":
        out.append(dumps_complex(manifolds.boundary(_load(args.complex), args.coeff)))
    elif v == "classify":
        out.append(manifolds.classify(_load(args.complex), args.coeff).render())
    elif v == "cm-classify":
        out.append(cm.cm_report(_load(args.complex), args.coeff, args.k).render())
    elif v == "sr-ideal":
        universe = _face(args.universe) if args.universe is not None else None
        out.append(sr_ideal(_load(args.complex), universe).export())
    elif v == "sr-product":
        a, b = read_ordered(args.a), read_ordered(args.b)
        if args.emit_groebner:
            g = product_groebner_set(a, b)
            out.append("ring " + ",".join(g.ideal.universe))
            for title, part in (("C'", g.incomparable), ("D", g.chains)):
                out.append(f"# {title}")
                out.extend("*".join(m) for m in sorted(part, key=lambda m: (len(m), m)))
        else:
            prod = product(a, b)
            out.append(sr_ideal(prod.complex, prod.order).export())
    elif v == "hilbert":
        if args.upto < 0:
            raise UsageError("--upto must be non-negative")
        sigma = _load(args.complex)
        out.append("m | H")
        out.extend(f"{m} | {hilbert_function(sigma, m)}" for m in range(args.upto + 1))
    elif v == "kunneth-verify":
        a, ao = read_complex(args.a)
        b, bo = read_complex(args.b)
        pa = ComplexPair(a, _load(args.subA) if args.subA else VOID)
        pb = ComplexPair(b, _load(args.subB) if args.subB else VOID)
        if args.op == "join":
            rep = verify_join(pa, pb, args.coeff)
        else:
            rep = verify_product(pa, pb, ao, bo, args.coeff)
        out.append(rep.render())
        return 0 if rep.ok else 1
    elif v == "verify":
        res = suites.run_suite(args.suite, args.seed, args.n, args.exhaustive)
        out.append(res.summary())
        for f in res.failures:
            out.append(f"failed: {f}")
        return 0 if res.ok else 1
    elif v == "euler":
        out.append(str(euler_reduced(_load(args.complex))))
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:  # usage errors and --help
        return int(e.code or 0)
    out: list = []
    try:
        code = _run(args, out)
    except (ComplexFormatError, UsageError, FaceNotPresentError) as e:
        print(f"augmental {args.verb}: {e}", file=sys.stderr)
        return 2
    except ValueError as e:
        print(f"augmental {args.verb}: {e}", file=sys.stderr)
        return 2
    if out:
        print("\n".join(out))
    return code


if __name__ == "__main__":
    sys.exit(main())

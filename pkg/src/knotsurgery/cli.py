"""Command line interface: ``knotsurgery <command> ...``."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import contfrac, dihedral, laurent, pipeline, sw, twobridge


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload))
    else:
        print(text)


def cmd_cf(args) -> int:
    f = contfrac.TwoBridgeFraction(args.p, args.q)
    p, q_even = contfrac.even_rep(f)
    b = contfrac.even_cf(p, q_even)
    _emit(args, {"p": p, "q": q_even, "b": list(b)}, contfrac.format_bvector(b))
    return 0


def cmd_alexander(args) -> int:
    inv = twobridge.alexander(args.p, args.q)
    payload = {
        "p": inv.p,
        "q": inv.q,
        "b": list(inv.bvector),
        "alexander": str(inv.alexander),
        "alexander_terms": inv.alexander.to_json(),
        "fibered": inv.fibered,
        "genus": inv.genus,
        "determinant": inv.determinant,
    }
    _emit(args, payload, str(inv.alexander))
    return 0


def cmd_fibered(args) -> int:
    inv = twobridge.alexander(args.p, args.q)
    _emit(args, {"p": inv.p, "q": inv.q, "fibered": inv.fibered}, "true" if inv.fibered else "false")
    return 0


def cmd_dihedral_linking(args) -> int:
    data = dihedral.linking_numbers(args.p, args.q)
    payload = {"p": data.p, "q": data.q, "epsilon": list(data.epsilon), "sigma": data.sigma}
    _emit(args, payload, " ".join(str(e) for e in data.epsilon))
    return 0


def cmd_hosokawa(args) -> int:
    h = dihedral.hosokawa_at_one(args.p, args.q)
    data = dihedral.linking_numbers(args.p, args.q)
    payload = {
        "p": h.p,
        "q": h.q,
        "epsilon": list(data.epsilon),
        "det": str(h.value),
        "det_over_p": str(h.value_over_p),
        "factors": h.factorization.to_json(),
    }
    text = f"det = {h.value}\ndet/p = {h.value_over_p}"
    if args.factor:
        text += f"\n      = {h.factorization}"
    _emit(args, payload, text)
    return 0


def _read_poly(path: str) -> laurent.LaurentPoly:
    text = Path(path).read_text().strip()
    if text.startswith("["):
        return laurent.LaurentPoly.from_json(json.loads(text))
    return laurent.LaurentPoly.parse(text)


def cmd_sw(args) -> int:
    if args.sw_command == "fibered-surgery":
        inv = twobridge.alexander(args.p, args.q)
        result = sw.fibered_surgery_sw(inv.alexander)
    else:
        result = sw.knot_surgery_sw(sw.sw_k3(), _read_poly(args.alexander))
    classes = sw.basic_classes(result)
    payload = {
        "sw": str(result),
        "sw_terms": result.poly.to_json(),
        "basic_classes": [[str(c.multiple), str(c.value)] for c in classes],
    }
    _emit(args, payload, str(result))
    return 0


def _certificate_text(cert: pipeline.Certificate) -> str:
    lines = [
        f"K({cert.p}/{cert.q1}) vs K({cert.p}/{cert.q2}): {cert.verdict.value}",
        f"  inequivalent knots: {cert.knots_inequivalent}",
        f"  both fibered:       {cert.both_fibered}",
        f"  same Alexander:     {cert.alexander_equal}",
        f"  Alexander:          {cert.alexander}",
    ]
    if cert.sw is not None:
        lines.append(f"  SW (both):          {cert.sw}")
    for q, h in ((cert.q1, cert.hosokawa_1), (cert.q2, cert.hosokawa_2)):
        if h is not None:
            lines.append(f"  det(minor)/p [{q}]:  {h.factorization}")
    if cert.sw is not None:
        lines.extend(f"  assumed: {a}" for a in cert.assumptions)
    return "\n".join(lines)


def cmd_distinguish(args) -> int:
    cert = pipeline.distinguish(args.p, args.q1, args.q2)
    _emit(args, cert.to_json(), _certificate_text(cert))
    return cert.verdict.exit_code


def cmd_search(args) -> int:
    certs = pipeline.search(args.pmax, p_min=args.pmin, require_fibered=not args.all, jobs=args.jobs)
    if args.json:
        print(json.dumps([c.to_json() for c in certs]))
    else:
        for c in certs:
            print(f"{c.p} {c.q1} {c.q2} {c.verdict.value}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="knotsurgery", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def knot(name, func, help_text):
        sp = sub.add_parser(name, help=help_text)
        sp.add_argument("p", type=int)
        sp.add_argument("q", type=int)
        sp.add_argument("--json", action="store_true")
        sp.set_defaults(func=func)
        return sp

    knot("cf", cmd_cf, "even continued-fraction code b(p/q)")
    knot("alexander", cmd_alexander, "Alexander polynomial of K(p/q)")
    knot("fibered", cmd_fibered, "is K(p/q) fibered")
    knot("dihedral-linking", cmd_dihedral_linking, "linking numbers of the dihedral covering link")
    hos = knot("hosokawa", cmd_hosokawa, "minor determinant of the linking matrix")
    hos.add_argument("--factor", action="store_true", help="print det/p as prime powers")

    swp = sub.add_parser("sw", help="Seiberg-Witten polynomials")
    swsub = swp.add_subparsers(dest="sw_command", required=True)
    fs = swsub.add_parser("fibered-surgery", help="Delta(tau) Delta(-tau) for K(p/q)")
    fs.add_argument("p", type=int)
    fs.add_argument("q", type=int)
    fs.add_argument("--json", action="store_true")
    ks = swsub.add_parser("knot-surgery", help="SW of K3 knot-surgered along a knot")
    ks.add_argument("--alexander", required=True, metavar="FILE",
                    help="Alexander polynomial, text form or JSON term list")
    ks.add_argument("--json", action="store_true")
    swp.set_defaults(func=cmd_sw)

    d = sub.add_parser("distinguish", help="compare the surgery manifolds of two knots")
    d.add_argument("p", type=int)
    d.add_argument("q1", type=int)
    d.add_argument("q2", type=int)
    d.add_argument("--json", action="store_true")
    d.set_defaults(func=cmd_distinguish)

    s = sub.add_parser("search", help="scan for same-Alexander pairs and certify them")
    s.add_argument("--pmax", type=int, required=True)
    s.add_argument("--pmin", type=int, default=3)
    s.add_argument("--all", action="store_true", help="include non-fibered knots")
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_search)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, ArithmeticError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

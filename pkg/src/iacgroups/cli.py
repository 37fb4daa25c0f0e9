"""Command-line front end: ``iacgroups COMMAND ...``.

Exit status is 0 on success, 1 when a verification fails or a budget is
exceeded, 2 on a usage error. FILE may be "-" for standard input.
"""

import argparse
import sys

from . import algebra as alg
from . import constructions as con
from . import io
from . import linalg as la
from .duality import G_of_L, L_of_G, correspondence_audit, round_trip
from .errors import AbelianAlgebra, HasCenter, IacError, NotSemisimple, ReducibleModule
from .field import field_make, field_of_order
from .pcgroup import PcGroup


class Failure(Exception):
    """A verification failed; the message names the violated invariants."""


class UsageError(Exception):
    pass


# typed errors that answer the question asked rather than reject the input
VERIFICATION_ERRORS = (AbelianAlgebra, HasCenter, NotSemisimple, ReducibleModule)


def _read(path):
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror}")


def _load_algebra(path):
    obj = io.load_document(_read(path))
    if isinstance(obj, PcGroup):
        return L_of_G(obj)
    return obj


def _field(args):
    if args.k == 1:
        return field_make(args.p)
    return field_make(args.p, args.k)


def _cap(args, default):
    return args.budget if args.budget is not None else default


def _bool_text(x):
    return "true" if x else "false"


# -- commands ---------------------------------------------------------------------

def cmd_construct(args):
    kind = args.kind
    if kind == "sl2":
        L = alg.sl2(_field(args))
    elif kind == "th52b":
        L = alg.th52b_algebra(_field(args))
    elif kind == "agl":
        L = con.agl5_algebra(field_of_order(args.q))
    elif kind == "sec6":
        L = con.family_sec6(args.b, args.n, args.q)["algebra"]
    elif kind == "gamma":
        L = con.gamma_algebra(args.m, _field(args))
    else:
        raise UsageError(f"unknown construction {kind!r}")
    return io.dumps(io.algebra_to_json(L))


def cmd_dualize(args):
    obj = io.load_document(_read(args.file))
    if args.to_group:
        G = obj if isinstance(obj, PcGroup) else G_of_L(obj)
        if args.format == "pcp":
            return G.pcp_text()
        return io.dumps(io.group_to_json(G))
    L = obj if not isinstance(obj, PcGroup) else L_of_G(obj)
    return io.dumps(io.algebra_to_json(L))


def _parse_expect(items):
    out = {}
    for item in items or ():
        if "=" not in item:
            raise UsageError(f"--expect needs NAME=VALUE, got {item!r}")
        k, v = item.split("=", 1)
        if v.lower() not in ("true", "false"):
            raise UsageError(f"--expect value must be true or false, got {v!r}")
        out[k] = v.lower() == "true"
    return out


def verify_report(L, limit=la.PROJECTIVE_LIMIT):
    rep = {"dim": L.dim, "q": L.field.q}
    rep.update(alg.identity_checks(L))
    rep["center_dim"] = alg.center(L).rank
    rep["derived_dim"] = alg.derived(L).rank
    rep["perfect"] = rep["derived_dim"] == L.dim
    try:
        rep["simple"] = alg.is_simple(L, limit)
    except IacError:
        rep["simple"] = None
    if L.field.k == 1:
        rep["roundtrip"] = round_trip(L).identical
    return rep


def cmd_verify(args):
    expect = _parse_expect(args.expect)
    obj = io.load_document(_read(args.file))
    failed = []
    if isinstance(obj, PcGroup):
        bad = obj.relation_audit()
        failed += bad
        L = L_of_G(obj)
    else:
        L = obj
    rep = verify_report(L, _cap(args, la.PROJECTIVE_LIMIT))
    if rep.get("roundtrip") is False:
        failed.append("roundtrip")
    for k, v in expect.items():
        if k not in rep:
            raise UsageError(f"--expect names unknown invariant {k!r}")
        if rep[k] != v:
            failed.append(k)
    text = "".join(f"{k}={_bool_text(v) if isinstance(v, bool) else v}\n" for k, v in rep.items())
    if failed:
        raise Failure(text + "violated: " + ", ".join(failed))
    return text


def cmd_decompose(args):
    L = _load_algebra(args.file)
    ideals = alg.semisimple_decompose(L, _cap(args, la.PROJECTIVE_LIMIT))
    first = alg.restrict(L, ideals[0])
    out = []
    for S in ideals:
        part = alg.restrict(L, S)
        iso = alg.isomorphism_search(part, first, "find_one", args.budget) is not None
        out.append({"dim": S.rank, "basis": io.matrix_to_json(L.field, S.basis),
                    "simple": alg.is_simple(part), "isomorphic_to_first": iso})
    return io.dumps({"ideals": out, "count": len(out)})


def cmd_aut(args):
    L = _load_algebra(args.file)
    F = L.field
    if args.list:
        auts = alg.automorphisms(L, args.budget)
        doc = {"count": len(auts), "order_profile": alg.order_profile(F, auts),
               "automorphisms": [io.matrix_to_json(F, g) for g in auts]}
        doc["order_profile"] = {str(k): v for k, v in doc["order_profile"].items()}
    else:
        doc = {"count": alg.isomorphism_search(L, L, "count_all", args.budget)}
    return io.dumps(doc)


def cmd_iso(args):
    L1 = _load_algebra(args.file1)
    L2 = _load_algebra(args.file2)
    if L1.field != L2.field or L1.dim != L2.dim:
        raise Failure("isomorphic=false\n")
    phi = alg.isomorphism_search(L1, L2, "find_one", args.budget)
    if phi is None:
        raise Failure("isomorphic=false\n")
    return io.dumps({"isomorphic": True, "map": io.matrix_to_json(L1.field, phi)})


def cmd_census(args):
    return io.dumps(io.census_to_json(con.dim4_census(args.q, args.budget)))


def cmd_roundtrip(args):
    L = _load_algebra(args.file)
    w = round_trip(L, args.file)
    text = "\n".join(w.log) + "\n"
    if not w.identical:
        raise Failure(text + "violated: roundtrip")
    return text


def _parse_sample(items):
    out = {}
    for item in items or ():
        try:
            d, n = (int(x) for x in item.split(":"))
        except ValueError:
            raise UsageError(f"--sample needs DIM:COUNT, got {item!r}")
        out[d] = n
    return out


def cmd_audit(args):
    L = _load_algebra(args.file)
    dims = [int(x) for x in args.dims.split(",")] if args.dims else None
    sample = _parse_sample(args.sample)
    extra = []
    if args.with_ideals and not L.is_abelian():
        extra = alg.semisimple_decompose(L, _cap(args, la.PROJECTIVE_LIMIT))
    report = correspondence_audit(L, dims=dims, extra=extra, limit=_cap(args, 10**4), sample=sample,
                                  seed=args.seed)
    text = io.dumps(io.audit_to_json(report))
    if not report["agree"]:
        raise Failure(text + "violated: subalgebra/powerful or ideal/powerfully embedded")
    return text


def cmd_cg(args):
    F = field_make(args.p)
    m, n = sorted((args.m, args.n))
    dec = con.cg_tensor_decompose(m, n, F)
    doc = {"m": m, "n": n, "p": args.p,
           "tensor": [{k: x[k] for k in ("det", "k", "dim", "identified")} for x in dec["multiplicities"]],
           "checks": dec["checks"]}
    if m == n:
        ws = con.cg_wedge_sym_decompose(m, F)
        doc["wedge"] = ws["wedge_multiplicities"]
        doc["sym"] = ws["sym_multiplicities"]
        doc["checks"] = {**doc["checks"], **ws["checks"]}
    text = io.dumps(doc)
    bad = [k for k, v in doc["checks"].items() if not v]
    if bad:
        raise Failure(text + "violated: " + ", ".join(bad))
    return text


# -- parser -----------------------------------------------------------------------

def _positive(s):
    try:
        v = int(float(s))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {s!r}")
    if v <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-o", "--output", help="write to this file instead of stdout")
    common.add_argument("--budget", type=_positive, default=None,
                        help="cap on exhaustive enumeration sizes (default: each search's own limit; "
                             "$IACGROUPS_BUDGET sets the isomorphism search cap)")
    common.add_argument("--jobs", type=_positive, default=1, help="worker cap (computations run in one process)")
    common.add_argument("-v", "--verbose", action="store_true")

    ap = argparse.ArgumentParser(prog="iacgroups", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", parents=[common], help="build a named algebra as JSON")
    c.add_argument("kind", choices=["sl2", "th52b", "sec6", "gamma", "agl"])
    c.add_argument("--p", type=int, default=3)
    c.add_argument("--k", type=int, default=1)
    c.add_argument("--q", type=int, default=11)
    c.add_argument("--b", type=int, default=2)
    c.add_argument("--n", type=int, default=5)
    c.add_argument("--m", type=int, default=2)
    c.set_defaults(func=cmd_construct)

    c = sub.add_parser("dualize", parents=[common], help="algebra <-> group")
    g = c.add_mutually_exclusive_group(required=True)
    g.add_argument("--to-group", action="store_true")
    g.add_argument("--to-algebra", action="store_true")
    c.add_argument("--format", choices=["json", "pcp"], default="json")
    c.add_argument("file")
    c.set_defaults(func=cmd_dualize)

    c = sub.add_parser("verify", parents=[common], help="identity and invariant suite")
    c.add_argument("file")
    c.add_argument("--expect", action="append", metavar="NAME=true|false")
    c.set_defaults(func=cmd_verify)

    c = sub.add_parser("decompose", parents=[common], help="minimal ideals")
    c.add_argument("file")
    c.set_defaults(func=cmd_decompose)

    c = sub.add_parser("aut", parents=[common], help="automorphism count")
    c.add_argument("file")
    c.add_argument("--list", action="store_true", help="also print every automorphism")
    c.set_defaults(func=cmd_aut)

    c = sub.add_parser("iso", parents=[common], help="isomorphism test")
    c.add_argument("file1")
    c.add_argument("file2")
    c.set_defaults(func=cmd_iso)

    c = sub.add_parser("census", parents=[common], help="4-dimensional census over F_q")
    c.add_argument("--q", type=int, required=True)
    c.set_defaults(func=cmd_census)

    c = sub.add_parser("roundtrip", parents=[common], help="L -> G(L) -> L(G(L))")
    c.add_argument("file")
    c.set_defaults(func=cmd_roundtrip)

    c = sub.add_parser("audit", parents=[common], help="subalgebra/subgroup correspondence audit")
    c.add_argument("file")
    c.add_argument("--dims", help="comma-separated subspace dimensions to enumerate in full")
    c.add_argument("--sample", action="append", metavar="DIM:COUNT", help="random subspaces of a dimension")
    c.add_argument("--with-ideals", action="store_true", help="add the minimal ideals")
    c.add_argument("--seed", type=int, default=0)
    c.set_defaults(func=cmd_audit)

    c = sub.add_parser("cg", parents=[common], help="Clebsch-Gordan decomposition of V_m (x) V_n")
    c.add_argument("--m", type=int, required=True)
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--p", type=int, required=True)
    c.set_defaults(func=cmd_cg)
    return ap


def _emit(text, path):
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None):
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        _emit(args.func(args), args.output)
    except UsageError as e:
        ap.error(str(e))
    except Failure as e:
        _emit(str(e) + ("" if str(e).endswith("\n") else "\n"), args.output)
        return 1
    except IacError as e:
        name = type(e).__name__
        if isinstance(e, VERIFICATION_ERRORS):
            _emit(f"violated: {name}: {e}\n", args.output)
            return 1
        if isinstance(e, ValueError):
            print(f"iacgroups: error: {name}: {e}", file=sys.stderr)
            return 2
        print(f"iacgroups: {name}: {e}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())

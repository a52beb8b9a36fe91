"""Command-line front end.

Weight literals: SU ``"1,0|0"`` (lambda'|lambda''), SOE ``"p=2;1,1"``,
SOStar ``"1,0,0"``.  Label literals: SU ``"1,0|0|3"`` (mu'|mu''|p),
SOE ``"q=2;1,1"``, SOStar ``"1,0|2"`` (nu|p).  Virtual characters on the
command line are repeated ``--term`` options, each ``LABEL`` or
``COEF*LABEL`` (write ``--term=-1*...`` for negative coefficients).

Exit codes: 0 success, 1 verdict or verification failure, 2 usage error,
3 resource cap exceeded.
"""
from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from . import checks
from .ansatz import DEFAULT_RADIUS, explore_sostar, is_good, report_line, star_groups
from .branching import branch, branch_raw
from .errors import BranchkitError, ResourceError, ValidationError
from .families import (Family, grid_weights, label_entries, label_to_json, parse_family,
                       weight_to_json)
from .image import invariant_I, lattice_member, member_soe, preimage_su1n
from .oracle import exterior_decompose, tensor_decompose
from .virtual import VirtualChar
from .weyl import weyl_terms

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3


# -- literals

def _vector(token: str, whole: str) -> tuple:
    token = token.strip()
    if not token:
        return ()
    try:
        return tuple(int(x) for x in token.split(","))
    except ValueError:
        raise ValidationError(f"bad integer list {token!r} in literal {whole!r}") from None


def _integer(token: str, whole: str) -> int:
    try:
        return int(token.strip())
    except ValueError:
        raise ValidationError(f"bad integer {token!r} in literal {whole!r}") from None


def _prefixed(text: str, key: str):
    head, sep, tail = text.partition(";")
    name, eq, value = head.partition("=")
    if not sep or not eq or name.strip() != key:
        raise ValidationError(f"expected '{key}=<int>;<entries>', got {text!r}")
    return _integer(value, text), _vector(tail, text)


def parse_weight(family: Family, text: str):
    if family.kind == "su":
        parts = text.split("|")
        if len(parts) != 2:
            raise ValidationError(f"SU weight needs 'lambda1|lambda2', got {text!r}")
        return family.validate_weight((_vector(parts[0], text), _vector(parts[1], text)))
    if family.kind == "soe":
        return family.validate_weight(_prefixed(text, "p"))
    return family.validate_weight((_vector(text, text),))


def parse_label(family: Family, text: str):
    if family.kind == "su":
        parts = text.split("|")
        if len(parts) != 3:
            raise ValidationError(f"SU label needs 'mu1|mu2|p', got {text!r}")
        return family.validate_label((_vector(parts[0], text), _vector(parts[1], text),
                                      _integer(parts[2], text)))
    if family.kind == "soe":
        return family.validate_label(_prefixed(text, "q"))
    parts = text.split("|")
    if len(parts) != 2:
        raise ValidationError(f"SO* label needs 'nu|p', got {text!r}")
    return family.validate_label((_vector(parts[0], text), _integer(parts[1], text)))


def parse_terms(family: Family, terms: list[str]) -> VirtualChar:
    out = []
    for text in terms:
        coef, star, rest = text.partition("*")
        if star:
            out.append((parse_label(family, rest), _integer(coef, text)))
        else:
            out.append((parse_label(family, text), 1))
    return VirtualChar(family, out)


# -- output

def _flat(x) -> str:
    return ":".join(str(e) for e in label_entries(x))


class Output:
    def __init__(self, fmt: str, stream=None):
        self.fmt = fmt
        self.stream = stream or sys.stdout

    def json(self, obj):
        print(json.dumps(obj), file=self.stream)

    def rows(self, header: list[str], rows: list[list]):
        print("\t".join(header), file=self.stream)
        for r in rows:
            print("\t".join(str(c) for c in r), file=self.stream)

    def vc(self, vc: VirtualChar, extra: dict | None = None):
        if self.fmt == "tsv":
            self.rows(["label", "coef"], [[_flat(x), c] for x, c in vc.items()])
        else:
            self.json({**(extra or {}), **vc.to_json()})


# -- commands

def cmd_branch(args, out):
    f = parse_family(args.family)
    w = parse_weight(f, args.weight)
    raw = branch_raw(f, w)
    if out.fmt == "tsv":
        out.rows(["raw", "canonical", "coef"],
                 [[_flat(x), _flat(f.canonical_label(x)), c] for x, c in raw])
        return EXIT_OK
    out.json({"family": f.spec, "weight": weight_to_json(f, w),
              "terms": [{"raw": label_to_json(f, x),
                         "label": label_to_json(f, f.canonical_label(x)), "coef": c}
                        for x, c in raw],
              "canonical": branch(f, w).to_json()["terms"]})
    return EXIT_OK


def cmd_decompose(args, out):
    f = parse_family(args.family)
    a = parse_label(f, args.a)
    if args.kind == "tensor":
        if args.b is None:
            raise ValidationError("decompose tensor needs two labels")
        res = tensor_decompose(f, a, parse_label(f, args.b))
    else:
        if args.degree is None:
            raise ValidationError("decompose exterior needs --degree")
        res = exterior_decompose(f, a, args.degree)
    out.vc(res, {"dimension": res.dimension()})
    return EXIT_OK


def cmd_weyl(args, out):
    f = parse_family(args.family)
    terms = weyl_terms(f, parse_weight(f, args.weight))
    if out.fmt == "tsv":
        out.rows(["elem", "sign", "label", "c_hat"],
                 [[f"{t.elem.a}:{t.elem.b}", t.sign, _flat(t.label), t.c_hat] for t in terms])
    else:
        out.json([{"elem": t.elem.to_json(f), "sign": t.sign,
                   "label": label_to_json(f, t.label), "c_hat": t.c_hat} for t in terms])
    return EXIT_OK


def cmd_star(args, out):
    f = parse_family(args.family)
    groups = star_groups(f, parse_weight(f, args.weight))
    if out.fmt == "tsv":
        out.rows(["key", "label", "coef"],
                 [[g.key, _flat(x), c] for g in groups for x, c in g.sum.items()])
    else:
        out.json([g.to_json() for g in groups])
    return EXIT_OK


def cmd_good(args, out):
    f = parse_family(args.family)
    v = is_good(f, parse_weight(f, args.weight), args.radius, args.route)
    body = v.to_json()
    if args.brief:
        body.pop("groups", None)
    if out.fmt == "tsv":
        out.rows(["verdict", "key", "certificate"],
                 [[v.status, "" if v.key is None else v.key, json.dumps(v.certificate)]])
    else:
        out.json(body)
    return EXIT_OK if v.is_good else EXIT_FAIL


def _scan_row(task):
    spec, w, radius, route = task
    f = parse_family(spec)
    v = is_good(f, w, radius, route)
    return {"lambda": weight_to_json(f, w), "verdict": v.status,
            "key": v.key, "certificate": v.certificate}


def cmd_scan(args, out):
    f = parse_family(args.family)
    p_range = None
    if args.p_range:
        lo, _, hi = args.p_range.partition(":")
        p_range = range(_integer(lo, args.p_range), _integer(hi, args.p_range) + 1)
    tasks = [(f.spec, w, args.radius, args.route) for w in grid_weights(f, args.bound, p_range)]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            rows = pool.map(_scan_row, tasks, chunksize=8)
            _emit_rows(rows, out)
    else:
        _emit_rows(map(_scan_row, tasks), out)
    return EXIT_OK


def _emit_rows(rows, out):
    if out.fmt == "tsv":
        print("lambda\tverdict\tkey", file=out.stream)
    for r in rows:
        if out.fmt == "tsv":
            lam = ":".join(str(e) for v in r["lambda"].values()
                           for e in (v if isinstance(v, list) else [v]))
            print(f"{lam}\t{r['verdict']}\t{'' if r['key'] is None else r['key']}",
                  file=out.stream)
        else:
            print(report_line(r), file=out.stream, flush=True)


def cmd_preimage(args, out):
    f = parse_family(args.family)
    target = parse_terms(f, args.term)
    witness = preimage_su1n(target)
    out.json({"family": f.spec, "target": target.to_json()["terms"],
              "preimage": [{"weight": weight_to_json(f, w), "coef": c}
                           for w, c in witness.items()]})
    return EXIT_OK


def cmd_invariant(args, out):
    f = parse_family(args.family)
    if args.weight:
        vc = branch(f, parse_weight(f, args.weight))
    else:
        vc = parse_terms(f, args.term)
    out.json({"I": invariant_I(vc)})
    return EXIT_OK


def cmd_member(args, out):
    f = parse_family(args.family)
    target = parse_terms(f, args.term)
    method = args.method
    if method == "auto":
        if f.kind == "soe":
            method = "soe"
        elif f.kind == "su" and (f.m == 1 or f.n == 1):
            method = "su1n"
        else:
            method = "lattice"
    if method == "soe":
        res = member_soe(target)
    elif method == "su1n":
        from .image import MembershipResult
        res = MembershipResult("member", preimage_su1n(target))
    else:
        res = lattice_member(target, args.radius)
    out.json(res.to_json())
    return EXIT_OK if res.is_member else EXIT_FAIL


def cmd_explore(args, out):
    for row in explore_sostar(args.n, args.bound, args.radius, args.jobs):
        print(report_line(row), file=out.stream, flush=True)
    return EXIT_OK


def cmd_verify(args, out):
    status = EXIT_OK
    numbers = args.only or [k for k, _, _ in checks.CRITERIA]
    for k in numbers:
        res = checks.run_criterion(k)
        print(res.line(), file=out.stream, flush=True)
        if not res.ok:
            print(json.dumps(res.counterexample), file=out.stream)
            status = EXIT_FAIL
            if not args.keep_going:
                break
    return status


# -- parser

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="branchkit", description=__doc__.split("\n\n")[0])
    p.add_argument("--format", choices=["json", "tsv"], default="json")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "tsv"], default=argparse.SUPPRESS)
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, **kw):
        return sub.add_parser(name, parents=[common], **kw)

    def fam(sp):
        sp.add_argument("--family", required=True, help="su:m,n | soe:n | sostar:n")

    s = add("branch", help="closed-form restriction of a K-irrep")
    fam(s)
    s.add_argument("--weight", required=True)
    s.set_defaults(fn=cmd_branch)

    s = add("decompose", help="tensor or exterior powers of K_M-irreps")
    s.add_argument("kind", choices=["tensor", "exterior"])
    fam(s)
    s.add_argument("a", metavar="LABEL")
    s.add_argument("b", metavar="LABEL2", nargs="?")
    s.add_argument("--degree", type=int)
    s.set_defaults(fn=cmd_decompose)

    for name, fn, hlp in [("weyl", cmd_weyl, "Weyl terms with signs and c_hat"),
                          ("star", cmd_star, "Weyl terms grouped by |c_hat|")]:
        s = add(name, help=hlp)
        fam(s)
        s.add_argument("--weight", required=True)
        s.set_defaults(fn=fn)

    s = add("good", help="classify a highest weight")
    fam(s)
    s.add_argument("--weight", required=True)
    s.add_argument("--radius", type=int, default=DEFAULT_RADIUS)
    s.add_argument("--route", choices=["pair", "member"], default="pair")
    s.add_argument("--brief", action="store_true", help="omit per-group data")
    s.set_defaults(fn=cmd_good)

    s = add("scan", help="classify every weight in a box")
    fam(s)
    s.add_argument("--bound", type=int, required=True)
    s.add_argument("--p-range", help="SO(2) character range lo:hi (soe only)")
    s.add_argument("--radius", type=int, default=DEFAULT_RADIUS)
    s.add_argument("--route", choices=["pair", "member"], default="pair")
    s.add_argument("--jobs", type=int, default=1)
    s.set_defaults(fn=cmd_scan)

    s = add("preimage", help="explicit preimage for SU(m,1) / SU(1,n)")
    fam(s)
    s.add_argument("--term", action="append", required=True)
    s.set_defaults(fn=cmd_preimage)

    s = add("invariant", help="invariant I on SU(3,2)")
    fam(s)
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--term", action="append")
    g.add_argument("--weight", help="evaluate I on the restriction of this weight")
    s.set_defaults(fn=cmd_invariant)

    s = add("member", help="membership in the image of restriction")
    fam(s)
    s.add_argument("--term", action="append", required=True)
    s.add_argument("--method", choices=["auto", "soe", "su1n", "lattice"], default="auto")
    s.add_argument("--radius", type=int, default=DEFAULT_RADIUS)
    s.set_defaults(fn=cmd_member)

    s = add("explore-sostar", help="good-weight search for SO*(2n)")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--bound", type=int, required=True)
    s.add_argument("--radius", type=int, default=DEFAULT_RADIUS)
    s.add_argument("--jobs", type=int, default=1)
    s.set_defaults(fn=cmd_explore)

    s = add("verify-paper", help="run the acceptance checks")
    s.add_argument("--only", type=int, action="append", help="criterion number (repeatable)")
    s.add_argument("--keep-going", action="store_true")
    s.set_defaults(fn=cmd_verify)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    out = Output(args.format)
    try:
        return args.fn(args, out)
    except BrokenPipeError:
        sys.stderr.close()
        return EXIT_OK
    except ResourceError as exc:
        print(f"branchkit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (ValidationError, BranchkitError, ArithmeticError) as exc:
        print(f"branchkit: {exc}", file=sys.stderr)
        return EXIT_USAGE


def run_command(argv: list[str]) -> int:
    return main(argv)


if __name__ == "__main__":
    sys.exit(main())

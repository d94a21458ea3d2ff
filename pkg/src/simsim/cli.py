"""Command-line frontend.

Exit codes: 0 success/verified, 1 mathematical mismatch, 2 usage or input
error, 3 resource bound exceeded.  All payload output is deterministic;
timing goes to stderr.
"""

import argparse
import json
import os
import sys

from .branching import TYPE_BRANCHES, count
from .gfield import make_field
from .matspace import ResourceError, MatrixFq, centralizer_basis, unit_count
from .oracle import (branch_census, commuting_tuple_count, orbit_count_direct,
                     orbit_count_burnside)
from .partcert import certify_nonneg, check_inequalities
from .polyq import closed_form, verify_closed_form
from .typeclass import (InfeasibleTypeError, UnknownTypeError, classify_tuple,
                        parse_type, representative)


def _is_prime(q):
    if q < 2:
        return False
    d = 2
    while d * d <= q:
        if q % d == 0:
            return False
        d += 1
    return True


def parse_matrix_file(text):
    """Parse the tuple input format.

    Header line "n k q" (q prime), then per tuple k blocks of n lines of n
    integers, blocks separated by blank lines, tuples separated by a line
    "---".  Lines starting with '#' are comments.
    Returns (n, k, ctx, list-of-tuples-of-MatrixFq).
    """
    lines = [l.strip() for l in text.splitlines()]
    lines = [l for l in lines if not l.startswith("#")]
    body = [l for l in lines if l]
    if not body:
        raise ValueError("empty input file")
    header = body[0].split()
    if len(header) != 3:
        raise ValueError("header must be three integers: n k q")
    try:
        n, k, q = (int(x) for x in header)
    except ValueError:
        raise ValueError("header must be three integers: n k q")
    if n < 1 or k < 1:
        raise ValueError("n and k must be positive")
    if not _is_prime(q):
        raise ValueError("q = %d is not prime" % q)
    ctx = make_field(q)
    sections = [[]]
    for l in body[1:]:
        if l == "---":
            sections.append([])
        else:
            sections[-1].append(l)
    tuples = []
    for si, sec in enumerate(sections):
        if len(sec) != n * k:
            raise ValueError("tuple %d: expected %d matrix rows, got %d"
                             % (si + 1, n * k, len(sec)))
        mats = []
        for b in range(k):
            rows = []
            for l in sec[b * n:(b + 1) * n]:
                vals = l.split()
                if len(vals) != n:
                    raise ValueError("tuple %d: row %r is not %d entries"
                                     % (si + 1, l, n))
                row = [int(v) for v in vals]
                if any(v < 0 or v >= q for v in row):
                    raise ValueError("tuple %d: entry outside 0..%d"
                                     % (si + 1, q - 1))
                rows.append(row)
            mats.append(MatrixFq(ctx, rows))
        tuples.append(tuple(mats))
    return n, k, ctx, tuples


def _emit(args, command, params, result, text_lines):
    if args.json:
        payload = {"schema_version": 1, "command": command,
                   "params": params, "result": result}
        print(json.dumps(payload, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


# ---------------------------------------------------------------------------
# subcommands

def _cmd_count(args):
    poly = count(args.n, args.k)
    value = poly.eval_at(args.q) if args.q is not None else None
    text = [str(value)] if value is not None else [poly.render()]
    _emit(args, "count",
          {"n": args.n, "k": args.k, "q": args.q},
          {"polynomial": poly.render(), "value": value}, text)
    return 0


def _cmd_genfun(args):
    gf = closed_form(args.n)
    num = {e: gf.numerator[e].render() for e in sorted(gf.numerator)}
    text = ["numerator:"]
    for e in sorted(num):
        text.append("  t^%d: %s" % (e, num[e]))
    text.append("denominator: " + " ".join(
        "(1 - q^%d t)" % a for a in gf.denominator_powers))
    verified = None
    if args.verify:
        rep = verify_closed_form(args.n, args.terms)
        verified = rep.ok
        text.append("series check to t^%d: %s"
                    % (args.terms, "ok" if rep.ok else
                       "FAILED at %r" % (rep.first_discrepancy,)))
    _emit(args, "genfun",
          {"n": args.n, "terms": args.terms, "verify": args.verify},
          {"numerator": {str(e): p for e, p in num.items()},
           "denominator_powers": list(gf.denominator_powers),
           "verified": verified}, text)
    return 0 if verified in (None, True) else 1


def _cmd_oracle(args):
    if args.method == "tuples":
        total = commuting_tuple_count(args.n, args.q, args.k)
        result = {"n": args.n, "k": args.k, "q": args.q, "method": "tuples",
                  "total_tuples": total}
        text = ["commuting %d-tuples in M_%d(F_%d): %d"
                % (args.k, args.n, args.q, total)]
    else:
        fn = orbit_count_direct if args.method == "direct" \
            else orbit_count_burnside
        rep = fn(args.n, args.q, args.k)
        print("elapsed: %.3fs" % rep.elapsed, file=sys.stderr)
        result = {"n": rep.n, "k": rep.k, "q": rep.q, "method": rep.method,
                  "orbit_count": rep.orbit_count,
                  "total_tuples": rep.total_tuples}
        text = ["orbits of commuting %d-tuples in M_%d(F_%d) (%s): %d"
                % (rep.k, rep.n, rep.q, rep.method, rep.orbit_count),
                "total tuples: %d" % rep.total_tuples]
    _emit(args, "oracle",
          {"n": args.n, "k": args.k, "q": args.q, "method": args.method},
          result, text)
    return 0


def _cmd_verify(args):
    rows = []
    text = []
    ok = True
    for k in range(1, args.kmax + 1):
        expected = count(args.n, k).eval_at(args.q)
        try:
            rep = orbit_count_direct(args.n, args.q, k)
        except ResourceError:
            rep = orbit_count_burnside(args.n, args.q, k)
        agree = rep.orbit_count == expected
        ok = ok and agree
        rows.append({"k": k, "expected": expected,
                     "observed": rep.orbit_count, "method": rep.method,
                     "ok": agree})
        text.append("k=%d: symbolic %d, %s oracle %d  %s"
                    % (k, expected, rep.method, rep.orbit_count,
                       "ok" if agree else "MISMATCH"))
    _emit(args, "verify",
          {"n": args.n, "kmax": args.kmax, "q": args.q},
          {"rows": rows, "ok": ok}, text)
    return 0 if ok else 1


def _cmd_classify(args):
    with open(args.input) as fh:
        text_in = fh.read()
    n, k, ctx, tuples = parse_matrix_file(text_in)
    out_rows = []
    text = []
    for i, tup in enumerate(tuples):
        desc = classify_tuple(tup)
        Z = centralizer_basis(tup)
        units = unit_count(Z)
        out_rows.append({"index": i + 1, "type": desc.render(),
                         "centralizer_dim": Z.dim, "unit_count": units})
        text.append("tuple %d: type %s, centralizer dim %d, units %d"
                    % (i + 1, desc.render(), Z.dim, units))
    _emit(args, "classify", {"input": args.input, "n": n, "k": k, "q": ctx.q},
          {"tuples": out_rows}, text)
    return 0


def _canon(type_string):
    if type_string == "Regular" or not type_string.startswith("("):
        return type_string
    return parse_type(type_string).render()


def predicted_branches(desc, q):
    """The stored branch table of a type, evaluated at q, keyed by
    canonical type renderings."""
    tables = {_canon(t): row for t, row in TYPE_BRANCHES[desc.n].items()}
    table = tables.get(desc.render())
    if table is None:
        if not desc.is_regular():
            raise ValueError("no branch table stored for %s" % desc.render())
        table = tables["Regular"]
    return {_canon(t): p.eval_at(q) for t, p in table.items()}


def _cmd_census(args):
    desc = parse_type(args.type)
    if desc.n is None:
        raise ValueError("census needs a concrete type, not the aggregate")
    ctx = make_field(args.q)
    rep = representative(desc, ctx)
    report = branch_census(rep, ctx)
    observed = {d.render(): c for d, c in report.rows.items()}
    predicted = predicted_branches(desc, args.q)
    ok = observed == predicted
    text = ["base type %s at q=%d" % (desc.render(), args.q)]
    for t in sorted(set(observed) | set(predicted)):
        text.append("  %s: census %s, table %s"
                    % (t, observed.get(t, 0), predicted.get(t, 0)))
    text.append("census %s the stored table"
                % ("matches" if ok else "DISAGREES with"))
    _emit(args, "census", {"type": args.type, "q": args.q},
          {"base_type": desc.render(), "rows": observed,
           "predicted": predicted, "ok": ok}, text)
    return 0 if ok else 1


def _cmd_nonneg(args):
    nn = certify_nonneg(args.kmax)
    iq = check_inequalities(args.kmax)
    ok = nn.ok and iq.ok
    text = ["coefficient check to k=%d: %d checked, %d violations"
            % (args.kmax, nn.checked, len(nn.violations)),
            "inequality check to k=%d: %d checked, %d counterexamples"
            % (args.kmax, iq.checked, len(iq.counterexamples)),
            "certified" if ok else "FAILED"]
    _emit(args, "nonneg", {"kmax": args.kmax},
          {"coeff_checked": nn.checked, "violations": nn.violations,
           "ineq_checked": iq.checked,
           "counterexamples": iq.counterexamples, "ok": ok}, text)
    return 0 if ok else 1


# ---------------------------------------------------------------------------

def build_parser():
    default_threads = int(os.environ.get("SIMSIM_THREADS",
                                         os.cpu_count() or 1))
    p = argparse.ArgumentParser(
        prog="simsim",
        description="Exact counts of simultaneous similarity classes of "
                    "commuting matrix tuples over F_q, with brute-force "
                    "verification.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--json", action="store_true",
                        help="machine-readable output")
        sp.add_argument("--threads", type=int, default=default_threads,
                        help="worker cap (results are identical for any "
                             "setting)")

    sp = sub.add_parser("count", help="c_{n,k}(q) from the branching matrix")
    sp.add_argument("--n", type=int, required=True, choices=(2, 3, 4))
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--q", type=int)
    common(sp)
    sp.set_defaults(func=_cmd_count)

    sp = sub.add_parser("genfun", help="closed-form generating function")
    sp.add_argument("--n", type=int, required=True, choices=(2, 3, 4))
    sp.add_argument("--terms", type=int, default=30)
    sp.add_argument("--verify", action="store_true")
    common(sp)
    sp.set_defaults(func=_cmd_genfun)

    sp = sub.add_parser("oracle", help="brute-force orbit or tuple count")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--method", required=True,
                    choices=("direct", "burnside", "tuples"))
    common(sp)
    sp.set_defaults(func=_cmd_oracle)

    sp = sub.add_parser("verify", help="oracle vs symbolic for k <= kmax")
    sp.add_argument("--n", type=int, required=True, choices=(2, 3, 4))
    sp.add_argument("--kmax", type=int, required=True)
    sp.add_argument("--q", type=int, required=True)
    common(sp)
    sp.set_defaults(func=_cmd_verify)

    sp = sub.add_parser("classify", help="classify tuples from a file")
    sp.add_argument("--input", required=True)
    common(sp)
    sp.set_defaults(func=_cmd_classify)

    sp = sub.add_parser("census", help="branch census vs the stored table")
    sp.add_argument("--type", required=True)
    sp.add_argument("--q", type=int, required=True)
    common(sp)
    sp.set_defaults(func=_cmd_census)

    sp = sub.add_parser("nonneg", help="coefficient non-negativity "
                                       "certificates")
    sp.add_argument("--kmax", type=int, default=50)
    common(sp)
    sp.set_defaults(func=_cmd_nonneg)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.threads < 1:
        parser.error("--threads must be positive")
    try:
        return args.func(args)
    except ResourceError as e:
        print("resource bound exceeded: %s" % e, file=sys.stderr)
        return 3
    except UnknownTypeError as e:
        print("classification failed: %s" % e, file=sys.stderr)
        return 1
    except (ValueError, InfeasibleTypeError, OSError) as e:
        print("error: %s" % e, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

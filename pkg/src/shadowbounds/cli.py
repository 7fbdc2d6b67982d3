"""Command-line front end.

Exit status: 0 on success, 1 for inapplicable parameters or bad usage,
2 for unreadable or malformed input files.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings
from fractions import Fraction

from . import bounds, codes, families
from .errors import DomainError, ParseError
from .johnson import JohnsonParams, bound_m, q_matrix


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse exits 2 by default
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _emit_json(obj) -> None:
    print(json.dumps(obj, sort_keys=True, separators=(",", ":")))


def _frac(x: Fraction) -> str:
    return str(x)


def _case_label(st: bounds.BoundStatement) -> str:
    text = f"B_s <= {st.bound}"
    if st.excluded:
        text += ", != " + ", ".join(str(x) for x in sorted(st.excluded))
    if st.case_tag.roman:
        text += f" ({st.case_tag.roman})"
    return text


def cmd_qmatrix(args) -> None:
    q = q_matrix(JohnsonParams(args.v, args.d))
    if args.json:
        _emit_json({"v": args.v, "d": args.d, "Q": [[_frac(x) for x in row] for row in q.entries]})
        return
    cells = [[_frac(x) for x in row] for row in q.entries]
    width = max(len(c) for row in cells for c in row)
    for row in cells:
        print(" ".join(c.rjust(width) for c in row))


def cmd_boundm(args) -> None:
    m = bound_m(args.v, args.d)
    if args.json:
        _emit_json({"v": args.v, "d": args.d, "M": _frac(m)})
    else:
        print(f"M_({args.v},{args.d}) = {m}")


def cmd_bound(args) -> None:
    n, d = args.n, args.d
    if n % 4 == 2:
        bounds.shadow_params(n, d)
        st = bounds.bound_n2mod4(n, d // 2 + 1)
        prior = None
    elif n % 4 == 0:
        st = bounds.bound_imp(n, d)
        prior = bounds.bound_bhm(n, d) if args.compare_prior else None
    else:
        raise DomainError(f"self-dual codes have even length, got n={n}")

    if args.json:
        _emit_json(st.as_row())
        if prior is not None:
            _emit_json(prior.as_row())
        return
    c = st.conditions
    print(f"n={c.n} d={c.d} s={c.s}  improved: {_case_label(st)}" if n % 4 == 0
          else f"n={c.n} d={c.d} s={c.s}  {_case_label(st)}")
    if prior is not None:
        print(f"{'':{len(f'n={c.n} d={c.d} s={c.s}')}}  prior:    {_case_label(prior)}")
    if args.verbose:
        for key, value in st.details.items():
            print(f"  {key} = {value}")


def cmd_maxab(args) -> None:
    s, n = args.s, args.n
    closed = bounds.maxab_closed(s, n) if n < s * s else None
    out = {"s": s, "n": n, "closed_form": closed}
    if args.oracle:
        value, pairs = bounds.maxab_bruteforce(s, n)
        out.update(
            oracle=value,
            pairs=sorted([list(p) for p in pairs]),
            agree=closed == value if closed is not None else None,
            unique=len(pairs) == 1,
        )
    if args.json:
        _emit_json(out)
        return
    print(f"s={s} n={n}  closed form: {closed if closed is not None else 'n/a (n >= s^2)'}")
    if args.oracle:
        pairs_text = " ".join("{%d,%d}" % tuple(p) for p in out["pairs"])
        print(f"  brute force: {out['oracle']}  pairs: {pairs_text}")
        if closed is not None:
            print(f"  agreement: {'yes' if out['agree'] else 'NO'}")


def cmd_table1(args) -> None:
    rows = bounds.table1()
    if args.json:
        for r in rows:
            _emit_json(r.statement.as_row())
        return
    print(f"{'n':>4} {'d(n)':>5} {'d(C)':>5} {'d(S)':>5}  B_d(S)")
    for r in rows:
        print(f"{r.n:>4} {r.dn if r.dn is not None else '-':>5} {r.d:>5} {r.s:>5}  <= {r.bound}")


def cmd_table2(args) -> None:
    rows = bounds.table2()
    if args.json:
        for r in rows:
            _emit_json(r.improved.as_row())
            _emit_json(r.prior.as_row())
        return
    print(f"{'n':>4} {'d(n)':>5} {'d':>4} {'s':>4}  {'improved':<18} prior")
    for r in rows:
        dn = r.dn if r.dn is not None else "-"
        print(f"{r.n:>4} {dn:>5} {r.d:>4} {r.s:>4}  {_case_label(r.improved):<18} {_case_label(r.prior)}")


def _nonzero(dist) -> list[list[int]]:
    return [[w, c] for w, c in enumerate(dist) if c]


def cmd_verify_code(args) -> None:
    try:
        with open(args.file, encoding="utf-8") as fh:
            with warnings.catch_warnings(record=True) as caught:
                warnings.simplefilter("always")
                code = codes.parse_generator_matrix(fh)
    except OSError as exc:
        raise _IOFailure(str(exc)) from exc
    notes = [str(w.message) for w in caught]

    cls = codes.classify(code, max_n=args.max_n)
    out: dict = {
        "n": code.n,
        "k": code.k,
        "self_dual": cls.is_self_dual,
        "parity": cls.parity.name,
        "min_weight": cls.min_weight,
        "extremal": cls.is_extremal,
        "A": _nonzero(cls.weights),
        "warnings": notes,
    }
    if cls.parity is codes.Parity.SINGLY_EVEN:
        dec = codes.shadow_decompose(code, max_n=args.max_n)
        lemmas = codes.check_shadow_lemmas(dec)
        rep = codes.verify_bound(dec)
        out["B"] = _nonzero(dec.B)
        out["s"] = dec.s
        out["lemmas"] = [{"check": c.name, "passed": c.passed, "detail": c.detail} for c in lemmas.checks]
        out["bound"] = {
            "applicable": rep.applicable,
            "reason": rep.reason,
            "B_s": rep.B_s,
            "statement": rep.statement.as_row() if rep.statement else None,
            "prior": rep.prior.as_row() if rep.prior else None,
            "within_bound": rep.within_bound,
            "pattern": rep.pattern.passed if rep.pattern else None,
        }
    if args.json:
        _emit_json(out)
        return
    for note in notes:
        print(f"warning: {note}", file=sys.stderr)
    print(f"[{code.n},{code.k},{cls.min_weight}] code: {cls.parity.value}"
          + (", extremal" if cls.is_extremal else ""))
    print("A: " + " ".join(f"{w}:{c}" for w, c in out["A"]))
    if "B" not in out:
        return
    print("B: " + " ".join(f"{w}:{c}" for w, c in out["B"]) + f"   d(S)={out['s']}")
    for c in out["lemmas"]:
        print(f"  [{'pass' if c['passed'] else 'FAIL'}] {c['check']} ({c['detail']})")
    b = out["bound"]
    if not b["applicable"]:
        print(b["reason"])
        return
    print(f"{b['reason']}: B_s = {b['B_s']}, bound {b['statement']['bound']} "
          f"({b['statement']['case']}) -> {'within' if b['within_bound'] else 'EXCEEDS BOUND'}")
    if b["prior"]:
        print(f"  prior bound {b['prior']['bound']} ({b['prior']['case']})")
    print(f"  [{'pass' if b['pattern'] else 'FAIL'}] {rep.pattern.name} ({rep.pattern.detail})")


def _range_text(r: families.ParameterRange) -> str:
    parts = []
    for p in r.params:
        lo, hi = r.intervals[p]
        elo, ehi = r.exact[p]
        text = f"{lo} <= {p} <= {hi}"
        if (elo, ehi) != (lo, hi):
            text += f"  (rational: {elo} .. {ehi})"
        parts.append(text)
    return "; ".join(parts)


def cmd_restrict(args) -> None:
    fam = families.family(args.family)
    prior = families.prior_range(fam)
    st = families.applicable_bound(fam)
    refined = families.refine(fam.name)
    lead = fam.shadow_leading[fam.s]
    if args.json:
        _emit_json({
            "family": fam.name,
            "n": fam.n,
            "d": fam.d,
            "s": fam.s,
            "shadow_leading": str(lead),
            "applied": st.as_row(),
            "prior": {p: list(prior.intervals[p]) for p in fam.params},
            "refined": {p: list(refined.intervals[p]) for p in fam.params},
            "refined_exact": {p: [_frac(a), _frac(b)] for p, (a, b) in refined.exact.items()},
        })
        return
    print(f"{fam.name}: n={fam.n} d={fam.d} s={fam.s}, B_{fam.s} = {lead}")
    print(f"  prior:   {_range_text(prior)}")
    print(f"  applied: {_case_label(st)} [{st.case_tag.value}]")
    print(f"  refined: {_range_text(refined)}")


class _IOFailure(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="shadowbounds", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.set_defaults(func=func)
        return p

    p = add("qmatrix", cmd_qmatrix, "second eigenmatrix of J(v,d)")
    p.add_argument("--v", type=int, required=True)
    p.add_argument("--d", type=int, required=True)

    p = add("boundm", cmd_boundm, "one-intersecting family bound M_{v,d}")
    p.add_argument("--v", type=int, required=True)
    p.add_argument("--d", type=int, required=True)

    p = add("bound", cmd_bound, "bound on B_s for (n, d)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--compare-prior", action="store_true")
    p.add_argument("--verbose", action="store_true")

    p = add("maxab", cmd_maxab, "max a+b subject to s(a+b)-ab <= n")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--oracle", action="store_true", help="also run the brute-force search")

    add("table1", cmd_table1, "bounds for n = 2 (mod 4)")
    add("table2", cmd_table2, "improved and prior bounds for n = 0 (mod 4)")

    p = add("verify-code", cmd_verify_code, "check an explicit generator matrix")
    p.add_argument("--file", required=True)
    p.add_argument("--max-n", type=int, default=codes.DEFAULT_GUARD)

    p = add("restrict", cmd_restrict, "refine a weight-enumerator family")
    p.add_argument("--family", required=True)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        args.func(args)
    except (_IOFailure, ParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

Exit status: 0 when every check passed, 1 when a check failed (a witness is
printed), 2 for usage or input errors.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import congruences as cg
from .algebra import FiniteGroup, FiniteSemiring, validate_axioms
from .constructions import parse_builtin, sylow_abelian_report
from .errors import Falsification, PreconditionError, ResourceLimitError, StructureError
from .partition import Partition
from .structure import eggbox, green_relations, idempotent_elements, idempotents, partial_orders
from .terms import builtin_identities, find_counterexample, m_variety, member_of, preset, sr
from .textformat import dumps, loads

WORKERS_ENV = "AISEMIRING_WORKERS"


class UsageError(Exception):
    pass


class Report:
    """Collects output lines; each has a text form and a JSON form."""

    def __init__(self):
        self.items: list[tuple[str, dict]] = []
        self.failed = False

    def add(self, text, **data):
        self.items.append((text, {"text": text, **data}))

    def fail(self, text, **data):
        self.failed = True
        self.add(text, status="fail", **data)

    def emit(self, fmt, out):
        for text, data in self.items:
            out.write((json.dumps(data, sort_keys=True) if fmt == "json-lines" else text) + "\n")


def load_algebra(spec: str | None, stdin=None):
    if spec in (None, "-"):
        return loads((stdin or sys.stdin).read())
    path = Path(spec)
    if path.is_file():
        return loads(path.read_text())
    try:
        return parse_builtin(spec)
    except ValueError as exc:
        raise UsageError(f"{spec!r} is neither a file nor a builtin algebra: {exc}") from None


def _semiring(spec, stdin):
    A = load_algebra(spec, stdin)
    if not isinstance(A, FiniteSemiring):
        raise UsageError("this command needs a semiring")
    return A


def _fmt_asg(asg):
    return ", ".join(f"x{v}->{a}" for v, a in sorted(asg.items()))


def cmd_check(args, rep, stdin):
    S = _semiring(args.algebra, stdin)
    bad = validate_axioms(S)
    if bad:
        for v in bad:
            rep.fail(f"axiom {v.law} fails at {v.witness}", law=v.law, witness=list(v.witness))
        return
    parts = ["valid ai-semiring"]
    notes = []
    for V in (sr(args.n), m_variety(args.n)):
        for ident in V.identities:
            asg = find_counterexample(S, ident)
            if asg is not None:
                parts.append(f"not a member of {V.name}")
                notes.append(f"  {ident} fails at {_fmt_asg(asg)}")
                break
        else:
            parts.append(f"member of {V.name}")
    rep.add("; ".join(parts), valid=True, members=[p for p in parts[1:] if p.startswith("member")])
    for line in notes:
        rep.add(line)


def cmd_identities(args, rep, stdin):
    S = _semiring(args.algebra, stdin)
    n = args.n
    in_m = member_of(S, m_variety(n))
    rep.add(f"algebra {'is' if in_m else 'is not'} a member of M_{n}", member=in_m)
    for ident in builtin_identities(n):
        asg = find_counterexample(S, ident)
        if asg is None:
            rep.add(f"PASS {ident.name}: {ident}", identity=ident.name, passed=True)
        elif in_m:
            rep.fail(f"FAIL {ident.name}: {ident} at {_fmt_asg(asg)}", identity=ident.name, witness=asg)
        else:
            rep.add(f"fails {ident.name}: {ident} at {_fmt_asg(asg)}", identity=ident.name, passed=False, witness=asg)


def cmd_congruences(args, rep, stdin):
    S = _semiring(args.algebra, stdin)
    if S.order < 2:
        raise PreconditionError("congruence analysis needs at least two elements")
    cons = cg.all_congruences(S)
    rep.add(f"{len(cons)} congruences", count=len(cons))
    for i, c in enumerate(cons):
        rep.add(f"  {i}: {c}", index=i, partition=str(c))
    if args.lattice:
        for lo, hi in cg.hasse_covers(cons):
            rep.add(f"  cover {lo} < {hi}", cover=[lo, hi])
    mono = cg.monolith(S)
    rep.add(f"monolith: {mono if mono is not None else 'none'}", monolith=None if mono is None else str(mono))
    rep.add(f"subdirectly irreducible: {mono is not None}", si=mono is not None)
    rep.add(f"congruence simple: {len(cons) == 2}", simple=len(cons) == 2)


def cmd_green(args, rep, stdin):
    A = load_algebra(args.algebra, stdin)
    g = green_relations(A, args.n) if args.n else green_relations(A)
    idem = set(idempotent_elements(A))
    for name in "LRHD":
        rep.add(f"{name}: {getattr(g, name)}", relation=name, partition=str(getattr(g, name)))
    for i, grid in enumerate(eggbox(A)):
        rep.add(f"D-class {i}:", dclass=i)
        for row in grid:
            cells = ["{" + ",".join(f"{x}*" if x in idem else str(x) for x in h) + "}" for h in row]
            rep.add("  " + " | ".join(cells), row=[list(h) for h in row])


def cmd_orders(args, rep, stdin):
    S = _semiring(args.algebra, stdin)
    r = partial_orders(S, args.n)
    k = S.order
    add_pairs = [(a, b) for a in range(k) for b in range(k) if a != b and r.le_add[a][b]]
    mul_pairs = [(a, b) for a in range(k) for b in range(k) if a != b and r.le_mul[a][b]]
    rep.add(f"<=_+ strict pairs: {add_pairs}", le_add=add_pairs)
    rep.add(f"<=_. strict pairs: {mul_pairs}", le_mul=mul_pairs)
    if r.dual:
        rep.add("duality holds: <=_+ is the converse of <=_.", dual=True)
    for what, witness in r.violations:
        rep.fail(f"{what} at {witness}", witness=list(witness))


def cmd_extend(args, rep, stdin):
    S = _semiring(args.algebra, stdin)
    E = idempotents(S, args.n).elements
    # rho is written over element indices of S and must cover exactly E(S)
    blocks = _blocks_from_text(args.rho)
    flat = sorted(x for b in blocks for x in b)
    if flat != list(E):
        raise UsageError(f"rho must partition exactly the idempotents {list(E)}")
    local = {e: i for i, e in enumerate(E)}
    rho = Partition.from_blocks([[local[x] for x in b] for b in blocks], len(E))
    try:
        tau = cg.extend_idempotent_congruence(S, rho, args.n)
    except Falsification as exc:
        rep.fail(f"extension failed: {exc} witness={exc.witness}", witness=str(exc.witness))
        return
    rep.add(f"E(S) = {list(E)}", idempotents=list(E))
    rep.add(f"tau = {tau}", partition=str(tau))
    rep.add("restriction to E(S) equals rho", restriction_ok=True)


def _blocks_from_text(text):
    body = text.strip()
    if not (body.startswith("[") and body.endswith("]")):
        raise UsageError(f"partition must look like [{{0,1}},{{2}}], got {text!r}")
    blocks = []
    for chunk in body[1:-1].split("}"):
        chunk = chunk.strip().lstrip(",").strip()
        if chunk:
            blocks.append([int(x) for x in chunk.lstrip("{").split(",") if x.strip()])
    return blocks


def cmd_build(args, rep, stdin):
    try:
        A = parse_builtin(args.name)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    rep.add(dumps(A, comment=args.name).rstrip("\n"), algebra=dumps(A))


def cmd_sylow(args, rep, stdin):
    G = load_algebra(args.group, stdin)
    if not isinstance(G, FiniteGroup):
        raise UsageError("sylow needs a group")
    r = sylow_abelian_report(G)
    for e in r.entries:
        rep.add(
            f"Sylow {e.prime}-subgroup of order {len(e.subgroup)}: {'abelian' if e.abelian else 'non-abelian'} {list(e.subgroup)}",
            prime=e.prime,
            order=len(e.subgroup),
            abelian=e.abelian,
        )
    if r.predicted_nonfinitely_based:
        rep.add("flag: flat extension predicted nonfinitely based (prediction, not verified)", flag=True)
    else:
        rep.add("all Sylow subgroups abelian", flag=False)


def _workers():
    try:
        return max(1, int(os.environ.get(WORKERS_ENV, "1")))
    except ValueError:
        raise UsageError(f"{WORKERS_ENV} must be an integer") from None


def cmd_enumerate(args, rep, stdin):
    from .enumerator import build_catalog, write_catalog

    V = preset(args.variety)
    if V.kind != "semiring":
        raise UsageError("enumerate works with semiring varieties (sr<n> or m<n>)")
    cat = build_catalog(V, args.order, _workers())
    if args.out:
        write_catalog(cat, args.out)
    for k, members in sorted(cat.members.items()):
        for i, S in enumerate(members):
            rep.add(f"{cat.filename(k, i)}", file=cat.filename(k, i), order=k)
    counts = {str(k): v for k, v in cat.counts().items()}
    rep.add(f"summary {json.dumps({'variety': V.name, 'counts': counts, 'source': 'enumerated by this tool'}, sort_keys=True)}", summary=True, variety=V.name, counts=counts)


def cmd_verify(args, rep, stdin):
    from .verification import flat_builtins, run_all_checks

    M = m_variety(args.n)
    covered = [label for label, S in flat_builtins() if member_of(S, M)]
    rep.add(f"built-ins in {M.name}: {', '.join(covered)}", builtins=covered)
    for res in run_all_checks(args.n, args.max_order, _workers()):
        if res.passed:
            rep.add(res.line(), **res.record())
        else:
            rep.fail(res.line(), **res.record())


def build_parser():
    p = argparse.ArgumentParser(prog="aisemiring", description="Finite ai-semiring workbench")
    p.add_argument("--format", choices=("text", "json-lines"), default="text")
    sub = p.add_subparsers(dest="command", required=True)

    def alg(sp, name="algebra"):
        sp.add_argument(name, nargs="?", default="-", help="file, builtin expression, or - for stdin")

    sp = sub.add_parser("check", help="axioms and membership in Sr(n,1) and M_n")
    alg(sp)
    sp.add_argument("--n", type=int, default=2)
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("identities", help="built-in identity suite at exponent n")
    alg(sp)
    sp.add_argument("--n", type=int, required=True)
    sp.set_defaults(func=cmd_identities)

    sp = sub.add_parser("congruences", help="congruence lattice, monolith, SI, simplicity")
    alg(sp)
    sp.add_argument("--lattice", action="store_true", help="also print Hasse covers")
    sp.set_defaults(func=cmd_congruences)

    sp = sub.add_parser("green", help="Green's relations and eggbox")
    alg(sp)
    sp.add_argument("--n", type=int, default=None, help="cross-check against power tests")
    sp.set_defaults(func=cmd_green)

    sp = sub.add_parser("orders", help="<=_+ versus <=_. duality")
    alg(sp)
    sp.add_argument("--n", type=int, required=True)
    sp.set_defaults(func=cmd_orders)

    sp = sub.add_parser("extend-congruence", help="extend a congruence on E(S) to S")
    sp.add_argument("algebra")
    sp.add_argument("rho", help="partition of the idempotents, e.g. [{1,2}]")
    sp.add_argument("--n", type=int, required=True)
    sp.set_defaults(func=cmd_extend)

    sp = sub.add_parser("build", help="print a builtin algebra in text format")
    sp.add_argument("name")
    sp.set_defaults(func=cmd_build)

    sp = sub.add_parser("sylow", help="Sylow subgroups and the abelian flag")
    alg(sp, "group")
    sp.set_defaults(func=cmd_sylow)

    sp = sub.add_parser("enumerate", help="catalog of small algebras in a variety")
    sp.add_argument("--order", type=int, required=True)
    sp.add_argument("--variety", required=True, help="e.g. m3 or sr2")
    sp.add_argument("--out", default=None)
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("verify-paper", help="run every structural check for exponent n")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--max-order", type=int, default=4)
    sp.set_defaults(func=cmd_verify)
    return p


def main(argv=None, stdin=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    rep = Report()
    try:
        args.func(args, rep, stdin)
    except (UsageError, StructureError, PreconditionError, ResourceLimitError, ValueError) as exc:
        stderr.write(f"error: {exc}\n")
        stderr.write(parser.format_usage())
        return 2
    except Falsification as exc:
        rep.fail(f"falsified: {exc} witness={exc.witness}", witness=str(exc.witness))
    rep.emit(args.format, stdout)
    return 1 if rep.failed else 0


if __name__ == "__main__":
    sys.exit(main())

"""Machine checks of the structure theory of M_n over concrete algebras.

Each check runs over a list of labelled algebras and returns a
:class:`CheckResult` carrying every violation found with its witness.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional

from . import congruences as cg
from .algebra import FiniteSemiring, generated_subalgebras, validate_axioms
from .constructions import parse_builtin
from .enumerator import build_catalog, verify_si_characterisation
from .errors import Falsification
from .oracles import brute_force_congruences
from .partition import Partition
from .structure import (
    green_power_violations,
    green_relations,
    idempotent_elements,
    idempotents,
    is_clifford,
    missing_idempotent_meets,
    partial_orders,
)
from .terms import derived_identities, find_counterexample, m_variety, member_of, sr

Labelled = list[tuple[str, FiniteSemiring]]

FLAT_BUILTINS = ("zn:1", "zn:2", "zn:3", "zn:4", "prod(zn:2,zn:2)", "q8", "gp:3")


@dataclass
class CheckResult:
    name: str
    checked: int = 0
    violations: list[tuple[str, object]] = field(default_factory=list)

    @property
    def passed(self):
        return not self.violations

    def line(self):
        if self.passed:
            return f"PASS {self.name} ({self.checked} checked)"
        label, witness = self.violations[0]
        return f"FAIL {self.name} ({len(self.violations)} of {self.checked}): {label} witness={witness}"

    def record(self):
        return {
            "check": self.name,
            "passed": self.passed,
            "checked": self.checked,
            "violations": [[label, str(w)] for label, w in self.violations],
        }


def flat_builtins() -> Labelled:
    return [(f"flat({g})", parse_builtin(f"flat({g})")) for g in FLAT_BUILTINS]


def catalog_members(n: int, max_order: int = 4, workers: int = 1) -> Labelled:
    V = m_variety(n)
    cat = build_catalog(V, max_order, workers)
    return [(cat.filename(k, i), S) for k, ms in sorted(cat.members.items()) for i, S in enumerate(ms)]


def _run(name, algebras: Labelled, probe: Callable[[FiniteSemiring], Optional[object]]) -> CheckResult:
    res = CheckResult(name)
    for label, S in algebras:
        res.checked += 1
        try:
            w = probe(S)
        except Falsification as exc:
            w = f"{exc} {exc.witness}"
        if w is not None:
            res.violations.append((label, w))
    return res


def check_derived_identities(algebras: Labelled, n: int) -> CheckResult:
    ids = derived_identities(n)

    def probe(S):
        for ident in ids:
            asg = find_counterexample(S, ident)
            if asg is not None:
                return f"{ident.name}: {ident} fails at {asg}"
        return None

    return _run(f"derived identities hold in M_{n}", algebras, probe)


def check_si_characterisation(algebras: Labelled, n: int) -> CheckResult:
    """SI <=> simple <=> 0-group, and SI members are flat extensions."""
    res = CheckResult(f"SI <=> simple <=> 0-group in M_{n}")
    for label, S in algebras:
        if S.order < 2:
            continue
        rep = verify_si_characterisation([S], n)
        res.checked += 1
        for _, why in rep.violators:
            res.violations.append((label, why))
    return res


def flat_law_violation(S: FiniteSemiring, n: int):
    """Witness against ``c != d => c+d = 0`` or ``a != 1 => a + a^{n-1} = 0`` in a flat extension."""
    from .structure import is_zero_group

    zg = is_zero_group(S)
    if zg is None:
        return "not a 0-group"
    z = zg.zero
    one = next(e for e in zg.group if all(S.mul[e][x] == x for x in zg.group))
    for c in S.elements:
        for d in S.elements:
            if c != d and S.add[c][d] != z:
                return ("c+d", c, d)
    for a in zg.group:
        if a != one and S.add[a][S.power(a, n - 1)] != z:
            return ("a+a^(n-1)", a)
    return None


def check_flat_laws(algebras: Labelled, n: int) -> CheckResult:
    return _run(f"flat-extension addition laws (n={n})", algebras, lambda S: flat_law_violation(S, n))


def congruence_oracle_mismatch(S: FiniteSemiring):
    engine = {c.labels for c in cg.all_congruences(S)}
    oracle = brute_force_congruences(S.add, S.mul)
    if engine != oracle:
        return {"engine_only": sorted(engine - oracle), "oracle_only": sorted(oracle - engine)}
    return None


def check_congruence_oracle(algebras: Labelled, max_order: int = 6) -> CheckResult:
    small = [(l, S) for l, S in algebras if S.order <= max_order and not validate_axioms(S)]
    return _run("congruence engine matches partition scan", small, congruence_oracle_mismatch)


def extension_violation(S: FiniteSemiring, n: int):
    """Try every congruence on E(S); witness the first one that fails to extend."""
    idem = idempotents(S, n)
    sub = idem.subsemiring
    for labels in sorted(brute_force_congruences(sub.add, sub.mul)):
        rho = Partition(labels)
        try:
            tau = cg.extend_idempotent_congruence(S, rho, n)
        except Falsification as exc:
            return f"rho={rho}: {exc} {exc.witness}"
        if tau.restrict(idem.elements) != rho:
            return f"rho={rho}: restriction is {tau.restrict(idem.elements)}"
    return None


def check_extension(algebras: Labelled, n: int) -> CheckResult:
    return _run(f"congruences on E(S) extend (M_{n})", algebras, lambda S: extension_violation(S, n))


def diagonal_restriction_violation(S: FiniteSemiring, n: int):
    E = idempotent_elements(S)
    for c in cg.all_congruences(S):
        if c.is_identity() != c.restrict(E).is_identity():
            return str(c)
    return None


def check_diagonal_restriction(algebras: Labelled, n: int) -> CheckResult:
    return _run(
        f"congruence is identity iff identity on E(S) (M_{n})",
        algebras,
        lambda S: diagonal_restriction_violation(S, n),
    )


def check_order_duality(algebras: Labelled, n: int) -> CheckResult:
    def probe(S):
        rep = partial_orders(S, n)
        return rep.violations[0] if rep.violations else None

    return _run(f"<=_+ is the converse of <=_. (M_{n})", algebras, probe)


def check_meets(algebras: Labelled, n: int) -> CheckResult:
    def probe(S):
        missing = missing_idempotent_meets(S, n)
        return missing[0] if missing else None

    return _run(f"meets with idempotents under <=_. exist (M_{n})", algebras, probe)


def green_violation(S: FiniteSemiring, n: int, in_m: bool):
    g = green_relations(S)
    bad = green_power_violations(S, n, g)
    if bad:
        return bad[0]
    if in_m:
        if g.D != g.H:
            return ("D != H", str(g.D), str(g.H))
        if is_clifford(S) is None:
            return "multiplicative reduct is not Clifford"
    return None


def check_green(algebras: Labelled, n: int) -> CheckResult:
    """H by ideals agrees with ``a^{n-1} = b^{n-1}``; on M_n also D = H and Clifford."""
    M, V = m_variety(n), sr(n)
    members = [(l, S) for l, S in algebras if member_of(S, V)]
    return _run(
        f"Green's relations match power tests (Sr({n},1))",
        members,
        lambda S: green_violation(S, n, member_of(S, M)),
    )


def random_generator_sets(algebras: Labelled, count: int, seed: int = 0):
    rng = random.Random(seed)
    out = []
    for i in range(count):
        label, S = algebras[i % len(algebras)]
        size = rng.randint(1, min(3, S.order))
        out.append((label, S, tuple(sorted(rng.sample(range(S.order), size)))))
    return out


def check_local_finiteness(samples) -> CheckResult:
    """Subsemiring = finite sums of subsemigroup, and the 2^|subsemigroup| bound."""
    res = CheckResult("generated subsemiring is the set of sums of the subsemigroup")
    for label, S, gens in samples:
        res.checked += 1
        try:
            c = generated_subalgebras(S, gens)
        except Falsification as exc:
            res.violations.append((f"{label} A={gens}", f"{exc} {exc.witness}"))
            continue
        if len(c.semiring_closure) > 2 ** len(c.semigroup_closure):
            res.violations.append((f"{label} A={gens}", "size bound"))
    return res


def run_all_checks(n: int, max_order: int = 4, workers: int = 1, extra: Iterable[tuple[str, FiniteSemiring]] = ()) -> list[CheckResult]:
    """Run every structural check for exponent ``n`` over the flat built-ins
    in M_n, the enumerated M_n catalog up to ``max_order``, and ``extra``."""
    M = m_variety(n)
    builtins = [(l, S) for l, S in flat_builtins() if member_of(S, M)]
    catalog = catalog_members(n, max_order, workers)
    extra = [(l, S) for l, S in extra if member_of(S, M)]
    members = builtins + catalog + extra
    return [
        check_derived_identities(members, n),
        check_si_characterisation(members, n),
        check_flat_laws(builtins, n),
        check_congruence_oracle(members),
        check_extension(catalog + [(l, S) for l, S in builtins if S.order <= 10], n),
        check_diagonal_restriction(members, n),
        check_order_duality(members, n),
        check_meets(members, n),
        check_green(members, n),
        check_local_finiteness(random_generator_sets(builtins, 20, seed=n)),
    ]

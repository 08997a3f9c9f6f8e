"""Structure of the multiplicative reduct.

Green's relations are computed from principal one-sided ideals of S^1; the
power characterisations that hold inside Sr(n,1) are only used as
cross-checks (:func:`green_power_violations`).
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import NamedTuple, Optional

from .algebra import FiniteGroup, FiniteSemiring, restrict
from .errors import Falsification, PreconditionError
from .partition import Partition


@dataclass(frozen=True)
class Idempotents:
    elements: tuple[int, ...]
    subsemiring: FiniteSemiring


def idempotent_elements(S) -> tuple[int, ...]:
    return tuple(a for a in S.elements if S.mul[a][a] == a)


def idempotents(S: FiniteSemiring, n: Optional[int] = None) -> Idempotents:
    """E(S) together with the subsemiring it carries.

    Inside Sr(n,1) the idempotents are closed under both operations; if they
    are not, ``S`` cannot belong to that variety and :class:`Falsification`
    is raised with the offending pair.
    """
    if n is not None:
        from .terms import member_of, sr

        if not member_of(S, sr(n)):
            raise PreconditionError(f"algebra is not in Sr({n},1)")
    E = idempotent_elements(S)
    Eset = set(E)
    for e, f in product(E, repeat=2):
        if S.add[e][f] not in Eset:
            raise Falsification("idempotents are not closed under +", witness=(e, f))
        if S.mul[e][f] not in Eset:
            raise Falsification("idempotents are not closed under *", witness=(e, f))
    sub, _ = restrict(S, E)
    return Idempotents(E, sub)


# -- Green's relations -------------------------------------------------------


@dataclass(frozen=True)
class GreenData:
    L: Partition
    R: Partition
    H: Partition
    D: Partition


def left_ideal(mul, a):
    """S^1 a as a frozenset."""
    return frozenset({a} | {row[a] for row in mul})


def right_ideal(mul, a):
    return frozenset({a} | set(mul[a]))


def _kernel(values):
    return Partition(tuple(values))


def green_relations(S, n: Optional[int] = None) -> GreenData:
    """L, R, H and D of the multiplicative reduct.

    With ``n`` given and ``S`` in Sr(n,1), also checks that H agrees with
    ``a^{n-1} = b^{n-1}`` and D with the sandwich condition, raising
    :class:`Falsification` on disagreement.
    """
    mul = S.mul
    L = _kernel(left_ideal(mul, a) for a in S.elements)
    R = _kernel(right_ideal(mul, a) for a in S.elements)
    data = GreenData(L, R, L.meet(R), L.join(R))
    if n is not None and isinstance(S, FiniteSemiring):
        from .terms import member_of, sr

        if member_of(S, sr(n)):
            bad = green_power_violations(S, n, data)
            if bad:
                raise Falsification(f"Green's relations disagree with the power test: {bad[0][0]}", witness=bad[0][1])
    return data


def green_power_violations(S, n: int, data: Optional[GreenData] = None):
    """Pairs where ideal-computed H or D differs from its power description.

    H: ``a^{n-1} = b^{n-1}``.  D: ``a' b' a' = a'`` and ``b' a' b' = b'`` with
    ``x' = x^{n-1}``.  Returns ``[(relation, (a, b)), ...]``.
    """
    data = data or green_relations(S)
    mul = S.mul
    top = [S.power(a, n - 1) for a in S.elements]
    out = []
    for a, b in product(S.elements, repeat=2):
        ta, tb = top[a], top[b]
        if data.H.related(a, b) != (ta == tb):
            out.append(("H", (a, b)))
        sandwich = mul[mul[ta][tb]][ta] == ta and mul[mul[tb][ta]][tb] == tb
        if data.D.related(a, b) != sandwich:
            out.append(("D", (a, b)))
    return out


def eggbox(S) -> list[list[list[tuple[int, ...]]]]:
    """D-classes as grids of H-classes: rows are R-classes, columns L-classes."""
    g = green_relations(S)
    grids = []
    for dclass in g.D.blocks():
        rows = sorted({g.R.labels[x] for x in dclass})
        cols = sorted({g.L.labels[x] for x in dclass})
        grid = []
        for r in rows:
            grid.append([tuple(x for x in dclass if g.R.labels[x] == r and g.L.labels[x] == c) for c in cols])
        grids.append(grid)
    return grids


# -- regularity ---------------------------------------------------------------


def is_completely_regular(S) -> bool:
    """Every H-class contains an idempotent, so every H-class is a group."""
    H = green_relations(S).H
    idem = set(idempotent_elements(S))
    return all(any(x in idem for x in block) for block in H.blocks())


@dataclass(frozen=True)
class CliffordDecomposition:
    classes: tuple[tuple[int, ...], ...]
    semilattice: tuple[tuple[int, ...], ...]

    def class_of(self, a):
        return next(i for i, c in enumerate(self.classes) if a in c)


def is_clifford(S) -> Optional[CliffordDecomposition]:
    """Decompose ``(S, *)`` as a semilattice of groups, or return ``None``."""
    if not is_completely_regular(S):
        return None
    mul = S.mul
    E = idempotent_elements(S)
    if any(mul[e][a] != mul[a][e] for e in E for a in S.elements):
        return None
    H = green_relations(S).H
    classes = tuple(H.blocks())
    label = H.labels
    m = len(classes)
    table = [[-1] * m for _ in range(m)]
    for a, b in product(S.elements, repeat=2):
        i, j, c = label[a], label[b], label[mul[a][b]]
        if table[i][j] == -1:
            table[i][j] = c
        elif table[i][j] != c:
            raise Falsification("H-classes do not multiply as a semilattice", witness=(a, b))
    for i, j, l in product(range(m), repeat=3):
        if table[i][i] != i or table[i][j] != table[j][i] or table[table[i][j]][l] != table[i][table[j][l]]:
            raise Falsification("structure table is not a semilattice", witness=(i, j, l))
    return CliffordDecomposition(classes, tuple(tuple(r) for r in table))


class ZeroGroup(NamedTuple):
    zero: int
    group: tuple[int, ...]


def is_zero_group(S) -> Optional[ZeroGroup]:
    """``(z, G)`` when the carrier is a group ``G`` with an adjoined zero ``z``."""
    mul, k = S.mul, S.order
    if k < 2:
        return None
    zeros = [z for z in S.elements if all(mul[z][x] == z == mul[x][z] for x in S.elements)]
    if not zeros:
        return None
    z = zeros[0]
    G = tuple(x for x in S.elements if x != z)
    if any(mul[a][b] == z for a in G for b in G):
        return None
    ones = [e for e in G if all(mul[e][x] == x == mul[x][e] for x in G)]
    if not ones:
        return None
    e = ones[0]
    if not all(any(mul[a][b] == e for b in G) for a in G):
        return None
    return ZeroGroup(z, G)


def group_part(S, zg: ZeroGroup) -> FiniteGroup:
    """The group of a 0-group as a standalone :class:`FiniteGroup`."""
    G = zg.group
    local = {x: i for i, x in enumerate(G)}
    table = [[local[S.mul[a][b]] for b in G] for a in G]
    ident = next(i for i, a in enumerate(G) if all(S.mul[a][x] == x for x in G))
    return FiniteGroup(table, ident, tuple(S.names[x] for x in G))


# -- the two partial orders ---------------------------------------------------


@dataclass(frozen=True)
class OrderReport:
    """``le_add[a][b]`` is ``a <=_+ b``; ``le_mul[a][b]`` is ``a <=_. b``."""

    le_add: tuple[tuple[bool, ...], ...]
    le_mul: tuple[tuple[bool, ...], ...]
    violations: tuple[tuple[str, tuple[int, ...]], ...]

    @property
    def dual(self) -> bool:
        return not self.violations


def _order_failure(rel, k):
    for a in range(k):
        if not rel[a][a]:
            return ("reflexive", (a,))
    for a, b in product(range(k), repeat=2):
        if a != b and rel[a][b] and rel[b][a]:
            return ("antisymmetric", (a, b))
    for a, b, c in product(range(k), repeat=3):
        if rel[a][b] and rel[b][c] and not rel[a][c]:
            return ("transitive", (a, b, c))
    return None


def partial_orders(S: FiniteSemiring, n: int) -> OrderReport:
    """Compute ``a <=_+ b iff a+b=b`` and ``a <=_. b iff a = eb`` for some idempotent ``e``.

    Violations list any failure of either to be a partial order and every
    pair where ``<=_+`` is not the converse of ``<=_.``.
    """
    from .terms import m_variety, member_of

    if not member_of(S, m_variety(n)):
        raise PreconditionError(f"algebra is not in M_{n}")
    k, add, mul = S.order, S.add, S.mul
    E = idempotent_elements(S)
    le_add = tuple(tuple(add[a][b] == b for b in range(k)) for a in range(k))
    le_mul = tuple(tuple(any(mul[e][b] == a for e in E) for b in range(k)) for a in range(k))
    violations = []
    for name, rel in (("<=_+", le_add), ("<=_.", le_mul)):
        bad = _order_failure(rel, k)
        if bad:
            violations.append((f"{name} not {bad[0]}", bad[1]))
    for a, b in product(range(k), repeat=2):
        if le_add[a][b] != le_mul[b][a]:
            violations.append(("<=_+ differs from converse of <=_.", (a, b)))
    return OrderReport(le_add, le_mul, tuple(violations))


def mul_meet(report: OrderReport, a: int, b: int) -> Optional[int]:
    """Greatest lower bound of ``{a, b}`` under ``<=_.``, or ``None``."""
    le = report.le_mul
    k = len(le)
    lower = [c for c in range(k) if le[c][a] and le[c][b]]
    top = [c for c in lower if all(le[d][c] for d in lower)]
    return top[0] if top else None


def missing_idempotent_meets(S: FiniteSemiring, n: int) -> list[tuple[int, int]]:
    """Pairs ``(a, e)`` with ``e`` idempotent whose meet under ``<=_.`` does not exist."""
    report = partial_orders(S, n)
    return [(a, e) for a in S.elements for e in idempotent_elements(S) if mul_meet(report, a, e) is None]

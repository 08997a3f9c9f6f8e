"""Operation-table algebras: finite semirings and finite groups.

Elements are the dense indices ``0..k-1``; names are for display only.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import NamedTuple, Optional, Sequence

from .errors import Falsification, StructureError

Table = tuple[tuple[int, ...], ...]


def _as_table(rows: Sequence[Sequence[int]], k: int, label: str) -> Table:
    table = tuple(tuple(int(x) for x in row) for row in rows)
    if len(table) != k or any(len(row) != k for row in table):
        raise StructureError(f"{label} table must be {k}x{k}")
    for i, row in enumerate(table):
        for j, x in enumerate(row):
            if not 0 <= x < k:
                raise StructureError(f"{label}[{i}][{j}] = {x} is outside [0, {k})")
    return table


def _default_names(k):
    return tuple(str(i) for i in range(k))


@dataclass(frozen=True)
class FiniteSemiring:
    """Carrier ``0..k-1`` with an addition and a multiplication table.

    Construction only checks that the tables are well formed; the semiring
    laws are checked by :func:`validate_axioms`.
    """

    add: Table
    mul: Table
    names: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self):
        k = len(self.add)
        if k == 0:
            raise StructureError("carrier must be nonempty")
        object.__setattr__(self, "add", _as_table(self.add, k, "add"))
        object.__setattr__(self, "mul", _as_table(self.mul, k, "mul"))
        names = tuple(self.names) if self.names else _default_names(k)
        if len(names) != k:
            raise StructureError(f"expected {k} element names, got {len(names)}")
        object.__setattr__(self, "names", names)

    @property
    def order(self) -> int:
        return len(self.add)

    @property
    def elements(self) -> range:
        return range(len(self.add))

    def plus(self, a, b):
        return self.add[a][b]

    def times(self, a, b):
        return self.mul[a][b]

    def power(self, a, m):
        """``a**m`` for ``m >= 1``."""
        if m < 1:
            raise ValueError("powers start at 1")
        r = a
        for _ in range(m - 1):
            r = self.mul[r][a]
        return r

    def __repr__(self):
        return f"FiniteSemiring(order={self.order}, names={list(self.names)})"


@dataclass(frozen=True)
class FiniteGroup:
    """A finite group given by its multiplication table and identity index."""

    mul: Table
    identity: int
    names: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self):
        m = len(self.mul)
        if m == 0:
            raise StructureError("group must be nonempty")
        object.__setattr__(self, "mul", _as_table(self.mul, m, "mul"))
        names = tuple(self.names) if self.names else _default_names(m)
        if len(names) != m:
            raise StructureError(f"expected {m} element names, got {len(names)}")
        object.__setattr__(self, "names", names)
        if not 0 <= self.identity < m:
            raise StructureError(f"identity {self.identity} out of range")
        problem = group_axiom_failure(self.mul, self.identity)
        if problem:
            raise StructureError(f"not a group: {problem}")

    @property
    def order(self) -> int:
        return len(self.mul)

    @property
    def elements(self) -> range:
        return range(len(self.mul))

    def times(self, a, b):
        return self.mul[a][b]

    def power(self, a, m):
        r = self.identity
        for _ in range(m):
            r = self.mul[r][a]
        return r

    def inverse(self, a):
        e = self.identity
        return next(b for b in self.elements if self.mul[a][b] == e)

    def element_order(self, a):
        r, m = a, 1
        while r != self.identity:
            r = self.mul[r][a]
            m += 1
        return m

    def exponent(self):
        from math import lcm

        return lcm(*(self.element_order(a) for a in self.elements))

    def is_abelian(self):
        n = self.order
        return all(self.mul[a][b] == self.mul[b][a] for a in range(n) for b in range(a))

    def __repr__(self):
        return f"FiniteGroup(order={self.order})"


def group_axiom_failure(mul, e):
    """Return a description of the first failed group axiom, or ``None``."""
    n = len(mul)
    for a in range(n):
        if mul[e][a] != a or mul[a][e] != a:
            return f"{e} is not a two-sided identity at {a}"
    for a, b, c in product(range(n), repeat=3):
        if mul[mul[a][b]][c] != mul[a][mul[b][c]]:
            return f"not associative at {(a, b, c)}"
    for a in range(n):
        if not any(mul[a][b] == e and mul[b][a] == e for b in range(n)):
            return f"{a} has no inverse"
    return None


class AxiomViolation(NamedTuple):
    law: str
    witness: tuple[int, ...]


LAWS = (
    "add-idempotent",
    "add-commutative",
    "add-associative",
    "mul-associative",
    "left-distributive",
    "right-distributive",
)


def validate_axioms(S: FiniteSemiring) -> list[AxiomViolation]:
    """Check the ai-semiring laws exhaustively.

    Returns one entry per failed law, carrying the lexicographically first
    witness.  An empty list means ``S`` is an ai-semiring.
    """
    add, mul, k = S.add, S.mul, S.order
    found: dict[str, tuple[int, ...]] = {}

    def fail(law, witness):
        found.setdefault(law, witness)

    for a in range(k):
        if add[a][a] != a:
            fail("add-idempotent", (a,))
    for a, b in product(range(k), repeat=2):
        if add[a][b] != add[b][a]:
            fail("add-commutative", (a, b))
    for a, b, c in product(range(k), repeat=3):
        if add[add[a][b]][c] != add[a][add[b][c]]:
            fail("add-associative", (a, b, c))
        if mul[mul[a][b]][c] != mul[a][mul[b][c]]:
            fail("mul-associative", (a, b, c))
        if mul[a][add[b][c]] != add[mul[a][b]][mul[a][c]]:
            fail("left-distributive", (a, b, c))
        if mul[add[b][c]][a] != add[mul[b][a]][mul[c][a]]:
            fail("right-distributive", (a, b, c))
    return [AxiomViolation(law, found[law]) for law in LAWS if law in found]


def is_ai_semiring(S: FiniteSemiring) -> bool:
    return not validate_axioms(S)


# -- subalgebras ------------------------------------------------------------


def _close(table, seed):
    """Least superset of ``seed`` closed under the binary operation ``table``."""
    closed = set(seed)
    frontier = list(closed)
    while frontier:
        new = []
        for x in frontier:
            for y in list(closed):
                for z in (table[x][y], table[y][x]):
                    if z not in closed:
                        closed.add(z)
                        new.append(z)
        frontier = new
    return closed


def _close_both(S, seed):
    closed = set(seed)
    frontier = list(closed)
    while frontier:
        new = []
        for x in frontier:
            for y in list(closed):
                for z in (S.add[x][y], S.mul[x][y], S.mul[y][x]):
                    if z not in closed:
                        closed.add(z)
                        new.append(z)
        frontier = new
    return closed


@dataclass(frozen=True)
class SubsetClosure:
    generators: frozenset[int]
    semigroup_closure: frozenset[int]
    semiring_closure: frozenset[int]


def generated_subalgebras(S: FiniteSemiring, generators) -> SubsetClosure:
    """Subsemigroup and subsemiring generated by ``generators``.

    Also confirms that the subsemiring consists exactly of the finite sums of
    elements of the subsemigroup and that its size is at most
    ``2 ** len(subsemigroup)``; raises :class:`Falsification` otherwise.
    """
    A = frozenset(generators)
    if not A:
        raise ValueError("generator set must be nonempty")
    for a in A:
        if not 0 <= a < S.order:
            raise StructureError(f"generator {a} out of range")
    semigroup = frozenset(_close(S.mul, A))
    semiring = frozenset(_close_both(S, A))
    sums = frozenset(_close(S.add, semigroup))
    if sums != semiring:
        raise Falsification(
            "subsemiring differs from the set of finite sums of the subsemigroup",
            witness=tuple(sorted(sums ^ semiring)),
        )
    if len(semiring) > 2 ** len(semigroup):
        raise Falsification("subsemiring exceeds 2**|subsemigroup|", witness=tuple(sorted(A)))
    return SubsetClosure(A, semigroup, semiring)


def restrict(S: FiniteSemiring, subset) -> tuple[FiniteSemiring, tuple[int, ...]]:
    """Restrict ``S`` to a subset closed under both operations.

    Returns the subalgebra on local indices and the tuple mapping local index
    to the original element.
    """
    elems = tuple(sorted(subset))
    local = {x: i for i, x in enumerate(elems)}
    try:
        add = [[local[S.add[x][y]] for y in elems] for x in elems]
        mul = [[local[S.mul[x][y]] for y in elems] for x in elems]
    except KeyError as exc:
        raise StructureError(f"subset is not closed: produces {exc.args[0]}") from None
    return FiniteSemiring(add, mul, tuple(S.names[x] for x in elems)), elems


# -- relabelling, products, isomorphism ------------------------------------


def permute(S: FiniteSemiring, perm: Sequence[int]) -> FiniteSemiring:
    """Relabelled copy of ``S`` whose element ``i`` is element ``perm[i]`` of ``S``."""
    k = S.order
    if sorted(perm) != list(range(k)):
        raise ValueError("perm must be a permutation of the carrier")
    inv = [0] * k
    for i, p in enumerate(perm):
        inv[p] = i
    add = [[inv[S.add[perm[i]][perm[j]]] for j in range(k)] for i in range(k)]
    mul = [[inv[S.mul[perm[i]][perm[j]]] for j in range(k)] for i in range(k)]
    return FiniteSemiring(add, mul, tuple(S.names[p] for p in perm))


def product_semiring(S: FiniteSemiring, T: FiniteSemiring) -> FiniteSemiring:
    """Direct product; pair ``(s, t)`` has index ``s * |T| + t``."""
    m = T.order
    pairs = list(product(S.elements, T.elements))

    def index(s, t):
        return s * m + t

    add = [[index(S.add[s][u], T.add[t][v]) for (u, v) in pairs] for (s, t) in pairs]
    mul = [[index(S.mul[s][u], T.mul[t][v]) for (u, v) in pairs] for (s, t) in pairs]
    names = tuple(f"({S.names[s]},{T.names[t]})" for s, t in pairs)
    return FiniteSemiring(add, mul, names)


def _invariants(S):
    k, add, mul = S.order, S.add, S.mul
    inv = []
    for a in range(k):
        powers, x = {a}, mul[a][a]
        while x not in powers:
            powers.add(x)
            x = mul[x][a]
        inv.append((
            mul[a][a] == a,
            len(powers),
            sum(add[a][x] == a for x in range(k)),
            sum(add[a][x] == x for x in range(k)),
            sum(mul[a][x] == a for x in range(k)),
            sum(mul[x][a] == a for x in range(k)),
            sum(mul[a][x] == x for x in range(k)),
            sum(mul[x][a] == x for x in range(k)),
            len(set(mul[a])),
            len({mul[x][a] for x in range(k)}),
            len(set(add[a])),
        ))
    return inv


def are_isomorphic(S1: FiniteSemiring, S2: FiniteSemiring) -> Optional[tuple[int, ...]]:
    """Find an isomorphism ``S1 -> S2`` as a tuple ``phi`` with ``phi[a]`` the image of ``a``.

    Backtracking assigns images to ``0, 1, ...`` trying candidates in
    increasing order, so the result is the lexicographically first
    isomorphism.  Returns ``None`` when the algebras are not isomorphic.
    """
    k = S1.order
    if k != S2.order:
        return None
    inv1, inv2 = _invariants(S1), _invariants(S2)
    if sorted(inv1) != sorted(inv2):
        return None
    candidates = [[b for b in range(k) if inv2[b] == inv1[a]] for a in range(k)]
    a1, m1, a2, m2 = S1.add, S1.mul, S2.add, S2.mul
    phi = [-1] * k
    used = [False] * k

    def consistent(a):
        # every pair whose operands and product are all assigned, with ``a`` among them
        for u in range(a + 1):
            for v in range(a + 1):
                for t1, t2 in ((a1, a2), (m1, m2)):
                    w = t1[u][v]
                    if w <= a and (u == a or v == a or w == a) and phi[w] != t2[phi[u]][phi[v]]:
                        return False
        return True

    def extend(a):
        if a == k:
            return True
        for b in candidates[a]:
            if used[b]:
                continue
            phi[a], used[b] = b, True
            if consistent(a) and extend(a + 1):
                return True
            phi[a], used[b] = -1, False
        return False

    if not extend(0):
        return None
    return tuple(phi)

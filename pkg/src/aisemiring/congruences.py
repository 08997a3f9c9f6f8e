"""Congruences of finite semirings.

Principal congruences are generated by closing a seed pair under the basic
translations ``x -> x+c``, ``x -> xc``, ``x -> cx`` with a union-find.  The
full lattice is the closure of the principal congruences under join.
"""
from __future__ import annotations

from itertools import combinations, product
from typing import Optional

from .algebra import FiniteSemiring
from .errors import Falsification, PreconditionError, ResourceLimitError
from .partition import Partition, UnionFind

Congruence = Partition

MAX_ORDER = 64


def compatibility_failure(S: FiniteSemiring, p: Partition):
    """First ``(a, b, c, op)`` with ``a ~ b`` but a translate of the pair split, else ``None``."""
    add, mul, lab = S.add, S.mul, p.labels
    for block in p.blocks():
        a = block[0]
        for b in block[1:]:
            for c in S.elements:
                if lab[add[a][c]] != lab[add[b][c]]:
                    return (a, b, c, "+")
                if lab[mul[a][c]] != lab[mul[b][c]]:
                    return (a, b, c, "*r")
                if lab[mul[c][a]] != lab[mul[c][b]]:
                    return (a, b, c, "*l")
    return None


def is_congruence(S: FiniteSemiring, p: Partition) -> bool:
    return p.size == S.order and compatibility_failure(S, p) is None


def _close(S, uf, queue):
    add, mul, k = S.add, S.mul, S.order
    while queue:
        a, b = queue.pop()
        ra, rb, la, lb = add[a], add[b], mul[a], mul[b]
        for c in range(k):
            for x, y in ((ra[c], rb[c]), (la[c], lb[c]), (mul[c][a], mul[c][b])):
                if uf.union(x, y):
                    queue.append((x, y))
    return Partition(uf.labels())


def principal_congruence(S: FiniteSemiring, a: int, b: int) -> Congruence:
    """Least congruence identifying ``a`` and ``b``."""
    uf = UnionFind(S.order)
    queue = [(a, b)] if uf.union(a, b) else []
    return _close(S, uf, queue)


def congruence_join(S: FiniteSemiring, p: Partition, q: Partition) -> Congruence:
    """Join in the congruence lattice: equivalence join, then translation closure."""
    uf = UnionFind(S.order)
    queue = []
    for part in (p, q):
        for block in part.blocks():
            for x in block[1:]:
                if uf.union(block[0], x):
                    queue.append((block[0], x))
    return _close(S, uf, queue)


def generated_congruence(S: FiniteSemiring, pairs) -> Congruence:
    uf = UnionFind(S.order)
    queue = [(a, b) for a, b in pairs if uf.union(a, b)]
    return _close(S, uf, queue)


def _check_size(S):
    if S.order > MAX_ORDER:
        raise ResourceLimitError(f"congruence lattice limited to order <= {MAX_ORDER}, got {S.order}")


def principal_congruences(S: FiniteSemiring) -> dict[tuple[int, int], Congruence]:
    _check_size(S)
    return {(a, b): principal_congruence(S, a, b) for a, b in combinations(S.elements, 2)}


def all_congruences(S: FiniteSemiring) -> list[Congruence]:
    """Every congruence of ``S``, sorted by decreasing number of blocks.

    Ties are broken by the label tuple, so the identity comes first and the
    total congruence last.
    """
    _check_size(S)
    k = S.order
    principals = []
    for c in principal_congruences(S).values():
        if c not in principals:
            principals.append(c)
    found = [Partition.identity(k)]
    seen = set(found)
    for c in principals:
        if c not in seen:
            seen.add(c)
            found.append(c)
    i = 1
    while i < len(found):
        cur = found[i]
        for p in principals:
            if p <= cur:
                continue
            j = congruence_join(S, cur, p)
            if j not in seen:
                seen.add(j)
                found.append(j)
        i += 1
    return sorted(found, key=lambda c: (-c.num_blocks, c.labels))


def hasse_covers(congruences: list[Congruence]) -> list[tuple[int, int]]:
    """Pairs ``(i, j)`` of list indices with ``congruences[i]`` covered by ``congruences[j]``."""
    out = []
    for i, lo in enumerate(congruences):
        for j, hi in enumerate(congruences):
            if lo < hi and not any(lo < mid < hi for mid in congruences):
                out.append((i, j))
    return out


def monolith(S: FiniteSemiring) -> Optional[Congruence]:
    """Least non-identity congruence, or ``None`` when it does not exist."""
    if S.order < 2:
        raise PreconditionError("monolith needs at least two elements")
    result = None
    for c in principal_congruences(S).values():
        result = c if result is None else result.meet(c)
        if result.is_identity():
            return None
    return result


def is_subdirectly_irreducible(S: FiniteSemiring) -> bool:
    return monolith(S) is not None


def is_congruence_simple(S: FiniteSemiring) -> bool:
    """Exactly two congruences, identity and total."""
    if S.order < 2:
        raise PreconditionError("simplicity needs at least two elements")
    # every nontrivial Cg(a, b) must already be total
    return all(c.is_total() for c in principal_congruences(S).values())


def extend_idempotent_congruence(S: FiniteSemiring, rho: Congruence, n: int) -> Congruence:
    """Extend a congruence on the idempotent subsemiring to all of ``S``.

    ``rho`` is a partition of E(S) in its local indexing (element ``i`` of
    ``rho`` is the ``i``-th smallest idempotent).  ``a`` and ``b`` are related
    when some idempotent ``e`` has ``ea = eb``, ``e ~ a^{n-1}`` and
    ``a^{n-1} ~ b^{n-1}`` under ``rho``.

    The relation is built pointwise and then checked to be an equivalence
    and a congruence restricting to ``rho``; any failure is raised as a
    :class:`Falsification` with the offending pair or triple.
    """
    from .structure import idempotents
    from .terms import m_variety, member_of

    if not member_of(S, m_variety(n)):
        raise PreconditionError(f"algebra is not in M_{n}")
    idem = idempotents(S, n)
    E = idem.elements
    if rho.size != len(E):
        raise PreconditionError(f"rho has {rho.size} points but E(S) has {len(E)}")
    if not is_congruence(idem.subsemiring, rho):
        raise PreconditionError(f"rho is not a congruence on E(S): {compatibility_failure(idem.subsemiring, rho)}")

    local = {e: i for i, e in enumerate(E)}
    k, mul = S.order, S.mul

    def rel(e, f):
        return rho.related(local[e], local[f])

    top = [S.power(a, n - 1) for a in S.elements]
    tau = [[False] * k for _ in range(k)]
    for a, b in product(S.elements, repeat=2):
        if not rel(top[a], top[b]):
            continue
        tau[a][b] = any(mul[e][a] == mul[e][b] and rel(e, top[a]) for e in E)

    for a in S.elements:
        if not tau[a][a]:
            raise Falsification("extended relation is not reflexive", witness=(a,))
    for a, b in product(S.elements, repeat=2):
        if tau[a][b] and not tau[b][a]:
            raise Falsification("extended relation is not symmetric", witness=(a, b))
    for a, b, c in product(S.elements, repeat=3):
        if tau[a][b] and tau[b][c] and not tau[a][c]:
            raise Falsification("extended relation is not transitive", witness=(a, b, c))

    result = Partition.from_pairs(k, [(a, b) for a, b in product(S.elements, repeat=2) if tau[a][b]])
    bad = compatibility_failure(S, result)
    if bad:
        raise Falsification("extended relation is not compatible with the operations", witness=bad)
    if result.restrict(E) != rho:
        raise Falsification("extended congruence does not restrict to rho", witness=str(result))
    return result

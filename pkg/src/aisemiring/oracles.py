"""Brute-force reference computations.

Nothing here imports the congruence engine, the isomorphism search or the
enumerator; these functions exist so that those can be checked against an
independent route.
"""
from __future__ import annotations

from itertools import permutations, product

from .errors import ResourceLimitError

ORACLE_MAX_ORDER = 8


def set_partitions(k: int):
    """All partitions of ``range(k)`` as restricted growth label tuples."""
    if k == 0:
        yield ()
        return
    labels = [0] * k

    def rec(i, top):
        if i == k:
            yield tuple(labels)
            return
        for v in range(top + 2):
            labels[i] = v
            yield from rec(i + 1, max(top, v))

    labels[0] = 0
    yield from rec(1, 0)


def _compatible(add, mul, labels):
    k = len(labels)
    for a in range(k):
        for b in range(a + 1, k):
            if labels[a] != labels[b]:
                continue
            for c in range(k):
                if labels[add[a][c]] != labels[add[b][c]]:
                    return False
                if labels[mul[a][c]] != labels[mul[b][c]]:
                    return False
                if labels[mul[c][a]] != labels[mul[c][b]]:
                    return False
    return True


def brute_force_congruences(add, mul) -> set[tuple[int, ...]]:
    """Label tuples of every compatible partition, by scanning all partitions."""
    k = len(add)
    if k > ORACLE_MAX_ORDER:
        raise ResourceLimitError(f"partition scan limited to order <= {ORACLE_MAX_ORDER}")
    return {labels for labels in set_partitions(k) if _compatible(add, mul, labels)}


def _laws_hold(add, mul, k):
    r = range(k)
    for a in r:
        if add[a][a] != a:
            return False
    for a, b in product(r, repeat=2):
        if add[a][b] != add[b][a]:
            return False
    for a, b, c in product(r, repeat=3):
        if add[add[a][b]][c] != add[a][add[b][c]]:
            return False
        if mul[mul[a][b]][c] != mul[a][mul[b][c]]:
            return False
        if mul[a][add[b][c]] != add[mul[a][b]][mul[a][c]]:
            return False
        if mul[add[b][c]][a] != add[mul[b][a]][mul[c][a]]:
            return False
    return True


def relabel(add, mul, perm):
    """Tables of the copy whose element ``i`` is old element ``perm[i]``."""
    k = len(perm)
    inv = [0] * k
    for i, p in enumerate(perm):
        inv[p] = i
    a2 = tuple(tuple(inv[add[perm[i]][perm[j]]] for j in range(k)) for i in range(k))
    m2 = tuple(tuple(inv[mul[perm[i]][perm[j]]] for j in range(k)) for i in range(k))
    return a2, m2


def brute_force_isomorphic(s1, s2) -> bool:
    """Try every bijection.  ``s1``/``s2`` are ``(add, mul)`` table pairs."""
    k = len(s1[0])
    if k != len(s2[0]):
        return False
    t2 = (tuple(map(tuple, s2[0])), tuple(map(tuple, s2[1])))
    return any(relabel(s1[0], s1[1], p) == t2 for p in permutations(range(k)))


def full_scan(k: int, holds) -> list[tuple]:
    """Every ai-semiring on ``k`` points satisfying ``holds(add, mul)``, one per iso class.

    Scans all ``k**(k*k)`` squared table pairs, so only practical for ``k <= 2``.
    """
    if k > 2:
        raise ResourceLimitError("full table scan limited to order <= 2")
    cells = k * k
    perms = list(permutations(range(k)))
    classes = []
    for av in product(range(k), repeat=cells):
        add = tuple(tuple(av[i * k:(i + 1) * k]) for i in range(k))
        for mv in product(range(k), repeat=cells):
            mul = tuple(tuple(mv[i * k:(i + 1) * k]) for i in range(k))
            if not _laws_hold(add, mul, k) or not holds(add, mul):
                continue
            key = min(relabel(add, mul, p) for p in perms)
            if key not in classes:
                classes.append(key)
    return sorted(classes)


def power_law(n: int):
    """``holds`` predicate for ``x^n = x`` written directly on tables."""

    def holds(add, mul):
        for a in range(len(add)):
            r = a
            for _ in range(n - 1):
                r = mul[r][a]
            if r != a:
                return False
        return True

    return holds


def defining_law(n: int):
    """``holds`` predicate for ``x^n = x`` and ``x^{n-1} + y^{n-1} = x^{n-1} y^{n-1}``."""
    burnside = power_law(n)

    def holds(add, mul):
        if not burnside(add, mul):
            return False
        k = len(add)
        top = []
        for a in range(k):
            r = a
            for _ in range(n - 2):
                r = mul[r][a]
            top.append(r)
        return all(add[top[a]][top[b]] == mul[top[a]][top[b]] for a in range(k) for b in range(k))

    return holds

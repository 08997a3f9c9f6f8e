"""Named algebras: flat extensions, cyclic and product groups, Q_8, the
p^3-element groups G_p, and Sylow subgroup reports."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .algebra import FiniteGroup, FiniteSemiring
from .errors import Falsification, ResourceLimitError


def boolean_lattice() -> FiniteSemiring:
    """The two-element distributive lattice: ``+`` is max and ``*`` is min."""
    return FiniteSemiring([[0, 1], [1, 1]], [[0, 0], [0, 1]])


def flat_extension(G: FiniteGroup) -> FiniteSemiring:
    """G with an absorbing zero appended at the last index; ``a + b = a`` if
    ``a == b`` else ``0``.

    The result is checked to lie in M_{n} for ``n = exp(G) + 1``.
    """
    from .terms import m_variety, member_of

    m = G.order
    z = m
    k = m + 1
    add = [[a if a == b else z for b in range(k)] for a in range(k)]
    mul = [[z if a == z or b == z else G.mul[a][b] for b in range(k)] for a in range(k)]
    S = FiniteSemiring(add, mul, G.names + ("0",))
    n = G.exponent() + 1
    if not member_of(S, m_variety(n)):
        raise Falsification(f"flat extension is not in M_{n}")
    return S


def cyclic_group(m: int) -> FiniteGroup:
    if m < 1:
        raise ValueError("cyclic group order must be positive")
    names = ("e",) if m == 1 else tuple("e" if i == 0 else f"g{i}" for i in range(m))
    return FiniteGroup([[(i + j) % m for j in range(m)] for i in range(m)], 0, names)


def direct_product(G: FiniteGroup, H: FiniteGroup) -> FiniteGroup:
    """Pair ``(g, h)`` has index ``g * |H| + h``."""
    n = H.order
    pairs = list(product(G.elements, H.elements))
    table = [[G.mul[g][u] * n + H.mul[h][v] for (u, v) in pairs] for (g, h) in pairs]
    names = tuple(f"({G.names[g]},{H.names[h]})" for g, h in pairs)
    return FiniteGroup(table, G.identity * n + H.identity, names)


# unit quaternion products: _UNIT[x][y] = (sign, unit) with units 1, i, j, k
_UNIT = (
    ((1, 0), (1, 1), (1, 2), (1, 3)),
    ((1, 1), (-1, 0), (1, 3), (-1, 2)),
    ((1, 2), (-1, 3), (-1, 0), (1, 1)),
    ((1, 3), (1, 2), (-1, 1), (-1, 0)),
)
Q8_NAMES = ("1", "-1", "i", "-i", "j", "-j", "k", "-k")


def quaternion_group() -> FiniteGroup:
    """Q_8 on ``1, -1, i, -i, j, -j, k, -k`` (indices 0..7)."""

    def split(x):
        return (1 if x % 2 == 0 else -1), x // 2

    table = []
    for a in range(8):
        row = []
        for b in range(8):
            (sa, ua), (sb, ub) = split(a), split(b)
            s, u = _UNIT[ua][ub]
            row.append(2 * u + (0 if s * sa * sb == 1 else 1))
        table.append(row)
    Q = FiniteGroup(table, 0, Q8_NAMES)
    if Q.is_abelian() or Q.exponent() != 4:
        raise Falsification("quaternion table is not a non-abelian group of exponent 4")
    return Q


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def heisenberg_index(p, i, j, k):
    return (i * p + j) * p + k


def heisenberg_group(p: int) -> FiniteGroup:
    """The non-abelian group of order ``p**3`` and exponent ``p``.

    Element ``a^i b^j c^k`` has index ``(i*p + j)*p + k`` and
    ``a^i b^j c^k * a^m b^n c^r = a^{i+m} b^{j+km+n} c^{k+r}`` (mod p).
    """
    if p % 2 == 0 or not is_prime(p):
        raise ValueError(f"p must be an odd prime, got {p}")
    triples = list(product(range(p), repeat=3))
    table = [
        [heisenberg_index(p, (i + m) % p, (j + k * m + n) % p, (k + r) % p) for (m, n, r) in triples]
        for (i, j, k) in triples
    ]
    names = tuple(f"a{i}b{j}c{k}" for i, j, k in triples)
    G = FiniteGroup(table, 0, names)
    if G.is_abelian() or G.exponent() != p:
        raise Falsification(f"G_{p} table is not non-abelian of exponent {p}")
    return G


def center(G: FiniteGroup) -> tuple[int, ...]:
    return tuple(z for z in G.elements if all(G.mul[z][x] == G.mul[x][z] for x in G.elements))


# -- Sylow subgroups -----------------------------------------------------------

SYLOW_BUDGET = 64


def prime_factors(m):
    out, d = {}, 2
    while d * d <= m:
        while m % d == 0:
            out[d] = out.get(d, 0) + 1
            m //= d
        d += 1
    if m > 1:
        out[m] = out.get(m, 0) + 1
    return out


def subgroup_generated(G: FiniteGroup, gens) -> frozenset[int]:
    H = {G.identity} | set(gens)
    frontier = list(H)
    while frontier:
        new = []
        for x in frontier:
            for y in list(H):
                for z in (G.mul[x][y], G.mul[y][x]):
                    if z not in H:
                        H.add(z)
                        new.append(z)
        frontier = new
    return frozenset(H)


def sylow_subgroup(G: FiniteGroup, q: int) -> frozenset[int]:
    """One Sylow ``q``-subgroup, grown greedily from the identity.

    A proper ``q``-subgroup is always normalised by some ``q``-element outside
    it, so adding any ``q``-element that keeps the order a power of ``q``
    never gets stuck below the Sylow order.
    """
    target = q ** prime_factors(G.order).get(q, 0)
    q_elements = [g for g in G.elements if _is_power_of(G.element_order(g), q)]
    H = frozenset({G.identity})
    while len(H) < target:
        for g in q_elements:
            if g in H:
                continue
            bigger = subgroup_generated(G, H | {g})
            if _is_power_of(len(bigger), q):
                H = bigger
                break
        else:
            raise Falsification(f"greedy search stalled below the Sylow {q}-order", witness=tuple(sorted(H)))
    return H


def _is_power_of(m, q):
    while m % q == 0:
        m //= q
    return m == 1


@dataclass(frozen=True)
class SylowEntry:
    prime: int
    subgroup: tuple[int, ...]
    abelian: bool


@dataclass(frozen=True)
class SylowReport:
    entries: tuple[SylowEntry, ...]

    @property
    def predicted_nonfinitely_based(self) -> bool:
        """Prediction label only: some Sylow subgroup is non-abelian."""
        return any(not e.abelian for e in self.entries)


def sylow_abelian_report(G: FiniteGroup) -> SylowReport:
    if G.order > SYLOW_BUDGET:
        raise ResourceLimitError(f"Sylow search limited to groups of order <= {SYLOW_BUDGET}")
    entries = []
    for q in sorted(prime_factors(G.order)):
        H = sorted(sylow_subgroup(G, q))
        abelian = all(G.mul[a][b] == G.mul[b][a] for a in H for b in H)
        entries.append(SylowEntry(q, tuple(H), abelian))
    return SylowReport(tuple(entries))


# -- builtin expressions --------------------------------------------------------


def parse_builtin(expr: str):
    """Build an algebra from ``zn:<m>``, ``q8``, ``gp:<p>``, ``b2``,
    ``flat(<group>)`` or ``prod(<g>,<g>)``."""
    text = expr.replace(" ", "")
    value, rest = _parse_expr(text, 0)
    if rest != len(text):
        raise ValueError(f"trailing input in {expr!r}")
    return value


def _parse_expr(s, i):
    for head in ("flat(", "prod("):
        if s.startswith(head, i):
            i += len(head)
            first, i = _parse_expr(s, i)
            args = [first]
            while i < len(s) and s[i] == ",":
                second, i = _parse_expr(s, i + 1)
                args.append(second)
            if i >= len(s) or s[i] != ")":
                raise ValueError(f"missing ')' in {s!r}")
            i += 1
            if any(not isinstance(a, FiniteGroup) for a in args):
                raise ValueError(f"{head[:-1]} takes groups")
            if head == "flat(":
                if len(args) != 1:
                    raise ValueError("flat() takes one group")
                return flat_extension(args[0]), i
            if len(args) != 2:
                raise ValueError("prod() takes two groups")
            return direct_product(*args), i
    j = i
    while j < len(s) and s[j] not in ",()":
        j += 1
    atom = s[i:j]
    if atom == "q8":
        return quaternion_group(), j
    if atom == "b2":
        return boolean_lattice(), j
    if atom.startswith("zn:"):
        return cyclic_group(int(atom[3:])), j
    if atom.startswith("gp:"):
        return heisenberg_group(int(atom[3:])), j
    raise ValueError(f"unknown builtin {atom!r}")

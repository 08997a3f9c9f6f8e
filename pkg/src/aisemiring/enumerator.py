"""Catalogs of small ai-semirings up to isomorphism.

The addition is fixed first (semilattices up to relabelling), then every
associative, two-sided distributive multiplication is searched by
backtracking.  Two algebras sharing an addition table can only be
isomorphic through an automorphism of that semilattice, so each iso class
is keyed by its least multiplication table under those automorphisms.
"""
from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import permutations, product
from pathlib import Path

from .algebra import FiniteSemiring, are_isomorphic
from .errors import ResourceLimitError
from .terms import VarietySpec, member_of, preset_key

log = logging.getLogger(__name__)

MAX_ORDER = 4


def _relabel(table, perm, inv):
    k = len(perm)
    return tuple(tuple(inv[table[perm[i]][perm[j]]] for j in range(k)) for i in range(k))


def _inverse(perm):
    inv = [0] * len(perm)
    for i, p in enumerate(perm):
        inv[p] = i
    return inv


def semilattices(k: int) -> list[tuple[tuple[int, ...], ...]]:
    """Semilattice tables on ``k`` points, one per iso class, each the
    lexicographically least of its relabellings; sorted."""
    cells = [(i, j) for i in range(k) for j in range(i + 1, k)]
    perms = [(p, _inverse(p)) for p in permutations(range(k))]
    found = set()
    for values in product(range(k), repeat=len(cells)):
        t = [[i if i == j else -1 for j in range(k)] for i in range(k)]
        for (i, j), v in zip(cells, values):
            t[i][j] = t[j][i] = v
        if any(t[t[a][b]][c] != t[a][t[b][c]] for a, b, c in product(range(k), repeat=3)):
            continue
        table = tuple(map(tuple, t))
        found.add(min(_relabel(table, p, inv) for p, inv in perms))
    return sorted(found)


def multiplications(add) -> list[tuple[tuple[int, ...], ...]]:
    """All associative multiplications distributing over ``add`` on both sides."""
    k = len(add)
    mul = [[-1] * k for _ in range(k)]
    cells = [(i, j) for i in range(k) for j in range(k)]
    out = []
    rng = range(k)

    def ok(i, j):
        # only laws that mention the cell just filled can newly fail
        for a, b, c in product(rng, repeat=3):
            if i not in (a, b, c) and j not in (a, b, c):
                continue
            ab = mul[a][b]
            if ab >= 0:
                x = mul[ab][c]
                bc = mul[b][c]
                if x >= 0 and bc >= 0:
                    y = mul[a][bc]
                    if y >= 0 and x != y:
                        return False
            l = mul[a][add[b][c]]
            ac = mul[a][c]
            if l >= 0 and ab >= 0 and ac >= 0 and l != add[ab][ac]:
                return False
            r = mul[add[b][c]][a]
            ba, ca = mul[b][a], mul[c][a]
            if r >= 0 and ba >= 0 and ca >= 0 and r != add[ba][ca]:
                return False
        return True

    def search(n):
        if n == len(cells):
            out.append(tuple(map(tuple, mul)))
            return
        i, j = cells[n]
        for v in rng:
            mul[i][j] = v
            if ok(i, j):
                search(n + 1)
        mul[i][j] = -1

    search(0)
    return out


def _automorphisms(add):
    k = len(add)
    out = []
    for p in permutations(range(k)):
        inv = _inverse(p)
        if _relabel(add, p, inv) == add:
            out.append((p, inv))
    return out


def _classes_for(add, V):
    autos = _automorphisms(add)
    seen = set()
    for mul in multiplications(add):
        S = FiniteSemiring(add, mul)
        if not member_of(S, V):
            continue
        key = min(_relabel(mul, p, inv) for p, inv in autos)
        seen.add(key)
    return [(add, mul) for mul in sorted(seen)]


def enumerate_algebras(order: int, V: VarietySpec, workers: int = 1) -> list[FiniteSemiring]:
    """Every ai-semiring of the given order in ``V``, one per iso class.

    Sorted by (addition table, multiplication table).
    """
    if order > MAX_ORDER:
        raise ResourceLimitError(f"enumeration limited to order <= {MAX_ORDER}")
    if order < 1:
        raise ValueError("order must be positive")
    adds = semilattices(order)
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            chunks = list(pool.map(_classes_for, adds, [V] * len(adds)))
    else:
        chunks = [_classes_for(a, V) for a in adds]
    pairs = sorted(p for chunk in chunks for p in chunk)
    log.info("order %d in %s: %d algebras over %d semilattices", order, V.name, len(pairs), len(adds))
    return [FiniteSemiring(a, m) for a, m in pairs]


@dataclass
class Catalog:
    variety: VarietySpec
    members: dict[int, list[FiniteSemiring]] = field(default_factory=dict)

    def all(self) -> list[FiniteSemiring]:
        return [S for k in sorted(self.members) for S in self.members[k]]

    def counts(self) -> dict[int, int]:
        return {k: len(v) for k, v in sorted(self.members.items())}

    def filename(self, k: int, index: int) -> str:
        return f"{preset_key(self.variety)}_k{k}_{index}.alg"


def build_catalog(V: VarietySpec, max_order: int, workers: int = 1) -> Catalog:
    return Catalog(V, {k: enumerate_algebras(k, V, workers) for k in range(1, max_order + 1)})


def write_catalog(catalog: Catalog, outdir) -> list[Path]:
    from .textformat import dump

    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    paths = []
    for k, members in sorted(catalog.members.items()):
        for i, S in enumerate(members):
            path = outdir / catalog.filename(k, i)
            dump(S, path, comment=f"{catalog.variety.name}, order {k}, entry {i}")
            paths.append(path)
    return paths


def read_catalog(V: VarietySpec, indir) -> Catalog:
    from .textformat import load

    cat = Catalog(V)
    prefix = preset_key(V) + "_k"
    for path in sorted(Path(indir).glob(prefix + "*.alg")):
        k_str, i_str = path.stem[len(prefix):].split("_")
        cat.members.setdefault(int(k_str), []).append((int(i_str), load(path)))
    cat.members = {k: [S for _, S in sorted(v)] for k, v in cat.members.items()}
    return cat


# -- whole-catalog check of the SI characterisation ----------------------------


@dataclass
class SIReport:
    """Outcome of checking SI <=> simple <=> 0-group over a catalog.

    Counts are computed by this package, not taken from the literature.
    """

    checked: int = 0
    si_count: int = 0
    violators: list[tuple[FiniteSemiring, str]] = field(default_factory=list)
    si_by_order: dict[int, int] = field(default_factory=dict)

    @property
    def ok(self):
        return not self.violators


def verify_si_characterisation(members, n: int) -> SIReport:
    """Check each member of M_n (order >= 2) for SI <=> simple <=> 0-group,
    and that every SI member is a flat extension of its group part."""
    from .congruences import is_congruence_simple, is_subdirectly_irreducible
    from .constructions import flat_extension
    from .structure import group_part, is_zero_group
    from .terms import m_variety

    V = m_variety(n)
    report = SIReport()
    for S in members:
        if S.order < 2:
            continue
        if not member_of(S, V):
            report.violators.append((S, f"not a member of {V.name}"))
            continue
        report.checked += 1
        si = is_subdirectly_irreducible(S)
        simple = is_congruence_simple(S)
        zg = is_zero_group(S)
        if not si == simple == (zg is not None):
            report.violators.append((S, f"SI={si} simple={simple} 0-group={zg is not None}"))
            continue
        if si:
            report.si_count += 1
            report.si_by_order[S.order] = report.si_by_order.get(S.order, 0) + 1
            if are_isomorphic(S, flat_extension(group_part(S, zg))) is None:
                report.violators.append((S, "SI but not isomorphic to the flat extension of its group"))
    return report

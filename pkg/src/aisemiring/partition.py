"""Canonical set partitions of ``0..k-1``.

Blocks are numbered in order of their least element, so two partitions are
equal exactly when their label tuples are equal.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


def canonical_labels(labels: Sequence) -> tuple[int, ...]:
    seen: dict = {}
    return tuple(seen.setdefault(x, len(seen)) for x in labels)


class UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, x):
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, x, y):
        """Merge the classes of ``x`` and ``y``; return False if already merged."""
        x, y = self.find(x), self.find(y)
        if x == y:
            return False
        if x < y:
            x, y = y, x
        self.parent[x] = y
        return True

    def labels(self):
        return canonical_labels([self.find(x) for x in range(len(self.parent))])


@dataclass(frozen=True)
class Partition:
    labels: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "labels", canonical_labels(self.labels))

    @classmethod
    def identity(cls, k):
        return cls(tuple(range(k)))

    @classmethod
    def total(cls, k):
        return cls((0,) * k)

    @classmethod
    def from_blocks(cls, blocks: Iterable[Iterable[int]], k: int | None = None):
        blocks = [sorted(b) for b in blocks]
        if k is None:
            k = sum(len(b) for b in blocks)
        labels = [-1] * k
        for i, block in enumerate(blocks):
            for x in block:
                if labels[x] != -1:
                    raise ValueError(f"element {x} appears in two blocks")
                labels[x] = i
        if -1 in labels:
            raise ValueError(f"element {labels.index(-1)} is in no block")
        return cls(tuple(labels))

    @classmethod
    def from_pairs(cls, k, pairs):
        uf = UnionFind(k)
        for a, b in pairs:
            uf.union(a, b)
        return cls(uf.labels())

    @property
    def size(self):
        return len(self.labels)

    @property
    def num_blocks(self):
        return max(self.labels) + 1

    def blocks(self) -> list[tuple[int, ...]]:
        out: list[list[int]] = [[] for _ in range(self.num_blocks)]
        for x, b in enumerate(self.labels):
            out[b].append(x)
        return [tuple(b) for b in out]

    def related(self, a, b):
        return self.labels[a] == self.labels[b]

    def is_identity(self):
        return self.num_blocks == self.size

    def is_total(self):
        return self.num_blocks == 1

    def pairs(self):
        """All related pairs ``(a, b)`` including the diagonal."""
        return [(a, b) for block in self.blocks() for a in block for b in block]

    def __le__(self, other):
        """Refinement: every block of ``self`` lies inside a block of ``other``."""
        if isinstance(other, Partition):
            ol = other.labels
            rep = {}
            return all(rep.setdefault(b, ol[x]) == ol[x] for x, b in enumerate(self.labels))
        return NotImplemented

    def __lt__(self, other):
        if isinstance(other, Partition):
            return self != other and self <= other
        return NotImplemented

    def __ge__(self, other):
        if isinstance(other, Partition):
            return other <= self
        return NotImplemented

    def __gt__(self, other):
        if isinstance(other, Partition):
            return other < self
        return NotImplemented

    def meet(self, other):
        return Partition(tuple(zip(self.labels, other.labels)))

    def join(self, other):
        uf = UnionFind(self.size)
        for p in (self, other):
            for block in p.blocks():
                for x in block[1:]:
                    uf.union(block[0], x)
        return Partition(uf.labels())

    def restrict(self, subset: Sequence[int]):
        """Partition induced on ``subset``, relabelled to local indices."""
        return Partition(tuple(self.labels[x] for x in subset))

    def __str__(self):
        return "[" + ",".join("{" + ",".join(map(str, b)) + "}" for b in self.blocks()) + "]"


def parse_partition(text: str, k: int | None = None) -> Partition:
    """Parse ``[{0,2},{1},{3}]``.  Elements missing from the text become singletons when ``k`` is given."""
    body = text.strip()
    if not (body.startswith("[") and body.endswith("]")):
        raise ValueError(f"partition must look like [{{0,1}},{{2}}], got {text!r}")
    blocks = []
    for chunk in body[1:-1].split("}"):
        chunk = chunk.strip().lstrip(",").strip()
        if not chunk:
            continue
        if not chunk.startswith("{"):
            raise ValueError(f"bad block near {chunk!r}")
        inner = chunk[1:].strip()
        blocks.append([int(x) for x in inner.split(",") if x.strip()])
    if k is not None:
        covered = {x for b in blocks for x in b}
        blocks += [[x] for x in range(k) if x not in covered]
    return Partition.from_blocks(blocks, k)

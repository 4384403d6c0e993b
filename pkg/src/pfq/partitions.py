"""Strict partitions, shifted diagrams and border strips."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import NotContained


@dataclass(frozen=True, order=False)
class StrictPartition:
    parts: tuple[int, ...] = ()

    def __post_init__(self):
        p = tuple(int(x) for x in self.parts)
        object.__setattr__(self, "parts", p)
        if any(x <= 0 for x in p):
            raise ValueError(f"parts must be positive: {p}")
        if any(a <= b for a, b in zip(p, p[1:])):
            raise ValueError(f"parts must strictly decrease: {p}")

    @classmethod
    def parse(cls, text: str) -> StrictPartition:
        text = text.strip().strip("()[]")
        if not text:
            return cls(())
        return cls(tuple(int(t) for t in text.split(",") if t.strip()))

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, k: int) -> int:
        """0-based part access, zero beyond the length."""
        return self.parts[k] if k < len(self.parts) else 0

    @property
    def length(self) -> int:
        return len(self.parts)

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def padded(self) -> tuple[int, ...]:
        return pad_zero(self)

    def cells(self) -> frozenset[tuple[int, int]]:
        return shifted_diagram(self)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"


def as_partition(x) -> StrictPartition:
    if isinstance(x, StrictPartition):
        return x
    if isinstance(x, str):
        return StrictPartition.parse(x)
    return StrictPartition(tuple(x))


def pad_zero(lam) -> tuple[int, ...]:
    """lambda with one zero part appended."""
    return tuple(as_partition(lam).parts) + (0,)


def shifted_diagram(lam) -> frozenset[tuple[int, int]]:
    """Cells (i, j), 1-based, with i <= j <= lambda_i + i - 1."""
    lam = as_partition(lam)
    return frozenset((i, j) for i, part in enumerate(lam.parts, 1)
                     for j in range(i, part + i))


def contains(lam, mu) -> bool:
    lam, mu = as_partition(lam), as_partition(mu)
    if mu.length > lam.length:
        return False
    return all(m <= l for l, m in zip(lam.parts, mu.parts))


def enumerate_strict(max_weight: int, max_length: int) -> list[StrictPartition]:
    """Strict partitions by weight, then in decreasing lexicographic order."""
    out: list[StrictPartition] = []
    for w in range(max_weight + 1):
        out.extend(StrictPartition(p) for p in _strict_of_weight(w, w, max_length))
    return out


def strict_of_weight(w: int, max_length: int | None = None) -> list[StrictPartition]:
    return [StrictPartition(p) for p in _strict_of_weight(w, w, w if max_length is None else max_length)]


def _strict_of_weight(w: int, largest: int, max_length: int):
    if w == 0:
        yield ()
        return
    if max_length == 0:
        return
    for first in range(min(w, largest), 0, -1):
        for rest in _strict_of_weight(w - first, first - 1, max_length - 1):
            yield (first,) + rest


@lru_cache(maxsize=None)
def count_strict(w: int, max_length: int, largest: int | None = None) -> int:
    """Number of strict partitions of exactly w with bounded length and part size,
    by the recurrence on whether the largest allowed part is used."""
    if largest is None:
        largest = w
    if w == 0:
        return 1
    if largest <= 0 or max_length <= 0 or w < 0:
        return 0
    return count_strict(w, max_length, largest - 1) + \
        count_strict(w - largest, max_length - 1, largest - 1)


class HasBlock:
    """Marker returned by strip_decompose when the skew diagram has a 2x2 block."""

    def __repr__(self):
        return "HasBlock"

    def __eq__(self, other):
        return isinstance(other, HasBlock)

    def __hash__(self):
        return hash("HasBlock")


HAS_BLOCK = HasBlock()


@dataclass(frozen=True)
class StripDecomposition:
    """Border strips as 1-based inclusive row ranges plus rows with lambda_k = mu_k."""

    strips: tuple[tuple[int, int], ...]
    fixed: tuple[int, ...]


def has_block(lam, mu) -> bool:
    """True when lambda_{k+1} > mu_k for some k, with mu padded by zeros.

    For rows of mu this is exactly a 2x2 block of S(lambda/mu); below mu it
    flags l(lambda) >= l(mu) + 2.
    """
    lam, mu = as_partition(lam), as_partition(mu)
    return any(lam[k + 1] > mu[k] for k in range(lam.length))


def strip_decompose(lam, mu) -> StripDecomposition | HasBlock:
    lam, mu = as_partition(lam), as_partition(mu)
    if not contains(lam, mu):
        raise NotContained(f"{lam} does not contain {mu}")
    if has_block(lam, mu):
        return HAS_BLOCK
    strips: list[tuple[int, int]] = []
    fixed: list[int] = []
    start = None
    for k in range(lam.length):
        if lam[k] == mu[k]:
            fixed.append(k + 1)
            continue
        if start is not None and strips_linked(lam, mu, k - 1):
            strips[-1] = (strips[-1][0], k + 1)
        else:
            strips.append((k + 1, k + 1))
        start = k
    return StripDecomposition(tuple(strips), tuple(fixed))


def strips_linked(lam: StrictPartition, mu: StrictPartition, k: int) -> bool:
    """Rows k and k+1 (0-based) of a block-free skew diagram share an edge."""
    return lam[k] > mu[k] and lam[k + 1] > mu[k + 1] and mu[k] == lam[k + 1]


def skew_cells(lam, mu) -> frozenset[tuple[int, int]]:
    return shifted_diagram(lam) - shifted_diagram(mu)


def connected_components(cells: Iterable[tuple[int, int]]) -> list[frozenset]:
    todo = set(cells)
    comps = []
    while todo:
        seed = min(todo)
        stack = [seed]
        comp = {seed}
        todo.discard(seed)
        while stack:
            i, j = stack.pop()
            for nb in ((i + 1, j), (i - 1, j), (i, j + 1), (i, j - 1)):
                if nb in todo:
                    todo.discard(nb)
                    comp.add(nb)
                    stack.append(nb)
        comps.append(frozenset(comp))
    return sorted(comps, key=min)


def cells_have_square(cells: Iterable[tuple[int, int]]) -> bool:
    s = set(cells)
    return any((i + 1, j) in s and (i, j + 1) in s and (i + 1, j + 1) in s for i, j in s)


def strip_cells(lam, mu, rows: tuple[int, int]) -> frozenset:
    lo, hi = rows
    return frozenset(c for c in skew_cells(lam, mu) if lo <= c[0] <= hi)


def parse_parts(text: str | Sequence[int]) -> tuple[int, ...]:
    if isinstance(text, str):
        t = text.strip().strip("()[]")
        return tuple(int(v) for v in t.split(",") if v.strip()) if t else ()
    return tuple(text)

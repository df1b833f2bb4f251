"""Partitions, multipartitions, residues and the crystal operators on them.

Nodes are ordered globally component-major then by row: a node is *above*
another when it sits in an earlier component, or in the same component on
an earlier row. Components follow the multicharge, whose corner residues
ascend (all 0-corners, then all 1-corners, ...).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cache
from typing import Iterable, Optional, Sequence

from .errors import DomainError

Partition = tuple[int, ...]


def make_partition(parts: Iterable[int]) -> Partition:
    p = tuple(int(x) for x in parts)
    if any(x <= 0 for x in p) or any(p[k] < p[k + 1] for k in range(len(p) - 1)):
        raise DomainError(f"{list(p)} is not a partition")
    return p


@dataclass(frozen=True)
class Multicharge:
    """Corner residues (k_1, ..., k_r) of the components, taken mod e."""

    e: int
    residues: tuple[int, ...]

    def __post_init__(self):
        if self.e < 2:
            raise DomainError(f"rank e must be at least 2, got {self.e}")
        if any(not 0 <= k < self.e for k in self.residues):
            raise DomainError(f"corner residues must lie in 0..{self.e - 1}")

    @classmethod
    def from_weight(cls, e: int, a: Sequence[int]) -> Multicharge:
        """a_0 copies of 0, then a_1 copies of 1, and so on."""
        if len(a) != e:
            raise DomainError(f"need {e} weight coefficients, got {len(a)}")
        if any(x < 0 for x in a):
            raise DomainError("weight coefficients must be nonnegative")
        return cls(e, tuple(i for i, n in enumerate(a) for _ in range(n)))

    @property
    def level(self) -> int:
        return len(self.residues)

    def weight(self) -> tuple[int, ...]:
        a = [0] * self.e
        for k in self.residues:
            a[k] += 1
        return tuple(a)

    def components_with_corner(self, i: int) -> list[int]:
        """0-based indices of the components whose corner residue is ``i``."""
        return [c for c, k in enumerate(self.residues) if k == i]


@dataclass(frozen=True, order=True)
class Node:
    component: int  # 1-based
    row: int
    col: int
    residue: int

    def position(self) -> tuple[int, int]:
        return (self.component, self.row)


@cache
def _nodes_by_residue(parts: Partition, corner: int, e: int) -> dict[int, tuple[tuple[int, int, str], ...]]:
    """Addable (+) and removable (-) nodes of one partition, grouped by residue, top row first."""
    found: list[tuple[int, int, str, int]] = []
    n = len(parts)
    for r in range(1, n + 2):
        length = parts[r - 1] if r <= n else 0
        above = parts[r - 2] if r >= 2 else None
        if above is None or above > length:
            col = length + 1
            found.append((r, col, "+", (corner + col - r) % e))
        if r <= n:
            below = parts[r] if r < n else 0
            if below < length:
                found.append((r, length, "-", (corner + length - r) % e))
    grouped: dict[int, list[tuple[int, int, str]]] = {}
    for r, c, kind, res in sorted(found):
        grouped.setdefault(res, []).append((r, c, kind))
    return {res: tuple(v) for res, v in grouped.items()}


@dataclass(frozen=True)
class Multipartition:
    """A sequence of partitions, one per entry of the multicharge."""

    parts: tuple[Partition, ...]
    charge: Multicharge

    def __post_init__(self):
        if len(self.parts) != self.charge.level:
            raise DomainError(
                f"{len(self.parts)} components given for a level-{self.charge.level} multicharge"
            )
        for p in self.parts:
            make_partition(p)

    @classmethod
    def _make(cls, parts: tuple[Partition, ...], charge: Multicharge) -> Multipartition:
        obj = object.__new__(cls)
        object.__setattr__(obj, "parts", parts)
        object.__setattr__(obj, "charge", charge)
        return obj

    @classmethod
    def empty(cls, charge: Multicharge) -> Multipartition:
        return cls._make(((),) * charge.level, charge)

    @classmethod
    def from_lists(cls, lists: Sequence[Sequence[int]], charge: Multicharge) -> Multipartition:
        return cls(tuple(make_partition(p) for p in lists), charge)

    @classmethod
    def parse(cls, text: str, charge: Multicharge) -> Multipartition:
        """Read the bracket form ``[[2], [1], []]``."""
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise DomainError(f"cannot parse multipartition {text!r}") from exc
        if not isinstance(data, list) or not all(isinstance(p, list) for p in data):
            raise DomainError(f"expected a list of lists, got {text!r}")
        return cls.from_lists(data, charge)

    @property
    def size(self) -> int:
        return sum(sum(p) for p in self.parts)

    def is_empty(self) -> bool:
        return not any(self.parts)

    def residue(self, component: int, row: int, col: int) -> int:
        return (self.charge.residues[component - 1] + col - row) % self.charge.e

    def nodes(self) -> list[Node]:
        out = []
        for c, p in enumerate(self.parts, start=1):
            for r, length in enumerate(p, start=1):
                for col in range(1, length + 1):
                    out.append(Node(c, r, col, self.residue(c, r, col)))
        return out

    def with_node(self, node: Node) -> Multipartition:
        p = list(self.parts[node.component - 1])
        if node.row == len(p) + 1:
            p.append(1)
        else:
            p[node.row - 1] += 1
        parts = self.parts[: node.component - 1] + (tuple(p),) + self.parts[node.component:]
        return Multipartition._make(parts, self.charge)

    def without_node(self, node: Node) -> Multipartition:
        p = list(self.parts[node.component - 1])
        p[node.row - 1] -= 1
        if p[node.row - 1] == 0:
            p.pop()
        parts = self.parts[: node.component - 1] + (tuple(p),) + self.parts[node.component:]
        return Multipartition._make(parts, self.charge)

    def i_nodes(self, i: int) -> list[tuple[str, Node]]:
        """Addable ('+') and removable ('-') i-nodes in global top-to-bottom order."""
        e = self.charge.e
        out = []
        for c, (p, k) in enumerate(zip(self.parts, self.charge.residues), start=1):
            for r, col, kind in _nodes_by_residue(p, k, e).get(i, ()):
                out.append((kind, Node(c, r, col, i)))
        return out

    def to_lists(self) -> list[list[int]]:
        return [list(p) for p in self.parts]

    def __str__(self) -> str:
        return "[" + ", ".join(str(list(p)) for p in self.parts) + "]"

    def ket(self) -> str:
        return "|" + ", ".join(str(list(p)) for p in self.parts) + ">"

    def sort_key(self) -> tuple:
        return self.parts


def addable_nodes(mu: Multipartition, i: int) -> list[Node]:
    return [n for kind, n in mu.i_nodes(i) if kind == "+"]


def removable_nodes(mu: Multipartition, i: int) -> list[Node]:
    return [n for kind, n in mu.i_nodes(i) if kind == "-"]


def signature(mu: Multipartition, i: int) -> list[tuple[str, Node]]:
    """Reduced i-signature, read bottom to top, after cancelling every '-+' pair.

    The result always has the form ``+...+-...-``.
    """
    stack: list[tuple[str, Node]] = []
    for kind, node in reversed(mu.i_nodes(i)):
        if kind == "+" and stack and stack[-1][0] == "-":
            stack.pop()
        else:
            stack.append((kind, node))
    return stack


def signature_string(mu: Multipartition, i: int) -> str:
    return "".join(kind for kind, _ in signature(mu, i))


def good_node(mu: Multipartition, i: int) -> Optional[Node]:
    """Node behind the leftmost '-' of the reduced signature."""
    for kind, node in signature(mu, i):
        if kind == "-":
            return node
    return None


def cogood_node(mu: Multipartition, i: int) -> Optional[Node]:
    """Node behind the rightmost '+' of the reduced signature."""
    for kind, node in reversed(signature(mu, i)):
        if kind == "+":
            return node
    return None


def epsilon(mu: Multipartition, i: int) -> int:
    """Number of '-' signs left in the reduced i-signature."""
    return sum(1 for kind, _ in signature(mu, i) if kind == "-")


def phi(mu: Multipartition, i: int) -> int:
    """Number of '+' signs left in the reduced i-signature."""
    return sum(1 for kind, _ in signature(mu, i) if kind == "+")


def f_tilde(mu: Multipartition, i: int) -> Optional[Multipartition]:
    node = cogood_node(mu, i)
    return None if node is None else mu.with_node(node)


def e_tilde(mu: Multipartition, i: int) -> Optional[Multipartition]:
    node = good_node(mu, i)
    return None if node is None else mu.without_node(node)


def apply_f_path(mu: Multipartition, path: Iterable[tuple[int, int]]) -> Optional[Multipartition]:
    """Apply ``f_tilde`` along ``(residue, multiplicity)`` steps, first step first."""
    for i, k in path:
        for _ in range(k):
            mu = f_tilde(mu, i)
            if mu is None:
                return None
    return mu


def peel(mu: Multipartition) -> tuple[list[int], Multipartition]:
    """Remove good nodes, smallest residue first, until none is left.

    Returns the residues removed (in removal order) and the multipartition
    where peeling stopped; that is empty exactly when ``mu`` is e-regular.
    """
    removed: list[int] = []
    e = mu.charge.e
    while not mu.is_empty():
        for i in range(e):
            nxt = e_tilde(mu, i)
            if nxt is not None:
                removed.append(i)
                mu = nxt
                break
        else:
            break
    return removed, mu


def is_e_regular(mu: Multipartition) -> bool:
    return peel(mu)[1].is_empty()


def content(mu: Multipartition) -> tuple[int, ...]:
    """Number of nodes of each residue 0..e-1."""
    c = [0] * mu.charge.e
    e = mu.charge.e
    for k, p in zip(mu.charge.residues, mu.parts):
        for r, length in enumerate(p, start=1):
            for col in range(1, length + 1):
                c[(k + col - r) % e] += 1
    return tuple(c)


def dominance_vector(mu: Multipartition, width: int) -> tuple[int, ...]:
    """Cumulative row sums, component by component, each padded to ``width`` rows."""
    out = []
    before = 0
    for p in mu.parts:
        running = before
        for j in range(width):
            if j < len(p):
                running += p[j]
            out.append(running)
        before += sum(p)
    return tuple(out)


def dominance_geq(mu: Multipartition, lam: Multipartition) -> bool:
    if mu.charge != lam.charge:
        raise DomainError("dominance compares multipartitions of one multicharge")
    width = max([len(p) for p in mu.parts + lam.parts] + [1])
    return all(a >= b for a, b in zip(dominance_vector(mu, width), dominance_vector(lam, width)))


def dominance_maximal(candidates: Iterable[Multipartition]) -> list[Multipartition]:
    """Elements not strictly dominated by another candidate, lexicographically largest first."""
    cands = list(candidates)
    if not cands:
        return []
    width = max([len(p) for m in cands for p in m.parts] + [1])
    vecs = [dominance_vector(m, width) for m in cands]
    maximal = []
    for a, va in enumerate(vecs):
        beaten = any(
            b != a and vb != va and all(x >= y for x, y in zip(vb, va))
            for b, vb in enumerate(vecs)
        )
        if not beaten:
            maximal.append(cands[a])
    return sorted(maximal, key=Multipartition.sort_key, reverse=True)


def support(mu: Multipartition) -> frozenset[int]:
    """Residues of the nodes in nonempty components."""
    return frozenset(n.residue for n in mu.nodes())

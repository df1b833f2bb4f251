"""Closed-form results for two-residue faces.

Works with the highest weight ``a1 Lambda_1 + a2 Lambda_2``: the first ``a1``
components have corner residue 1 and the next ``a2`` have corner residue 2.
Inside the face every 1-corner component is empty, (1) or (2) and every
2-corner component is empty, (1) or (1,1).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache
from itertools import combinations
from typing import Iterator, Optional

from .errors import DomainError
from .fock import FockVector
from .partitions import Multicharge, Multipartition
from .qpoly import BinaryWord, LaurentPoly, coinv, gauss_binom, inv_excl, inv_rel, subwords, words
from .weights import in_face_region


@cache
def s_value(a: int, j: int, t: int) -> int:
    """Number of words in B(a, j) with t inversions, by recursion on the last letter."""
    if a < 0 or j < 0 or j > a or t < 0 or t > j * (a - j):
        return 0
    if a <= 1:
        return 1 if t == 0 else 0
    return s_value(a - 1, j - 1, t) + s_value(a - 1, j, t - j)


@dataclass(frozen=True)
class FaceParams:
    e: int
    a1: int
    a2: int
    j1: int
    j2: int

    def __post_init__(self):
        if self.e < 3:
            raise DomainError("two-residue faces need e >= 3")
        if self.a1 < 0 or self.a2 < 0 or self.a1 + self.a2 == 0:
            raise DomainError("need a1, a2 >= 0 and not both zero")
        if not in_face_region(self.a1, self.a2, self.j1, self.j2):
            raise DomainError(f"content ({self.j1},{self.j2}) lies outside the face")

    def weight(self) -> tuple[int, ...]:
        return (0, self.a1, self.a2) + (0,) * (self.e - 3)

    def charge(self) -> Multicharge:
        return Multicharge.from_weight(self.e, self.weight())

    @property
    def j1_bar(self) -> int:
        return self.a1 + min(self.a2, self.j2) - self.j1

    @property
    def j2_bar(self) -> int:
        return self.a2 + min(self.a1, self.j1) - self.j2


def _build(charge: Multicharge, ones: list[tuple[int, ...]], twos: list[tuple[int, ...]]) -> Multipartition:
    return Multipartition(tuple(ones) + tuple(twos), charge)


@dataclass(frozen=True)
class Classified:
    w: int
    mu: Multipartition
    u: int
    j1: int
    j2: int

    @property
    def path(self) -> list[tuple[int, int]]:
        """2^u 1^j1 2^(j2-u), first step first."""
        return [(2, self.u), (1, self.j1), (2, self.j2 - self.u)]

    def to_json(self) -> dict:
        return {
            "w": self.w,
            "mu": self.mu.to_lists(),
            "path": f"2^{self.u} 1^{self.j1} 2^{self.j2 - self.u}",
            "u": self.u,
        }


def w_range(p: FaceParams) -> range:
    t = min(p.a1, p.j1)
    return range(max(0, p.j2 - p.a2), min(t, p.j2, p.a1 + p.j2 - p.j1) + 1)


def classify_face_mps(p: FaceParams) -> list[Classified]:
    """The e-regular multipartitions at content (j1, j2), one for each admissible w."""
    t = min(p.a1, p.j1)
    x = max(0, p.j1 - p.a1)
    charge = p.charge()
    out = []
    for w in w_range(p):
        ones = [(2,)] * w + [(1,)] * (t - w) + [()] * (p.a1 - t)
        ntwo = p.j2 - w - x
        twos = [(1, 1)] * x + [(1,)] * ntwo + [()] * (p.a2 - x - ntwo)
        u = min(p.j1 - w, p.j2 - w)
        out.append(Classified(w, _build(charge, ones, twos), u, p.j1, p.j2))
    return out


def count_face_mps(p: FaceParams) -> int:
    if p.j2 <= p.a2:
        return min(p.j1, p.j2, p.a1, p.j1_bar) + 1
    return min(p.j2_bar, p.a2, p.j1_bar) + 1


@dataclass(frozen=True)
class TWSXChoice:
    T: BinaryWord
    W: BinaryWord
    S: BinaryWord
    X: BinaryWord

    def __post_init__(self):
        if self.T.length != self.W.length or self.S.length != self.X.length:
            raise DomainError("T, W and S, X must have matching lengths")
        if not self.W.issubset(self.T):
            raise DomainError(f"W={self.W} is not contained in T={self.T}")
        if not self.X.issubset(self.S):
            raise DomainError(f"X={self.X} is not contained in S={self.S}")

    @classmethod
    def from_strings(cls, T: str, W: str, S: str, X: str) -> TWSXChoice:
        return cls(*(BinaryWord.from_str(s) for s in (T, W, S, X)))

    @property
    def t(self) -> int:
        return self.T.ones

    @property
    def w(self) -> int:
        return self.W.ones

    @property
    def x(self) -> int:
        return self.X.ones


def tau_mp(choice: TWSXChoice, e: int = 4) -> Multipartition:
    """(2) at W, (1) at T-W among 1-corners; (1,1) at X, (1) at S-X among 2-corners."""
    a1, a2 = choice.T.length, choice.S.length
    charge = Multicharge.from_weight(e, (0, a1, a2) + (0,) * (e - 3))
    ones = [(2,) if w else (1,) if t else () for t, w in zip(choice.T.bits, choice.W.bits)]
    twos = [(1, 1) if x else (1,) if s else () for s, x in zip(choice.S.bits, choice.X.bits)]
    return _build(charge, ones, twos)


def _supersets(x: BinaryWord, size: int) -> Iterator[BinaryWord]:
    free = [k for k, b in enumerate(x.bits) if not b]
    for extra in combinations(free, size - x.ones):
        yield BinaryWord.from_positions(x.length, x.positions() + extra)


def _between(x: BinaryWord, s: BinaryWord, size: int) -> Iterator[BinaryWord]:
    free = [k for k in s.positions() if not x.bits[k]]
    for extra in combinations(free, size - x.ones):
        yield BinaryWord.from_positions(x.length, x.positions() + extra)


def closed_choices(p: FaceParams, u: int) -> Iterator[tuple[TWSXChoice, int]]:
    """Admissible (T, W, S, X) for the path with first step 2^u, with the exponent E(T, W)."""
    a1, a2, j1, j2 = p.a1, p.a2, p.j1, p.j2
    for t in range(max(0, j1 - u), min(a1, j1) + 1):
        x = j1 - t
        for T in words(a1, t):
            base_t = coinv(T) + (a1 - t) * (j1 - t)
            for w in range(max(0, j2 - a2), min(t, j2 - u) + 1):
                for W in subwords(T, w):
                    e_tw = base_t + inv_rel(W, T) + (t - w) * (j2 - u - w)
                    for X in words(a2, x):
                        for S in _supersets(X, j2 - w):
                            yield TWSXChoice(T, W, S, X), e_tw


def closed_fock(p: FaceParams, u: int) -> FockVector:
    """The vector of the path 2^u 1^j1 2^(j2-u) from its combinatorial expansion."""
    if not 0 <= u <= min(p.a2, p.j2):
        raise DomainError(f"u={u} must satisfy 0 <= u <= min(a2, j2)")
    charge = p.charge()
    terms: dict[Multipartition, LaurentPoly] = {}
    for choice, e_tw in closed_choices(p, u):
        S, X = choice.S, choice.X
        acc: dict[int, int] = {}
        for U in _between(X, S, u):
            k = e_tw + coinv(U) + inv_rel(X, U) + inv_excl(S, U, X)
            acc[k] = acc.get(k, 0) + 1
        if not acc:
            continue
        mu = tau_mp(choice, p.e)
        terms[mu] = terms.get(mu, LaurentPoly()) + LaurentPoly(acc)
    return FockVector(charge, terms)


def two_step_shape(a1: int, a2: int, u: int, j1: int) -> LaurentPoly:
    if not 0 <= u <= a2 or not 0 <= j1 <= a1 + u:
        raise DomainError("need 0 <= u <= a2 and 0 <= j1 <= a1 + u")
    return gauss_binom(a2, u) * gauss_binom(a1 + u, j1)


def face_contents(a1: int, a2: int) -> list[tuple[int, int]]:
    n = a1 + a2
    return [(j1, j2) for j1 in range(n + 1) for j2 in range(n + 1) if in_face_region(a1, a2, j1, j2)]


def canonical_u(p: FaceParams, w: Optional[int] = None) -> int:
    """The u of the path attached to the leader with the given w (the largest w by default)."""
    if w is None:
        w = w_range(p)[-1]
    return min(p.j1 - w, p.j2 - w)

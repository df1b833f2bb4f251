"""Weight-lattice arithmetic for affine type A: hubs, the symmetric form, defects.

A weight is stored as ``Lambda - sum(c_i alpha_i) - t delta`` through its
dominant base ``Lambda``, its content ``c`` and its delta shift ``t``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache
from typing import Sequence

from .errors import DomainError, IntegrityError
from .partitions import Multicharge


@cache
def cartan_matrix(e: int) -> tuple[tuple[int, ...], ...]:
    if e < 2:
        raise DomainError(f"rank e must be at least 2, got {e}")
    if e == 2:
        return ((2, -2), (-2, 2))
    rows = []
    for i in range(e):
        row = [0] * e
        row[i] = 2
        row[(i - 1) % e] = -1
        row[(i + 1) % e] = -1
        rows.append(tuple(row))
    return tuple(rows)


@dataclass(frozen=True)
class DominantWeight:
    """``sum a_i Lambda_i`` for the affine algebra of rank ``e``."""

    e: int
    a: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(int(x) for x in self.a))
        if self.e < 2:
            raise DomainError(f"rank e must be at least 2, got {self.e}")
        if len(self.a) != self.e:
            raise DomainError(f"need {self.e} coefficients, got {len(self.a)}")
        if any(x < 0 for x in self.a):
            raise DomainError("dominant weights have nonnegative coefficients")
        if not any(self.a):
            raise DomainError("the dominant weight must be nonzero")

    @property
    def level(self) -> int:
        return sum(self.a)

    def charge(self) -> Multicharge:
        return Multicharge.from_weight(self.e, self.a)

    def top(self) -> WeightPoint:
        return WeightPoint(self, (0,) * self.e)


@dataclass(frozen=True)
class WeightPoint:
    base: DominantWeight
    content: tuple[int, ...]
    delta_shift: int = 0

    def __post_init__(self):
        object.__setattr__(self, "content", tuple(int(x) for x in self.content))
        if len(self.content) != self.base.e:
            raise DomainError(f"content needs {self.base.e} entries")
        if any(x < 0 for x in self.content):
            raise DomainError(f"content {self.content} has a negative entry")
        if self.delta_shift < 0:
            raise DomainError("delta shift must be nonnegative")

    @property
    def hub(self) -> tuple[int, ...]:
        return hub(self)

    @property
    def defect(self) -> int:
        return defect(self)

    @property
    def degree(self) -> int:
        return sum(self.content) + self.delta_shift * self.base.e


def hub_of(e: int, a: Sequence[int], c: Sequence[int]) -> tuple[int, ...]:
    """``a - C c``; delta pairs to zero with every coroot."""
    C = cartan_matrix(e)
    return tuple(a[i] - sum(C[i][j] * c[j] for j in range(e)) for i in range(e))


def hub(p: WeightPoint) -> tuple[int, ...]:
    return hub_of(p.base.e, p.base.a, p.content)


def pairing(a: Sequence[int], c: Sequence[int]) -> int:
    """``(Lambda | alpha)`` for ``Lambda = sum a_i Lambda_i`` and ``alpha = sum c_i alpha_i``."""
    return sum(x * y for x, y in zip(a, c))


def root_pairing(c: Sequence[int], d: Sequence[int], e: int) -> int:
    """``(alpha | beta)`` for two elements of the root lattice given by coefficients."""
    C = cartan_matrix(e)
    return sum(c[i] * C[i][j] * d[j] for i in range(e) for j in range(e))


def defect(p: WeightPoint) -> int:
    """``(Lambda|alpha) - (alpha|alpha)/2`` with ``alpha = sum c_i alpha_i + t delta``."""
    two_d = 2 * pairing(p.base.a, p.content) - root_pairing(p.content, p.content, p.base.e)
    d = two_d // 2 + p.delta_shift * p.base.level
    if two_d % 2 or d < 0:
        raise IntegrityError(f"content {p.content} gives defect {two_d}/2; not a weight of V(Lambda)")
    return d


def string_defects(defect_at_top: int, w: int) -> list[int]:
    """Defects down an i-string whose top has defect ``defect_at_top`` and hub entry ``w``."""
    if w < 0:
        raise DomainError("the top of an i-string has a nonnegative hub entry")
    return [defect_at_top + k * (w - k) for k in range(w + 1)]


def in_face_region(a1: int, a2: int, j1: int, j2: int) -> bool:
    """Whether content (j1, j2) is a vertex of the {1,2}-face: a hexagon in the (j1, j2) plane."""
    return (
        0 <= j1 <= a1 + a2
        and 0 <= j2 <= a1 + a2
        and j1 - j2 <= a1
        and j2 - j1 <= a2
    )


def face_defect(a1: int, a2: int, j1: int, j2: int) -> int:
    if not in_face_region(a1, a2, j1, j2):
        raise DomainError(f"content ({j1},{j2}) is not in the face for a=({a1},{a2})")
    if j1 <= a1 and j2 <= a2:
        return j1 * (a1 - j1) + j2 * (a2 - j2) + j1 * j2
    # down the 2-string to j2, then across a 1-string of length a1 + j2
    return j2 * (a2 - j2) + j1 * (a1 + j2 - j1)


def weyl_reflect(p: WeightPoint, i: int) -> WeightPoint:
    """``s_i``: subtract ``theta_i`` copies of ``alpha_i`` from the weight."""
    theta = hub(p)[i]
    c = list(p.content)
    c[i] += theta
    return WeightPoint(p.base, tuple(c), p.delta_shift)


def content_from_hub(base: DominantWeight, h: Sequence[int], interval: Sequence[int]) -> tuple[int, ...]:
    """Recover a content supported on ``interval`` (a proper cyclic interval) from its hub.

    The Cartan matrix restricted to the interval has type A_t, whose inverse
    has entries ``min(j,k) (t+1-max(j,k)) / (t+1)``.
    """
    e = base.e
    t = len(interval)
    if not 0 < t < e:
        raise DomainError("interval must be nonempty and proper")
    rhs = [base.a[i] - h[i] for i in interval]
    c = [0] * e
    for j in range(1, t + 1):
        num = sum(min(j, k) * (t + 1 - max(j, k)) * rhs[k - 1] for k in range(1, t + 1))
        if num % (t + 1):
            raise DomainError(f"hub {list(h)} is not reachable inside the interval")
        c[interval[j - 1]] = num // (t + 1)
    if any(x < 0 for x in c) or hub_of(e, base.a, c) != tuple(h):
        raise DomainError(f"hub {list(h)} is not a weight supported on the interval")
    return tuple(c)


def format_hub(h: Sequence[int]) -> str:
    return "[" + ",".join(str(x) for x in h) + "]"


def format_content(c: Sequence[int]) -> str:
    return "(" + ",".join(str(x) for x in c) + ")"

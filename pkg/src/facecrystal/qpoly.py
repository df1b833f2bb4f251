"""Exact one-variable Laurent polynomials and the q-combinatorics built on them.

Coefficients are Python ints bounded to the signed 64-bit range; any result
outside that range raises :class:`OverflowError` instead of wrapping.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cache
from itertools import combinations
from typing import Iterable, Iterator, Mapping, Union

from .errors import DomainError, IntegrityError

INT64_MIN = -(1 << 63)
INT64_MAX = (1 << 63) - 1


def _checked(c: int) -> int:
    if c < INT64_MIN or c > INT64_MAX:
        raise OverflowError(f"coefficient {c} exceeds the signed 64-bit range")
    return c


class LaurentPoly:
    """An immutable integer Laurent polynomial, stored sparsely as {exponent: coefficient}.

    >>> v = LaurentPoly.monomial(1)
    >>> (v + v**-1) * (v + v**-1)
    LaurentPoly('q^2+2+q^-2')
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Union[Mapping[int, int], Iterable[tuple[int, int]], None] = None):
        acc: dict[int, int] = {}
        if terms is not None:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for k, c in items:
                if not isinstance(k, int) or not isinstance(c, int):
                    raise TypeError("exponents and coefficients must be ints")
                acc[k] = acc.get(k, 0) + c
        self._terms = {k: _checked(c) for k, c in acc.items() if c != 0}
        self._hash = None

    @classmethod
    def _wrap(cls, terms: dict[int, int]) -> LaurentPoly:
        # caller guarantees: no zero coefficients, all within range
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> LaurentPoly:
        return cls({exponent: coefficient})

    @classmethod
    def constant(cls, c: int) -> LaurentPoly:
        return cls({0: c})

    # -- inspection -------------------------------------------------------

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def items(self) -> list[tuple[int, int]]:
        """(exponent, coefficient) pairs in ascending exponent order."""
        return sorted(self._terms.items())

    def coefficient(self, exponent: int) -> int:
        return self._terms.get(exponent, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def min_degree(self) -> int:
        if not self._terms:
            raise DomainError("the zero polynomial has no degree")
        return min(self._terms)

    def max_degree(self) -> int:
        if not self._terms:
            raise DomainError("the zero polynomial has no degree")
        return max(self._terms)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_bar_symmetric(self) -> bool:
        return all(self._terms.get(-k) == c for k, c in self._terms.items())

    def is_palindromic(self) -> bool:
        """Symmetric about the midpoint of its exponent range."""
        if not self._terms:
            return True
        s = self.min_degree() + self.max_degree()
        return all(self._terms.get(s - k) == c for k, c in self._terms.items())

    def evaluate(self, x: int) -> int:
        if x == 0 and any(k < 0 for k in self._terms):
            raise DomainError("cannot evaluate negative powers at 0")
        return sum(c * x**k for k, c in self._terms.items()) if x != 0 else self.coefficient(0)

    def coefficient_sum(self) -> int:
        return sum(self._terms.values())

    # -- arithmetic -------------------------------------------------------

    @staticmethod
    def _coerce(other) -> LaurentPoly | None:
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly.constant(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not other._terms:
            return self
        out = dict(self._terms)
        for k, c in other._terms.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = _checked(s)
            else:
                out.pop(k, None)
        return LaurentPoly._wrap(out)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly._wrap({k: _checked(-c) for k, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out: dict[int, int] = {}
        for k1, c1 in self._terms.items():
            for k2, c2 in other._terms.items():
                out[k1 + k2] = out.get(k1 + k2, 0) + c1 * c2
        return LaurentPoly._wrap({k: _checked(c) for k, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int) -> LaurentPoly:
        if n < 0:
            if self.is_monomial():
                ((k, c),) = self._terms.items()
                if c in (1, -1):
                    return LaurentPoly({-k * (-n): c ** (-n)})
            raise DomainError("only unit monomials have Laurent inverses")
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by v**k."""
        if k == 0:
            return self
        return LaurentPoly._wrap({e + k: c for e, c in self._terms.items()})

    def bar(self) -> LaurentPoly:
        return LaurentPoly._wrap({-k: c for k, c in self._terms.items()})

    def divmod(self, divisor: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
        """Long division from the top exponent down.

        The quotient is confined to exponents an exact quotient could use, so
        ``self == quotient * divisor + remainder`` and the remainder is zero
        exactly when the division is exact.
        """
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return ZERO, ZERO
        dtop = divisor.max_degree()
        dlead = divisor._terms[dtop]
        lowest_shift = self.min_degree() - divisor.min_degree()
        rem = dict(self._terms)
        quot: dict[int, int] = {}
        while rem:
            top = max(rem)
            shift = top - dtop
            c = rem[top]
            if shift < lowest_shift or c % dlead:
                break
            q = c // dlead
            quot[shift] = _checked(q)
            for k, dc in divisor._terms.items():
                s = rem.get(k + shift, 0) - q * dc
                if s:
                    rem[k + shift] = s
                else:
                    rem.pop(k + shift, None)
        return LaurentPoly(quot), LaurentPoly(rem)

    def exact_div(self, divisor: LaurentPoly) -> LaurentPoly:
        """Quotient of an exact division; raises IntegrityError on a remainder."""
        q, r = self.divmod(divisor)
        if r:
            raise IntegrityError(f"{self!r} is not divisible by {divisor!r}")
        return q

    # -- comparison / hashing ----------------------------------------------

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- rendering ----------------------------------------------------------

    def render(self, var: str = "q", ascending: bool = False, times: str = "*") -> str:
        """Text form such as ``q^4+q^2`` (descending) or ``1+2z+z^2`` (ascending)."""
        if not self._terms:
            return "0"
        pieces = []
        for k, c in sorted(self._terms.items(), reverse=not ascending):
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if k == 0:
                body = str(a)
            else:
                power = var if k == 1 else f"{var}^{k}"
                body = power if a == 1 else f"{a}{times}{power}"
            pieces.append((sign, body))
        text = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
        for sign, body in pieces[1:]:
            text += sign + body
        return text

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"LaurentPoly('{self.render()}')"

    def to_json(self) -> dict:
        return {"terms": [[k, c] for k, c in self.items()]}

    @classmethod
    def from_json(cls, data: Mapping) -> LaurentPoly:
        return cls((int(k), int(c)) for k, c in data["terms"])

    @classmethod
    def parse(cls, text: str, var: str = "q") -> LaurentPoly:
        """Inverse of :meth:`render`; accepts ``*`` or juxtaposition between coefficient and power."""
        s = text.replace(" ", "")
        if s in ("", "0"):
            return ZERO
        term_re = re.compile(
            rf"([+-]?)(\d+)?\*?(?:({re.escape(var)})(?:\^(-?\d+))?)?"
        )
        pos = 0
        acc: dict[int, int] = {}
        while pos < len(s):
            m = term_re.match(s, pos)
            if not m or m.end() == pos or (m.group(2) is None and m.group(3) is None):
                raise DomainError(f"cannot parse polynomial {text!r} at offset {pos}")
            sign = -1 if m.group(1) == "-" else 1
            coef = int(m.group(2)) if m.group(2) else 1
            if m.group(3):
                exp = int(m.group(4)) if m.group(4) else 1
            else:
                exp = 0
            acc[exp] = acc.get(exp, 0) + sign * coef
            pos = m.end()
        return cls(acc)


ZERO = LaurentPoly()
ONE = LaurentPoly.constant(1)
V = LaurentPoly.monomial(1)


def bar(p: LaurentPoly) -> LaurentPoly:
    """Exchange v and v^-1."""
    return p.bar()


def bar_symmetric_part(c: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
    """Split ``c`` as ``beta + rest`` with ``beta`` bar-invariant and ``rest`` in vZ[v].

    ``beta`` agrees with ``c`` on every exponent <= 0.
    """
    beta: dict[int, int] = {}
    for k, a in c.items():
        if k <= 0:
            beta[k] = a
            if k < 0:
                beta[-k] = a
    beta_poly = LaurentPoly(beta)
    return beta_poly, c - beta_poly


@cache
def quantum_int(n: int) -> LaurentPoly:
    """Balanced quantum integer [n] = v^(n-1) + v^(n-3) + ... + v^-(n-1)."""
    if n <= 0:
        raise DomainError(f"quantum integers need n >= 1, got {n}")
    return LaurentPoly({n - 1 - 2 * k: 1 for k in range(n)})


@cache
def quantum_factorial(n: int) -> LaurentPoly:
    if n < 0:
        raise DomainError(f"quantum factorial needs n >= 0, got {n}")
    result = ONE
    for k in range(2, n + 1):
        result = result * quantum_int(k)
    return result


@cache
def gauss_binom(a: int, j: int) -> LaurentPoly:
    """Gaussian binomial in z via S(a,j) = S(a-1,j-1) + z^j S(a-1,j)."""
    if a < 0:
        raise DomainError(f"gauss_binom needs a >= 0, got {a}")
    if j < 0 or j > a:
        return ZERO
    if j == 0 or j == a:
        return ONE
    return gauss_binom(a - 1, j - 1) + gauss_binom(a - 1, j).shift(j)


# -- binary words -------------------------------------------------------------


@dataclass(frozen=True)
class BinaryWord:
    """A word over {0,1}; position 0 is the leftmost digit."""

    bits: tuple[int, ...]

    def __post_init__(self):
        if any(b not in (0, 1) for b in self.bits):
            raise DomainError(f"binary words hold only 0 and 1, got {self.bits}")

    @classmethod
    def from_str(cls, s: str) -> BinaryWord:
        return cls(tuple(int(ch) for ch in s))

    @classmethod
    def from_positions(cls, length: int, ones: Iterable[int]) -> BinaryWord:
        bits = [0] * length
        for p in ones:
            bits[p] = 1
        return cls(tuple(bits))

    @classmethod
    def zeros(cls, length: int) -> BinaryWord:
        return cls((0,) * length)

    @property
    def length(self) -> int:
        return len(self.bits)

    @property
    def ones(self) -> int:
        return sum(self.bits)

    def positions(self) -> tuple[int, ...]:
        return tuple(i for i, b in enumerate(self.bits) if b)

    def issubset(self, other: BinaryWord) -> bool:
        return self.length == other.length and all(a <= b for a, b in zip(self.bits, other.bits))

    def __sub__(self, other: BinaryWord) -> BinaryWord:
        if not other.issubset(self):
            raise DomainError(f"{other} is not contained in {self}")
        return BinaryWord(tuple(a - b for a, b in zip(self.bits, other.bits)))

    def reversed(self) -> BinaryWord:
        return BinaryWord(self.bits[::-1])

    def __str__(self) -> str:
        return "".join(map(str, self.bits))


def words(a: int, j: int) -> Iterator[BinaryWord]:
    """All words of length ``a`` with ``j`` ones (none when j < 0 or j > a)."""
    if j < 0 or j > a or a < 0:
        return
    for ones in combinations(range(a), j):
        yield BinaryWord.from_positions(a, ones)


def subwords(s: BinaryWord, j: int) -> Iterator[BinaryWord]:
    """Words T with T contained in ``s`` and ``j`` ones."""
    for ones in combinations(s.positions(), j):
        yield BinaryWord.from_positions(s.length, ones)


def inv(s: BinaryWord) -> int:
    """Pairs i < j with s_i = 1 and s_j = 0."""
    total = ones_seen = 0
    for b in s.bits:
        if b:
            ones_seen += 1
        else:
            total += ones_seen
    return total


def coinv(s: BinaryWord) -> int:
    """Pairs i < j with s_i = 0 and s_j = 1, i.e. zeros counted to the left of each one.

    With positions listed top to bottom this is the exponent picked up by a
    divided power placing its nodes at the ones of ``s``.
    """
    return inv(s.reversed())


def inv_rel(t: BinaryWord, s: BinaryWord) -> int:
    """For each one of ``t``, count the ones of ``s - t`` to its left; sum."""
    if t.length != s.length:
        raise DomainError("inv_rel needs words of equal length")
    if not t.issubset(s):
        raise DomainError(f"{t} is not contained in {s}")
    total = extra = 0
    for bt, bs in zip(t.bits, s.bits):
        if bt:
            total += extra
        elif bs:
            extra += 1
    return total


def inv_excl(s: BinaryWord, u: BinaryWord, x: BinaryWord) -> int:
    """Signed count for X <= U <= S.

    Positions of ``x`` are skipped. For each one of ``s - u``, add one per
    zero of ``s`` to its left and subtract one per one of ``u - x`` to its left.
    """
    if not (x.length == u.length == s.length):
        raise DomainError("inv_excl needs words of equal length")
    if not x.issubset(u) or not u.issubset(s):
        raise DomainError(f"need {x} <= {u} <= {s}")
    total = zeros = u_only = 0
    for bs, bu, bx in zip(s.bits, u.bits, x.bits):
        if bx:
            continue
        if not bs:
            zeros += 1
        elif bu:
            u_only += 1
        else:
            total += zeros - u_only
    return total

"""The q-deformed Fock space: vectors, the Chevalley operators and path evaluation.

Output text uses ``q`` for the quantum parameter, e.g.
``|[2], [1], []> + q*|[1], [2], []>``.
"""

from __future__ import annotations

import json
import re
from typing import Callable, Iterable, Mapping, Optional, Sequence, Union

from .errors import DomainError
from .partitions import Multicharge, Multipartition, content
from .qpoly import ONE, LaurentPoly, quantum_factorial

Scalar = Union[int, LaurentPoly]


class FockVector:
    """A finite sum of basis kets with Laurent-polynomial coefficients."""

    __slots__ = ("charge", "_terms")

    def __init__(self, charge: Multicharge, terms: Optional[Mapping[Multipartition, LaurentPoly]] = None):
        self.charge = charge
        self._terms: dict[Multipartition, LaurentPoly] = {}
        for mu, c in (terms or {}).items():
            if mu.charge != charge:
                raise DomainError("every ket in a vector must share the multicharge")
            c = LaurentPoly._coerce(c)
            if c:
                self._terms[mu] = c

    @classmethod
    def _wrap(cls, charge: Multicharge, terms: dict[Multipartition, LaurentPoly]) -> FockVector:
        obj = cls.__new__(cls)
        obj.charge = charge
        obj._terms = {m: c for m, c in terms.items() if c}
        return obj

    @classmethod
    def zero(cls, charge: Multicharge) -> FockVector:
        return cls._wrap(charge, {})

    @classmethod
    def basis(cls, mu: Multipartition) -> FockVector:
        return cls._wrap(mu.charge, {mu: ONE})

    @classmethod
    def vacuum(cls, charge: Multicharge) -> FockVector:
        return cls.basis(Multipartition.empty(charge))

    def items(self) -> list[tuple[Multipartition, LaurentPoly]]:
        """Terms in descending lexicographic order of their partition lists."""
        return sorted(self._terms.items(), key=lambda kv: kv[0].sort_key(), reverse=True)

    def coefficient(self, mu: Multipartition) -> LaurentPoly:
        return self._terms.get(mu, LaurentPoly())

    def support(self) -> list[Multipartition]:
        return [m for m, _ in self.items()]

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __iter__(self):
        return iter(self.items())

    def _check(self, other: FockVector) -> None:
        if other.charge != self.charge:
            raise DomainError("vectors live in Fock spaces of different multicharge")

    def __add__(self, other: FockVector) -> FockVector:
        self._check(other)
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = out[m] + c if m in out else c
        return FockVector._wrap(self.charge, out)

    def __neg__(self) -> FockVector:
        return FockVector._wrap(self.charge, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other: FockVector) -> FockVector:
        return self + (-other)

    def scale(self, s: Scalar) -> FockVector:
        s = LaurentPoly._coerce(s)
        if s is None:
            raise TypeError("vectors scale by integers or Laurent polynomials")
        return FockVector._wrap(self.charge, {m: c * s for m, c in self._terms.items()})

    def __rmul__(self, s: Scalar) -> FockVector:
        return self.scale(s)

    def __mul__(self, s: Scalar) -> FockVector:
        return self.scale(s)

    def map_coefficients(self, fn: Callable[[LaurentPoly], LaurentPoly]) -> FockVector:
        return FockVector._wrap(self.charge, {m: fn(c) for m, c in self._terms.items()})

    def bar(self) -> FockVector:
        return self.map_coefficients(LaurentPoly.bar)

    def __eq__(self, other) -> bool:
        if not isinstance(other, FockVector):
            return NotImplemented
        return self.charge == other.charge and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.charge, frozenset(self._terms.items())))

    def contents(self) -> set[tuple[int, ...]]:
        return {content(m) for m in self._terms}

    def render(self, var: str = "q") -> str:
        if not self._terms:
            return "0"
        pieces = []
        for mu, c in self.items():
            ket = mu.ket()
            if c == ONE:
                pieces.append(ket)
            elif c == -ONE:
                pieces.append("-" + ket)
            elif len(c) == 1:
                pieces.append(c.render(var) + "*" + ket)
            else:
                pieces.append("(" + c.render(var) + ")*" + ket)
        return " + ".join(pieces)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"FockVector({self.render()})"

    def to_json(self) -> list[dict]:
        return [{"mp": mu.to_lists(), "coef": c.to_json()} for mu, c in self.items()]

    @classmethod
    def from_json(cls, data: Sequence[Mapping], charge: Multicharge) -> FockVector:
        out: dict[Multipartition, LaurentPoly] = {}
        for entry in data:
            mu = Multipartition.from_lists(entry["mp"], charge)
            out[mu] = out.get(mu, LaurentPoly()) + LaurentPoly.from_json(entry["coef"])
        return cls._wrap(charge, out)

    @classmethod
    def parse(cls, text: str, charge: Multicharge, var: str = "q") -> FockVector:
        """Read the q-notation back, tolerating grouping parentheses and missing '+' signs."""
        out: dict[Multipartition, LaurentPoly] = {}
        pos = 0
        for m in _KET.finditer(text):
            negate, coef = _coefficient_text(text[pos:m.start()])
            pos = m.end()
            try:
                mu = Multipartition.from_lists(json.loads("[" + m.group(1) + "]"), charge)
            except json.JSONDecodeError as exc:
                raise DomainError(f"bad ket {m.group(0)!r}") from exc
            if coef == "-":
                negate, coef = not negate, ""
            c = LaurentPoly.parse(coef, var) if coef else ONE
            if negate:
                c = -c
            out[mu] = out.get(mu, LaurentPoly()) + c
        if text[pos:].strip(" \n\t)+"):
            raise DomainError(f"trailing text {text[pos:]!r}")
        return cls._wrap(charge, out)


_KET = re.compile(r"\|([^|>]*)>")


def _coefficient_text(chunk: str) -> tuple[bool, str]:
    s = "".join(chunk.split())
    s = s.lstrip(")")
    if s.startswith("+"):
        s = s[1:]
    if s.endswith(")*"):
        depth = 0
        for k in range(len(s) - 2, -1, -1):
            if s[k] == ")":
                depth += 1
            elif s[k] == "(":
                depth -= 1
                if depth == 0:
                    sign = s[:k].lstrip("(+")
                    inner = s[k + 1:-2]
                    return sign == "-", inner
        raise DomainError(f"unbalanced coefficient {chunk!r}")
    s = s.lstrip("(").lstrip("+").lstrip("(")
    return False, (s[:-1] if s.endswith("*") else s)


def f_op(i: int, x: FockVector) -> FockVector:
    """Add an i-node everywhere, weighting by addable minus removable i-nodes above it."""
    out: dict[Multipartition, LaurentPoly] = {}
    for lam, c in x._terms.items():
        n = 0
        for kind, node in lam.i_nodes(i):
            if kind == "+":
                mu = lam.with_node(node)
                term = c.shift(n)
                out[mu] = out[mu] + term if mu in out else term
                n += 1
            else:
                n -= 1
    return FockVector._wrap(x.charge, out)


def e_op(i: int, x: FockVector) -> FockVector:
    """Remove an i-node everywhere, weighting by addable minus removable i-nodes below it."""
    out: dict[Multipartition, LaurentPoly] = {}
    for lam, c in x._terms.items():
        m = 0
        for kind, node in reversed(lam.i_nodes(i)):
            if kind == "-":
                mu = lam.without_node(node)
                term = c.shift(m)
                out[mu] = out[mu] + term if mu in out else term
                m -= 1
            else:
                m += 1
    return FockVector._wrap(x.charge, out)


def vh_op(i: int, x: FockVector) -> FockVector:
    out = {}
    for lam, c in x._terms.items():
        n = sum(1 if kind == "+" else -1 for kind, _ in lam.i_nodes(i))
        out[lam] = c.shift(n)
    return FockVector._wrap(x.charge, out)


def vd_op(x: FockVector) -> FockVector:
    return FockVector._wrap(x.charge, {lam: c.shift(content(lam)[0]) for lam, c in x._terms.items()})


def divided_f(i: int, k: int, x: FockVector) -> FockVector:
    if k < 0:
        raise DomainError("divided powers need k >= 0")
    for _ in range(k):
        x = f_op(i, x)
    if k <= 1:
        return x
    d = quantum_factorial(k)
    return x.map_coefficients(lambda c: c.exact_div(d))


Path = Sequence[tuple[int, int]]


def eval_path(steps: Path, charge: Multicharge, start: Optional[FockVector] = None) -> FockVector:
    """Apply divided powers to the vacuum, first listed step first."""
    x = start if start is not None else FockVector.vacuum(charge)
    for i, k in steps:
        if not 0 <= i < charge.e:
            raise DomainError(f"residue {i} out of range for e={charge.e}")
        x = divided_f(i, k, x)
    return x


_STEP = re.compile(r"^(\d+)(?:\^\(?(\d+)\)?)?$")


def parse_path(text: str) -> list[tuple[int, int]]:
    """Read ``"2^1 1^2 2^2"`` (bare ``i`` means ``i^1``) in application order."""
    steps = []
    for tok in text.replace(",", " ").split():
        m = _STEP.match(tok)
        if not m:
            raise DomainError(f"bad path step {tok!r}")
        steps.append((int(m.group(1)), int(m.group(2) or 1)))
    return steps


def format_path(steps: Iterable[tuple[int, int]]) -> str:
    return " ".join(f"{i}^{k}" for i, k in steps)

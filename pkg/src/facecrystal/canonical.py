"""Canonical basis elements G(mu) of the Fock space and related tools.

G(mu) is built from a bar-invariant monomial vector, then corrected by
subtracting multiples of G(lambda) for dominance-smaller lambda until every
coefficient other than the leading one lies in v Z[v].
"""

from __future__ import annotations

import hashlib
import json
import os
import threading
from dataclasses import dataclass
from typing import Optional, Union

from .errors import DomainError, IntegrityError
from .fock import FockVector, divided_f
from .partitions import (
    Multicharge,
    Multipartition,
    content,
    dominance_geq,
    dominance_maximal,
    e_tilde,
    epsilon,
    good_node,
    is_e_regular,
    peel,
    support,
)
from .qpoly import ONE, LaurentPoly, bar_symmetric_part


@dataclass(frozen=True)
class CanonicalElement:
    leader: Multipartition
    vector: FockVector

    @property
    def shape(self) -> LaurentPoly:
        return shape(self.vector)

    def render(self, var: str = "q") -> str:
        return self.vector.render(var)

    def __str__(self) -> str:
        return self.render()


_lock = threading.Lock()
_monomials: dict[Multipartition, FockVector] = {}
_elements: dict[Multipartition, CanonicalElement] = {}


def clear_cache() -> None:
    with _lock:
        _monomials.clear()
        _elements.clear()


def _require_regular(mu: Multipartition) -> None:
    removed, rest = peel(mu)
    if not rest.is_empty():
        raise DomainError(
            f"{mu} is not e-regular: peeling stopped at {rest} after removing residues {removed}"
        )


def monomial_for(mu: Multipartition) -> FockVector:
    """A bar-invariant vector with |mu> as leading term, built from divided powers.

    Uses the smallest residue with a good node, removes all its good nodes,
    recurses, then adds them back with one divided power.
    """
    hit = _monomials.get(mu)
    if hit is not None:
        return hit
    if mu.is_empty():
        vec = FockVector.vacuum(mu.charge)
    else:
        for i in range(mu.charge.e):
            if good_node(mu, i) is not None:
                break
        else:
            _require_regular(mu)
            raise IntegrityError(f"{mu} has no good node")
        k = epsilon(mu, i)
        nu = mu
        for _ in range(k):
            nu = e_tilde(nu, i)
        vec = divided_f(i, k, monomial_for(nu))
        if vec.coefficient(mu) != ONE:
            raise IntegrityError(f"leading coefficient of {mu} is {vec.coefficient(mu)}, expected 1")
    with _lock:
        _monomials.setdefault(mu, vec)
    return vec


def canonical_basis(mu: Multipartition) -> CanonicalElement:
    hit = _elements.get(mu)
    if hit is not None:
        return hit
    _require_regular(mu)
    vec = monomial_for(mu)
    done: set[Multipartition] = set()
    while True:
        offenders = [
            lam for lam, c in vec.items() if lam != mu and not bar_symmetric_part(c)[0].is_zero()
        ]
        if not offenders:
            break
        lam = dominance_maximal(offenders)[0]
        if lam in done:
            raise IntegrityError(f"correction loop revisited {lam} while building G({mu})")
        done.add(lam)
        if not is_e_regular(lam):
            raise IntegrityError(f"offending term {lam} in G({mu}) is not e-regular")
        beta = bar_symmetric_part(vec.coefficient(lam))[0]
        vec = vec - canonical_basis(lam).vector.scale(beta)
    _check_element(mu, vec)
    g = CanonicalElement(mu, vec)
    with _lock:
        _elements.setdefault(mu, g)
    return g


def _check_element(mu: Multipartition, vec: FockVector) -> None:
    if vec.coefficient(mu) != ONE:
        raise IntegrityError(f"G({mu}) lost its leading coefficient")
    c0 = content(mu)
    for lam, c in vec.items():
        if lam == mu:
            continue
        if c.min_degree() < 1:
            raise IntegrityError(f"coefficient {c} of {lam} in G({mu}) is not in vZ[v]")
        if content(lam) != c0 or not dominance_geq(mu, lam):
            raise IntegrityError(f"term {lam} of G({mu}) breaks content or dominance")


def strip(x: FockVector) -> list[tuple[LaurentPoly, CanonicalElement]]:
    """Write a bar-invariant vector as a combination of canonical basis elements.

    The leaders come out in dominance order, largest first.
    """
    rest = x
    out: list[tuple[LaurentPoly, CanonicalElement]] = []
    seen: set[Multipartition] = set()
    while rest:
        lam = dominance_maximal(rest.support())[0]
        if lam in seen:
            raise IntegrityError(f"stripping revisited {lam}")
        seen.add(lam)
        c = rest.coefficient(lam)
        if not c.is_bar_symmetric():
            raise IntegrityError(f"coefficient {c} of {lam} is not bar-symmetric")
        if not is_e_regular(lam):
            raise IntegrityError(f"leading term {lam} is not e-regular")
        g = canonical_basis(lam)
        out.append((c, g))
        rest = rest - g.vector.scale(c)
    return out


def shape(g: Union[CanonicalElement, FockVector]) -> LaurentPoly:
    """Replace each ket by 1 and v by z; polynomial coefficients count with multiplicity."""
    vec = g.vector if isinstance(g, CanonicalElement) else g
    acc: dict[int, int] = {}
    for _, c in vec.items():
        for k, n in c.items():
            if k < 0:
                raise DomainError(f"coefficient {c} has a negative power of v")
            acc[k] = acc.get(k, 0) + n
    return LaurentPoly(acc)


def wedge(g1: CanonicalElement, g2: CanonicalElement) -> CanonicalElement:
    """Combine two elements whose supports are disjoint and pairwise non-adjacent."""
    mu, nu = g1.leader, g2.leader
    if mu.charge != nu.charge:
        raise DomainError("wedge needs a common multicharge")
    e = mu.charge.e
    s1, s2 = support(mu), support(nu)
    for i in s1:
        for j in s2:
            if i == j or (i - j) % e in (1, e - 1):
                raise DomainError(f"supports {sorted(s1)} and {sorted(s2)} meet or touch")
    out: dict[Multipartition, LaurentPoly] = {}
    for lam1, c1 in g1.vector.items():
        for lam2, c2 in g2.vector.items():
            lam = _combine(lam1, lam2)
            out[lam] = out.get(lam, LaurentPoly()) + c1 * c2
    return CanonicalElement(_combine(mu, nu), FockVector(mu.charge, out))


def _combine(a: Multipartition, b: Multipartition) -> Multipartition:
    parts = []
    for p, q in zip(a.parts, b.parts):
        if p and q:
            raise DomainError(f"{a} and {b} share a nonempty component")
        parts.append(p or q)
    return Multipartition(tuple(parts), a.charge)


def cache_path(directory: str, charge: Multicharge) -> str:
    key = json.dumps({"e": charge.e, "charge": list(charge.residues)}, sort_keys=True)
    digest = hashlib.sha256(key.encode()).hexdigest()[:16]
    return os.path.join(directory, f"g-{digest}.json")


def save_cache(directory: str, charge: Multicharge) -> str:
    path = cache_path(directory, charge)
    entries = [
        {"leader": g.leader.to_lists(), "vector": g.vector.to_json()}
        for mu, g in sorted(_elements.items(), key=lambda kv: kv[0].sort_key())
        if mu.charge == charge
    ]
    os.makedirs(directory, exist_ok=True)
    tmp = path + ".tmp"
    with open(tmp, "w") as fh:
        json.dump({"e": charge.e, "charge": list(charge.residues), "elements": entries}, fh)
    os.replace(tmp, path)
    return path


def load_cache(directory: str, charge: Multicharge) -> Optional[int]:
    """Preload stored elements; each is re-checked before it is trusted."""
    path = cache_path(directory, charge)
    if not os.path.exists(path):
        return None
    with open(path) as fh:
        data = json.load(fh)
    if data.get("e") != charge.e or tuple(data.get("charge", ())) != charge.residues:
        raise IntegrityError(f"cache file {path} belongs to another multicharge")
    loaded = 0
    for entry in data["elements"]:
        mu = Multipartition.from_lists(entry["leader"], charge)
        vec = FockVector.from_json(entry["vector"], charge)
        _check_element(mu, vec)
        with _lock:
            _elements.setdefault(mu, CanonicalElement(mu, vec))
        loaded += 1
    return loaded

"""Verification suites comparing closed formulas and worked examples against brute force.

Each suite returns a list of :class:`Check` records; nothing here raises on a
mismatch, so a report can list every failure at once.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Callable, Optional

from . import reference as ref
from .canonical import canonical_basis, shape, strip
from .closedform import FaceParams, classify_face_mps, closed_fock, count_face_mps, face_contents
from .crystal import FaceSpec, face, rho_content, rho_degree, rho_hub, tau, tau_hub
from .fock import FockVector, eval_path, f_op
from .partitions import Multicharge, Multipartition, addable_nodes, removable_nodes
from .qpoly import BinaryWord, LaurentPoly, coinv, gauss_binom, inv, quantum_factorial, words
from .weights import DominantWeight, WeightPoint, face_defect


@dataclass
class Check:
    criterion: str
    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.checked > 0 and not self.failures

    def expect(self, ok: bool, detail: str) -> None:
        self.checked += 1
        if not ok and len(self.failures) < 20:
            self.failures.append(detail)
        elif not ok:
            self.failures.append("...")

    def to_json(self) -> dict:
        return {
            "criterion": self.criterion,
            "name": self.name,
            "passed": self.passed,
            "checked": self.checked,
            "failures": self.failures,
        }


def _poly(coeffs) -> LaurentPoly:
    return LaurentPoly({k: c for k, c in enumerate(coeffs)})


def check_examples() -> list[Check]:
    """Worked e=4 examples: expansions and shapes."""
    charge = Multicharge.from_weight(4, ref.EXAMPLE_E4_WEIGHT)
    expand = Check("AC-1", "reference canonical basis expansions")
    shapes = Check("AC-2", "shapes of the reference elements")
    for key, text in ref.EXAMPLE_G_TEXT.items():
        mu = Multipartition.parse(key, charge)
        g = canonical_basis(mu)
        expected = FockVector.parse(text, charge)
        expand.expect(g.vector == expected, f"G({key}) differs: {g.render()}")
        want = _poly(ref.EXAMPLE_SHAPES[key])
        shapes.expect(shape(g) == want, f"shape of G({key}) is {shape(g)}")
    last = _poly(ref.EXAMPLE_SHAPES["[[2], [1], [1], [1], []]"])
    shapes.expect(
        last.is_palindromic() and last.max_degree() == face_defect(2, 3, 2, 3),
        "last shape is not palindromic of degree face_defect(2,3,2,3)",
    )
    return [expand, shapes]


def single_residue_leader(charge: Multicharge, i: int, j: int) -> Multipartition:
    """The unique e-regular multipartition of weight Lambda - j alpha_i: the top j i-corners get (1)."""
    chosen = set(charge.components_with_corner(i)[:j])
    return Multipartition(tuple((1,) if c in chosen else () for c in range(charge.level)), charge)


def check_shapes(max_a: int = 6, e: int = 4, i: int = 1) -> list[Check]:
    c = Check("AC-3", "shapes on single-residue faces are Gaussian binomials")
    for a in range(2, max_a + 1):
        weight = [0] * e
        weight[i] = a
        charge = Multicharge.from_weight(e, weight)
        for j in range(a + 1):
            mu = single_residue_leader(charge, i, j)
            s = shape(canonical_basis(mu))
            c.expect(s == gauss_binom(a, j), f"a={a} j={j}: shape {s}")
            by_words = LaurentPoly({})
            for S in words(a, j):
                by_words = by_words + LaurentPoly.monomial(inv(S))
            c.expect(by_words == gauss_binom(a, j), f"a={a} j={j}: inversion sum {by_words}")
    return [c]


def check_counting(max_a: int = 4, ranks: tuple[int, ...] = (4, 5)) -> list[Check]:
    c = Check("AC-4", "closed count equals brute-force e-regular count")
    for e in ranks:
        for a1, a2 in itertools.product(range(max_a + 1), repeat=2):
            if a1 + a2 == 0:
                continue
            spec = FaceSpec(DominantWeight(e, (0, a1, a2) + (0,) * (e - 3)), (1, 2))
            g = face(spec, keep_multipartitions=True)
            c.expect(len(g) == len(face_contents(a1, a2)), f"e={e} a=({a1},{a2}): {len(g)} vertices")
            for v in g.vertices.values():
                p = FaceParams(e, a1, a2, v.content[1], v.content[2])
                n = count_face_mps(p)
                c.expect(n == v.count, f"e={e} a=({a1},{a2}) j={v.content[1:3]}: {n} vs {v.count}")
                listed = sorted(x.mu.sort_key() for x in classify_face_mps(p))
                c.expect(
                    listed == sorted(m.sort_key() for m in v.multipartitions),
                    f"e={e} a=({a1},{a2}) j={v.content[1:3]}: classification differs",
                )
    return [c]


def check_closed_fock(max_a: int = 3, e: int = 4) -> list[Check]:
    c = Check("AC-5", "closed Fock expansion equals path evaluation")
    for a1, a2 in itertools.product(range(max_a + 1), repeat=2):
        if a1 + a2 == 0:
            continue
        for j1, j2 in face_contents(a1, a2):
            p = FaceParams(e, a1, a2, j1, j2)
            for u in range(min(a2, j2) + 1):
                got = closed_fock(p, u)
                want = eval_path([(2, u), (1, j1), (2, j2 - u)], p.charge())
                c.expect(got == want, f"a=({a1},{a2}) j=({j1},{j2}) u={u}")
    return [c]


def check_strip() -> list[Check]:
    c = Check("AC-6", "stripping the 2^3 1^4 2^3 path vector")
    charge = Multicharge.from_weight(4, ref.STRIP_WEIGHT)
    x = eval_path(ref.STRIP_PATH, charge)
    got = [(coef, g.leader) for coef, g in strip(x)]
    want = [
        (LaurentPoly({k: 1 for k in exps}), Multipartition.from_lists(m, charge))
        for exps, m in ref.STRIP_RESULT
    ]
    c.expect(got == want, "decomposition: " + "; ".join(f"({a}) G({b})" for a, b in got))
    total = FockVector.zero(charge)
    for coef, g in strip(x):
        total = total + g.vector.scale(coef)
    c.expect(total == x, "terms do not sum back to the path vector")
    return [c]


def check_face(spec: FaceSpec, c: Check) -> None:
    g = face(spec, keep_multipartitions=False)
    c.expect(g.max_degree() == rho_degree(spec), f"{spec}: max degree {g.max_degree()} vs {rho_degree(spec)}")
    c.expect(g.vertex(rho_content(spec)).hub == rho_hub(spec), f"{spec}: rho hub")
    c.expect(tau(spec, spec.base.top()).content == rho_content(spec), f"{spec}: tau(Lambda) != rho")
    e, t = spec.base.e, spec.t
    for v in g.vertices.values():
        p = WeightPoint(spec.base, v.content)
        q = tau(spec, p)
        w = g.vertices.get(q.content)
        ok = w is not None and w.defect == v.defect and w.count == v.count and tau(spec, q) == p
        if ok and e >= t + 2:
            ok = tau_hub(spec, v.hub) == w.hub
        c.expect(ok, f"{spec.base.a} {spec.interval}: tau at {v.content}")


def check_tau(
    e: Optional[int] = None,
    weight: Optional[tuple[int, ...]] = None,
    interval: Optional[tuple[int, ...]] = None,
    max_a: int = 3,
    max_t: int = 3,
    max_e: int = 6,
) -> list[Check]:
    """Tau checks on one face, or on a grid of faces when no face is given."""
    c = Check("AC-7", "face geometry, rho and tau")
    if e is not None:
        check_face(FaceSpec(DominantWeight(e, weight), interval), c)
        return [c]
    spec = FaceSpec(DominantWeight(5, ref.E5_FACE_WEIGHT), ref.E5_FACE_INTERVAL)
    g = face(spec)
    labels = {v.hub: v.defect for v in g.vertices.values()}
    for h, d in ref.E5_FACE_LABELS.items():
        c.expect(labels.get(h) == d, f"label {list(h)}^{d} missing or wrong ({labels.get(h)})")
    c.expect(rho_hub(spec) == ref.E5_RHO_HUB, f"rho hub {rho_hub(spec)}")
    image = tau(spec, WeightPoint(spec.base, g.by_hub((1, 0, 0, 1, 0)).content))
    c.expect(image.hub == (2, -1, 0, 0, 1) and image.defect == 1, f"tau image {image.hub}")
    for t in range(1, max_t + 1):
        for rank in range(t + 1, max_e + 1):
            for local in itertools.product(range(max_a + 1), repeat=t):
                for a0 in (0, 1):
                    a = [0] * rank
                    a[0] = a0
                    a[1:t + 1] = local
                    if not any(a):
                        continue
                    check_face(FaceSpec(DominantWeight(rank, tuple(a)), tuple(range(1, t + 1))), c)
    return [c]


def check_hexagon() -> list[Check]:
    c = Check("AC-8", "the a=(3,2) hexagon")
    a1, a2 = ref.HEXAGON_A
    spec = FaceSpec(DominantWeight(4, (0, a1, a2, 0)), (1, 2))
    g = face(spec)
    c.expect(len(g) == 27, f"{len(g)} vertices")
    found = {(v.content[1], v.content[2]): v.defect for v in g.vertices.values()}
    zero = {k for k, d in found.items() if d == 0}
    c.expect(zero == set(ref.HEXAGON_CORNERS), f"defect-0 vertices {sorted(zero)}")
    for k, d in list(ref.HEXAGON_BOUNDARY.items()) + list(ref.HEXAGON_INTERIOR):
        c.expect(found.get(k) == d, f"vertex {k}: defect {found.get(k)} vs {d}")
    for (j1, j2), d in found.items():
        c.expect(face_defect(a1, a2, j1, j2) == d, f"face_defect at {(j1, j2)}")
    return [c]


def added_nodes_instance(rng: random.Random, max_level: int = 5, max_nodes: int = 8, e_choices=(3, 4, 5)):
    """Random (mu, i, S) with mu free of removable i-nodes and at least one addable i-node."""
    while True:
        e = rng.choice(e_choices)
        level = rng.randint(1, max_level)
        charge = Multicharge(e, tuple(sorted(rng.randrange(e) for _ in range(level))))
        mu = Multipartition.empty(charge)
        for _ in range(rng.randint(0, max_nodes)):
            i = rng.randrange(e)
            adds = addable_nodes(mu, i)
            if adds:
                mu = mu.with_node(rng.choice(adds))
        i = rng.randrange(e)
        adds = addable_nodes(mu, i)
        if not adds or removable_nodes(mu, i):
            continue
        t = rng.randint(1, min(4, len(adds)))
        chosen = sorted(rng.sample(range(len(adds)), t))
        return mu, i, BinaryWord.from_positions(len(adds), chosen)


def added_nodes_coefficient(mu: Multipartition, i: int, S: BinaryWord) -> LaurentPoly:
    adds = addable_nodes(mu, i)
    lam = mu
    for k in S.positions():
        lam = lam.with_node(adds[k])
    x = FockVector.basis(mu)
    for _ in range(S.ones):
        x = f_op(i, x)
    return x.coefficient(lam)


def check_added_nodes(samples: int = 200, seed: int = 20240611) -> list[Check]:
    c = Check("AC-9", "coefficient of adding t addable i-nodes")
    rng = random.Random(seed)
    for _ in range(samples):
        mu, i, S = added_nodes_instance(rng)
        got = added_nodes_coefficient(mu, i, S)
        want = quantum_factorial(S.ones).shift(coinv(S))
        c.expect(got == want, f"{mu} i={i} S={S}: {got} vs {want}")
    return [c]


SUITES: dict[str, Callable[..., list[Check]]] = {
    "examples": check_examples,
    "shapes": check_shapes,
    "counting": check_counting,
    "closed-fock": check_closed_fock,
    "strip": check_strip,
    "tau": check_tau,
    "hexagon": check_hexagon,
    "added-nodes": check_added_nodes,
}


def run_all() -> list[Check]:
    out: list[Check] = []
    for fn in SUITES.values():
        out.extend(fn())
    return out

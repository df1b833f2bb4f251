"""Block-reduced crystal graphs, faces, the bottom weight rho and the face involution tau.

Vertices are keyed by content: multipartitions of equal content share a vertex.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .errors import DomainError, IntegrityError
from .partitions import Multipartition, f_tilde
from .weights import (
    DominantWeight,
    WeightPoint,
    cartan_matrix,
    content_from_hub,
    defect,
    format_hub,
    hub_of,
)

Content = tuple[int, ...]


@dataclass(frozen=True)
class FaceSpec:
    base: DominantWeight
    interval: tuple[int, ...]

    def __post_init__(self):
        e = self.base.e
        iv = tuple(int(i) % e for i in self.interval)
        object.__setattr__(self, "interval", iv)
        if not iv:
            raise DomainError("a face needs a nonempty interval")
        if len(iv) >= e:
            raise DomainError(f"interval {list(iv)} is not a proper subset of 0..{e - 1}")
        if any(iv[k + 1] != (iv[k] + 1) % e for k in range(len(iv) - 1)):
            raise DomainError(f"interval {list(iv)} is not cyclically consecutive")

    @classmethod
    def from_start(cls, base: DominantWeight, start: int, t: int) -> FaceSpec:
        return cls(base, tuple((start + k) % base.e for k in range(t)))

    @property
    def t(self) -> int:
        return len(self.interval)

    @property
    def local_level(self) -> int:
        return sum(self.base.a[i] for i in self.interval)

    @property
    def start(self) -> int:
        return self.interval[0]

    def to_local(self, vec: Sequence[int]) -> list[int]:
        """Renumber so the interval becomes 1..t (index 0 sits just before it)."""
        e = self.base.e
        return [vec[(m + self.start - 1) % e] for m in range(e)]

    def from_local(self, vec: Sequence[int]) -> tuple[int, ...]:
        e = self.base.e
        out = [0] * e
        for m in range(e):
            out[(m + self.start - 1) % e] = vec[m]
        return tuple(out)


@dataclass
class Vertex:
    content: Content
    hub: tuple[int, ...]
    defect: int
    degree: int
    count: int = 0
    multipartitions: Optional[list[Multipartition]] = None


@dataclass
class CrystalGraph:
    base: DominantWeight
    interval: Optional[tuple[int, ...]]
    vertices: dict[Content, Vertex] = field(default_factory=dict)
    edges: set[tuple[Content, Content, int]] = field(default_factory=set)

    def __len__(self) -> int:
        return len(self.vertices)

    def vertex(self, content: Sequence[int]) -> Vertex:
        return self.vertices[tuple(content)]

    def by_hub(self, h: Sequence[int]) -> Vertex:
        for v in self.vertices.values():
            if v.hub == tuple(h):
                return v
        raise KeyError(format_hub(h))

    def max_degree(self) -> int:
        return max(v.degree for v in self.vertices.values())

    def ordered_vertices(self) -> list[Vertex]:
        return sorted(self.vertices.values(), key=lambda v: (v.degree, v.content))

    def ordered_edges(self) -> list[tuple[Content, Content, int]]:
        return sorted(self.edges, key=lambda x: (sum(x[0]), x[0], x[2], x[1]))


def build_crystal(
    base: DominantWeight,
    max_degree: Optional[int] = None,
    restrict_to: Optional[Iterable[int]] = None,
    keep_multipartitions: bool = False,
) -> CrystalGraph:
    """Breadth-first search from the empty multipartition along the f_tilde operators.

    ``max_degree=None`` runs until no operator applies, which only terminates
    for a proper ``restrict_to``.
    """
    e = base.e
    residues = sorted(set(restrict_to)) if restrict_to is not None else list(range(e))
    if max_degree is None and len(residues) >= e:
        raise DomainError("an unbounded search needs a proper residue restriction")
    if max_degree is not None and max_degree < 0:
        raise DomainError("degree bound must be nonnegative")
    graph = CrystalGraph(base, tuple(residues) if restrict_to is not None else None)

    def add_vertex(c: Content) -> Vertex:
        v = graph.vertices.get(c)
        if v is None:
            d = defect(WeightPoint(base, c))
            v = Vertex(c, hub_of(e, base.a, c), d, sum(c), 0, [] if keep_multipartitions else None)
            graph.vertices[c] = v
        return v

    empty = Multipartition.empty(base.charge())
    level: dict[Multipartition, Content] = {empty: (0,) * e}
    degree = 0
    while level:
        for mp, c in level.items():
            v = add_vertex(c)
            v.count += 1
            if keep_multipartitions:
                v.multipartitions.append(mp)
        if max_degree is not None and degree >= max_degree:
            break
        nxt: dict[Multipartition, Content] = {}
        for mp, c in level.items():
            for i in residues:
                mp2 = f_tilde(mp, i)
                if mp2 is None:
                    continue
                c2 = c[:i] + (c[i] + 1,) + c[i + 1:]
                nxt[mp2] = c2
                graph.edges.add((c, c2, i))
        level = nxt
        degree += 1
    if keep_multipartitions:
        for v in graph.vertices.values():
            v.multipartitions.sort(key=Multipartition.sort_key, reverse=True)
    return graph


def face(spec: FaceSpec, keep_multipartitions: bool = False) -> CrystalGraph:
    return build_crystal(spec.base, None, spec.interval, keep_multipartitions)


def weyl_word_to_bottom(t: int) -> list[int]:
    """Reduced word (local indices, first reflection first) for the longest element of A_t.

    Sweep 1..t and back down to 1, then repeat on the inner interval 2..t-1.
    """
    word: list[int] = []
    lo, hi = 1, t
    while lo <= hi:
        word.extend(range(lo, hi + 1))
        word.extend(range(hi - 1, lo - 1, -1))
        lo, hi = lo + 1, hi - 1
    return word


def _local_hub_rho(spec: FaceSpec) -> list[int]:
    e, t, r = spec.base.e, spec.t, spec.local_level
    a = spec.to_local(spec.base.a)
    h = list(a)
    for k in range(1, t + 1):
        h[k] = -a[t + 1 - k]
    if e == t + 1:
        h[0] = a[0] + 2 * r
    else:
        h[0] = a[0] + r
        h[t + 1] = a[t + 1] + r
    return h


def rho_hub(spec: FaceSpec) -> tuple[int, ...]:
    """Hub of the lowest weight of the face.

    When the face leaves only one outside residue, the two boundary
    corrections land on the same entry and add.
    """
    return spec.from_local(_local_hub_rho(spec))


def rho_content(spec: FaceSpec) -> Content:
    """Content of rho, found by reflecting the highest weight along a reduced word."""
    p = spec.base.top()
    for k in weyl_word_to_bottom(spec.t):
        p = _reflect_unchecked(p, spec.interval[k - 1])
    return p.content


def _reflect_unchecked(p: WeightPoint, i: int) -> WeightPoint:
    c = list(p.content)
    c[i] += hub_of(p.base.e, p.base.a, p.content)[i]
    return WeightPoint(p.base, tuple(c))


def rho_degree(spec: FaceSpec) -> int:
    """Degree of rho: sum of a_k k (t+1-k) over the interval, written pairwise."""
    a = spec.to_local(spec.base.a)
    t = spec.t
    total = 0
    for k in range(1, t // 2 + 1):
        total += (a[k] + a[t + 1 - k]) * k * (t + 1 - k)
    if t % 2:
        c = (t + 1) // 2
        total += a[c] * c * c
    return total


def in_face(spec: FaceSpec, content: Sequence[int]) -> bool:
    """Whether a weight lies in the face, by moving it to the dominant chamber of the interval."""
    e = spec.base.e
    if len(content) != e or any(x < 0 for x in content):
        return False
    if any(content[i] for i in range(e) if i not in spec.interval):
        return False
    C = cartan_matrix(e)
    c = list(content)
    while True:
        h = [spec.base.a[i] - sum(C[i][j] * c[j] for j in range(e)) for i in range(e)]
        neg = [i for i in spec.interval if h[i] < 0]
        if not neg:
            return all(x >= 0 for x in c)
        c[neg[0]] += h[neg[0]]


def tau_hub(spec: FaceSpec, h: Sequence[int]) -> tuple[int, ...]:
    """The face involution written on hubs; the entries past the interval's neighbours are kept."""
    e, t, r = spec.base.e, spec.t, spec.local_level
    if e == t + 1:
        raise DomainError("the hub formula needs e >= t+2; use tau on weights")
    a = spec.to_local(spec.base.a)
    b = spec.to_local(h)
    out = list(b)
    out[0] = a[0] + r - (b[t + 1] - a[t + 1])
    for k in range(1, t + 1):
        out[k] = -b[t + 1 - k]
    out[t + 1] = a[t + 1] + r - (b[0] - a[0])
    return spec.from_local(out)


def tau(spec: FaceSpec, p: WeightPoint) -> WeightPoint:
    if p.base != spec.base:
        raise DomainError("the weight belongs to a different highest weight")
    if not in_face(spec, p.content):
        raise DomainError(f"content {list(p.content)} is not in the face")
    e, t = spec.base.e, spec.t
    if e >= t + 2:
        c = content_from_hub(spec.base, tau_hub(spec, hub_of(e, p.base.a, p.content)), spec.interval)
    else:
        # rho minus the mirrored content, read on the interval
        rho = spec.to_local(rho_content(spec))
        local = spec.to_local(p.content)
        image = [0] * e
        for k in range(1, t + 1):
            image[k] = rho[k] - local[t + 1 - k]
        c = spec.from_local(image)
    return WeightPoint(spec.base, c, p.delta_shift)


def to_json(graph: CrystalGraph) -> str:
    verts = graph.ordered_vertices()
    index = {v.content: n for n, v in enumerate(verts)}
    data = {
        "e": graph.base.e,
        "lambda": list(graph.base.a),
        "interval": list(graph.interval) if graph.interval is not None else None,
        "vertices": [
            {"content": list(v.content), "hub": list(v.hub), "defect": v.defect, "count": v.count}
            for v in verts
        ],
        "edges": [
            {"from": index[a], "to": index[b], "residue": i} for a, b, i in graph.ordered_edges()
        ],
    }
    return json.dumps(data, indent=2)


def from_json(text: str) -> CrystalGraph:
    data = json.loads(text)
    base = DominantWeight(data["e"], tuple(data["lambda"]))
    iv = data.get("interval")
    graph = CrystalGraph(base, tuple(iv) if iv is not None else None)
    contents = []
    for v in data["vertices"]:
        c = tuple(v["content"])
        vert = Vertex(c, tuple(v["hub"]), v["defect"], sum(c), v["count"])
        if vert.hub != hub_of(base.e, base.a, c) or vert.defect != defect(WeightPoint(base, c)):
            raise IntegrityError(f"stored data for vertex {list(c)} is inconsistent")
        graph.vertices[c] = vert
        contents.append(c)
    for ed in data["edges"]:
        graph.edges.add((contents[ed["from"]], contents[ed["to"]], ed["residue"]))
    return graph


def to_dot(graph: CrystalGraph) -> str:
    verts = graph.ordered_vertices()
    index = {v.content: n for n, v in enumerate(verts)}
    lines = ["digraph crystal {"]
    for v in verts:
        lines.append(f'  v{index[v.content]} [label="{format_hub(v.hub)}^{v.defect}"];')
    for a, b, i in graph.ordered_edges():
        lines.append(f'  v{index[a]} -> v{index[b]} [label="{i}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def export(graph: CrystalGraph, fmt: str) -> bytes:
    if fmt == "dot":
        return to_dot(graph).encode()
    if fmt == "json":
        return to_json(graph).encode()
    raise DomainError(f"unknown export format {fmt!r}")

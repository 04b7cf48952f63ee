"""Edge-3-colorings, signed Penrose sums, map faces and 4-colorings.

An edge coloring assigns {1,2,3} to the edges (indexed in file order);
properness means every vertex sees three distinct colors, so loops kill
all colorings outright.  Each proper coloring carries a sign: the product
over vertices of the parity of the color permutation read in the vertex's
cyclic dart order.  The signed total is the weight for the so(3)
normalization with identity metric, and 2^{v/2} times it is the sl(2)
weight — both facts are cross-checked against the tensor route in tests
rather than assumed here.

The map side: a spherical marking turns the graph into a planar map whose
faces can be 4-colored by the Klein group H = Z/2 x Z/2 (encoded 0..3
with XOR as addition); coloring each edge by the XOR of its two face
colors is the classical Tait correspondence, verified exhaustively.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import TrivalentGraph, face_orbits
from .ribbon import Marking, rotation_of_marking

EdgeColoring = tuple[int, ...]
FaceColoring = tuple[int, ...]

_EVEN = {(1, 2, 3), (2, 3, 1), (3, 1, 2)}
_PERMS = _EVEN | {(1, 3, 2), (3, 2, 1), (2, 1, 3)}


def enumerate_edge_3_colorings(g: TrivalentGraph) -> list[EdgeColoring]:
    """All proper colorings, backtracking over edges in index order with
    colors tried 1, 2, 3 — a fixed, reproducible output order."""
    edges = g.edges()
    ne = len(edges)
    used = [0] * g.vertex_count  # bitmask of colors present at each vertex
    chosen = [0] * ne
    out: list[EdgeColoring] = []

    def place(k: int):
        if k == ne:
            out.append(tuple(chosen))
            return
        d, dd = edges[k]
        a, b = d // 3, dd // 3
        if a == b:
            return  # a loop repeats its color at the vertex: dead end
        for c in (1, 2, 3):
            bit = 1 << c
            if used[a] & bit or used[b] & bit:
                continue
            used[a] |= bit
            used[b] |= bit
            chosen[k] = c
            place(k + 1)
            used[a] ^= bit
            used[b] ^= bit

    place(0)
    return out


def coloring_sign(g: TrivalentGraph, c: EdgeColoring) -> int:
    """Product over vertices of the sign of the color permutation read
    counterclockwise; raises ValueError on an improper coloring."""
    edges = g.edges()
    if len(c) != len(edges):
        raise ValueError("coloring length does not match edge count")
    edge_of = [0] * g.dart_count
    for k, (d, dd) in enumerate(edges):
        edge_of[d] = k
        edge_of[dd] = k
    sign = 1
    for i in range(g.vertex_count):
        perm = tuple(c[edge_of[3 * i + k]] for k in range(3))
        if perm not in _PERMS:
            raise ValueError(f"improper coloring at vertex {i}: {perm}")
        if perm not in _EVEN:
            sign = -sign
    return sign


def penrose_sum(g: TrivalentGraph) -> int:
    """Signed count of proper edge-3-colorings."""
    return sum(coloring_sign(g, c) for c in enumerate_edge_3_colorings(g))


def w_sl2(g: TrivalentGraph) -> int:
    """2^{v/2} times the signed coloring count — the sl(2) weight."""
    return 2 ** (g.vertex_count // 2) * penrose_sum(g)


@dataclass(frozen=True)
class PlanarMap:
    """Faces of a genus-0 rotation system of a trivalent graph.

    ``graph`` is the re-oriented graph itself (edge indexing below refers
    to its edges()); ``edge_faces[k]`` gives the two face indices on the
    sides of edge k (equal means the face borders itself); ``outer_face``
    is the designated face at infinity: the one containing dart 0.
    """

    graph: TrivalentGraph
    faces: tuple[tuple[int, ...], ...]
    edge_faces: tuple[tuple[int, int], ...]
    outer_face: int

    def is_self_bordering(self) -> bool:
        return any(a == b for a, b in self.edge_faces)


def extract_map(g: TrivalentGraph, m: Marking) -> PlanarMap:
    """Build the map of the spherical rotation chosen by ``m``."""
    rot = rotation_of_marking(g, m)
    faces = tuple(face_orbits(rot))
    if len(faces) != g.vertex_count // 2 + 2:
        raise ValueError("marking is not spherical")
    face_of = [0] * rot.dart_count
    for idx, cyc in enumerate(faces):
        for d in cyc:
            face_of[d] = idx
    edge_faces = tuple((face_of[d], face_of[dd]) for d, dd in rot.edges())
    return PlanarMap(rot, faces, edge_faces, face_of[0])


def enumerate_four_colorings(pm: PlanarMap,
                             fix_outer: int | None = None) -> list[FaceColoring]:
    """All proper face colorings by H = {0,1,2,3}, faces colored in index
    order with colors tried ascending; optionally pin the outer face."""
    nf = len(pm.faces)
    adj: list[set[int]] = [set() for _ in range(nf)]
    for a, b in pm.edge_faces:
        if a == b:
            return []  # self-bordering face can never be proper
        adj[a].add(b)
        adj[b].add(a)
    chosen = [-1] * nf
    out: list[FaceColoring] = []

    def place(k: int):
        if k == nf:
            out.append(tuple(chosen))
            return
        options = (fix_outer,) if k == pm.outer_face and fix_outer is not None \
            else (0, 1, 2, 3)
        for h in options:
            if any(chosen[f] == h for f in adj[k] if chosen[f] >= 0):
                continue
            chosen[k] = h
            place(k + 1)
            chosen[k] = -1

    place(0)
    return out


def count_four_colorings(pm: PlanarMap) -> int:
    """Proper 4-colorings of the faces; 0 when a face borders itself."""
    return len(enumerate_four_colorings(pm))


def tait_edge_coloring(pm: PlanarMap, fc: FaceColoring) -> EdgeColoring:
    """Color each edge by the XOR of its two face colors.

    The nonzero elements of H are identified with the edge colors as
    1 -> 1, 2 -> 2, 3 -> 3.  Raises ValueError if ``fc`` is improper
    (equal colors across some edge, including self-bordering faces).
    """
    if len(fc) != len(pm.faces):
        raise ValueError("face coloring length does not match face count")
    result = []
    for k, (a, b) in enumerate(pm.edge_faces):
        h = fc[a] ^ fc[b]
        if h == 0:
            raise ValueError(f"improper face coloring across edge {k}")
        result.append(h)
    return tuple(result)


def verify_tait_bijection(pm: PlanarMap) -> str | None:
    """Check that face colorings with the outer face pinned to 0 map
    one-to-one onto the proper edge-3-colorings; None if so, else a
    description of the first discrepancy."""
    three = enumerate_edge_3_colorings(pm.graph)
    pinned = enumerate_four_colorings(pm, fix_outer=0)
    images = []
    for fc in pinned:
        ec = tait_edge_coloring(pm, fc)
        try:
            coloring_sign(pm.graph, ec)
        except ValueError:
            return f"image of {fc} is not a proper edge coloring"
        images.append(ec)
    if len(set(images)) != len(images):
        return "two pinned face colorings map to one edge coloring"
    if set(images) != set(three):
        missed = set(three) - set(images)
        extra = set(images) - set(three)
        return f"image mismatch: missed {sorted(missed)}, extra {sorted(extra)}"
    total = count_four_colorings(pm)
    if total != 4 * len(three):
        return f"count mismatch: {total} != 4 * {len(three)}"
    return None

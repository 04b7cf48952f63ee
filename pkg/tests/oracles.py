"""Independent reference implementations used only by the tests.

Everything here recomputes package results by a different, dumber route:
the state sum by explicit summation over index assignments, face counts
by walking per-vertex successor lists, coloring counts by raw 3^e / 4^f
enumeration, and polynomial recovery by exact Lagrange interpolation.
Slow on purpose; cross-checks, not tools.
"""

from fractions import Fraction
from itertools import product


def naive_weight(g, alg):
    """The state sum straight from its definition.

    One index per dart; per vertex a factor f on its darts read in
    counterclockwise order, per edge a factor t_inv on its dart pair.
    Enumeration runs over nonzero vertex entries only (the full D^{3v}
    grid in naive_weight_full), which keeps v = 4 affordable.
    """
    dim = alg.dim
    nonzero = [(a, b, c, alg.f[a][b][c])
               for a in range(dim) for b in range(dim) for c in range(dim)
               if alg.f[a][b][c]]
    edges = g.edges()
    total = Fraction(0)
    assign = [0] * g.dart_count
    for combo in product(nonzero, repeat=g.vertex_count):
        factor = 1
        for i, (a, b, c, val) in enumerate(combo):
            assign[3 * i] = a
            assign[3 * i + 1] = b
            assign[3 * i + 2] = c
            factor *= val
        for d, dd in edges:
            factor *= alg.t_inv[assign[d]][assign[dd]]
            if not factor:
                break
        total += factor
    return int(total) if total.denominator == 1 else total


def naive_weight_full(g, alg):
    """Unfiltered D^(3v) grid; only bearable for v = 2 and small dim."""
    dim = alg.dim
    edges = g.edges()
    total = Fraction(0)
    for assign in product(range(dim), repeat=g.dart_count):
        factor = 1
        for i in range(g.vertex_count):
            factor *= alg.f[assign[3 * i]][assign[3 * i + 1]][assign[3 * i + 2]]
            if not factor:
                break
        else:
            for d, dd in edges:
                factor *= alg.t_inv[assign[d]][assign[dd]]
                if not factor:
                    break
            total += factor
    return int(total) if total.denominator == 1 else total


def face_count_by_lists(alpha):
    """Face count from per-vertex successor lists instead of dart
    arithmetic: vertex i keeps its darts in a cyclic list, and a face
    step crosses the edge then advances one position counterclockwise."""
    n = len(alpha)
    cyclic = {}
    for i in range(n // 3):
        darts = [3 * i, 3 * i + 1, 3 * i + 2]
        for k, d in enumerate(darts):
            cyclic[d] = darts[(k + 1) % 3]
    unvisited = set(range(n))
    faces = 0
    while unvisited:
        faces += 1
        d = next(iter(sorted(unvisited)))
        while d in unvisited:
            unvisited.remove(d)
            d = cyclic[alpha[d]]
    return faces


def brute_edge_3_coloring_count(g):
    """All 3^e assignments, filtered for properness at every vertex."""
    edges = g.edges()
    edge_of = {}
    for k, (d, dd) in enumerate(edges):
        edge_of[d] = k
        edge_of[dd] = k
    count = 0
    for colors in product((1, 2, 3), repeat=len(edges)):
        ok = True
        for i in range(g.vertex_count):
            seen = {colors[edge_of[3 * i + t]] for t in range(3)}
            if len(seen) != 3:
                ok = False
                break
        if ok:
            count += 1
    return count


def brute_signed_coloring_sum(g):
    """Signed version of the brute count, parity read per vertex."""
    even = {(1, 2, 3), (2, 3, 1), (3, 1, 2)}
    edges = g.edges()
    edge_of = {}
    for k, (d, dd) in enumerate(edges):
        edge_of[d] = k
        edge_of[dd] = k
    total = 0
    for colors in product((1, 2, 3), repeat=len(edges)):
        sign = 1
        for i in range(g.vertex_count):
            perm = tuple(colors[edge_of[3 * i + t]] for t in range(3))
            if len(set(perm)) != 3:
                sign = 0
                break
            if perm not in even:
                sign = -sign
        total += sign
    return total


def brute_four_coloring_count(edge_faces, num_faces):
    """All 4^f face assignments against the adjacency list."""
    count = 0
    for colors in product(range(4), repeat=num_faces):
        if all(colors[a] != colors[b] for a, b in edge_faces):
            count += 1
    return count


def lagrange_int_poly(points):
    """Exact interpolation through (x, y) pairs; returns a coefficient
    dict exponent -> int and raises if any coefficient is fractional."""
    coeffs = {}
    for xi, yi in points:
        basis = {0: Fraction(yi)}
        denom = Fraction(1)
        for xj, _ in points:
            if xj == xi:
                continue
            denom *= xi - xj
            shifted = {}
            for e, c in basis.items():
                shifted[e + 1] = shifted.get(e + 1, Fraction(0)) + c
                shifted[e] = shifted.get(e, Fraction(0)) - c * xj
            basis = shifted
        for e, c in basis.items():
            coeffs[e] = coeffs.get(e, Fraction(0)) + c / denom
    out = {}
    for e, c in coeffs.items():
        if c:
            if c.denominator != 1:
                raise ValueError(f"non-integer coefficient {c} at exponent {e}")
            out[e] = int(c)
    return out

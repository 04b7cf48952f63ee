"""Weight of a graph as a closed tensor network, contracted exactly.

Each vertex ``i`` contributes the rank-3 tensor ``f`` with legs labelled by
its darts ``(3i, 3i+1, 3i+2)`` in rotation order; each edge ``(d, d')``
contributes the inverse metric with legs ``(d, d')``.  Every dart appears
on exactly two tensors, so pairwise contraction closes the network down to
a scalar — the weight.

Tensors are dense flat lists in row-major leg order.  Contraction walks
only the nonzero entries (structure tensors are extremely sparse), and the
pair to merge next is chosen greedily: smallest resulting tensor first,
ties broken by the lowest shared dart label, which makes the contraction
order — and hence every intermediate — reproducible.
"""

from __future__ import annotations

from fractions import Fraction

from .algebra import MetrizedLieAlgebra, Scalar
from .graphs import TrivalentGraph


class _Tensor:
    __slots__ = ("legs", "data")

    def __init__(self, legs: tuple[int, ...], data: list):
        self.legs = legs
        self.data = data


def _split_on(t: _Tensor, shared: list[int], dim: int):
    """Bucket nonzero entries by their values on the shared legs.

    Returns (kept leg labels, {shared-key: [(kept flat index, value), ...]}).
    """
    rank = len(t.legs)
    strides = [dim ** (rank - 1 - k) for k in range(rank)]
    shared_pos = [t.legs.index(l) for l in shared]
    keep_pos = [k for k in range(rank) if t.legs[k] not in shared]
    buckets: dict[tuple[int, ...], list[tuple[int, Scalar]]] = {}
    for p, val in enumerate(t.data):
        if not val:
            continue
        key = tuple((p // strides[k]) % dim for k in shared_pos)
        kidx = 0
        for k in keep_pos:
            kidx = kidx * dim + (p // strides[k]) % dim
        buckets.setdefault(key, []).append((kidx, val))
    return [t.legs[k] for k in keep_pos], buckets


def _contract_pair(a: _Tensor, b: _Tensor, dim: int) -> _Tensor:
    shared = sorted(set(a.legs) & set(b.legs))
    keep_a, by_a = _split_on(a, shared, dim)
    keep_b, by_b = _split_on(b, shared, dim)
    span_b = dim ** len(keep_b)
    out = [0] * (dim ** len(keep_a) * span_b)
    for key, ents_a in by_a.items():
        ents_b = by_b.get(key)
        if not ents_b:
            continue
        for ia, va in ents_a:
            base = ia * span_b
            for ib, vb in ents_b:
                out[base + ib] += va * vb
    return _Tensor(tuple(keep_a + keep_b), out)


def _network(g: TrivalentGraph, alg: MetrizedLieAlgebra) -> list[_Tensor]:
    dim = alg.dim
    flat_f = [alg.f[a][b][c]
              for a in range(dim) for b in range(dim) for c in range(dim)]
    flat_t = [alg.t_inv[a][b] for a in range(dim) for b in range(dim)]
    tensors = [_Tensor((3 * i, 3 * i + 1, 3 * i + 2), list(flat_f))
               for i in range(g.vertex_count)]
    tensors.extend(_Tensor((d, dd), list(flat_t)) for d, dd in g.edges())
    return tensors


def _normalize(x: Scalar) -> Scalar:
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x)
    return x


def evaluate_weight(g: TrivalentGraph, alg: MetrizedLieAlgebra) -> Scalar:
    """Contract the network of ``g`` over ``alg``; exact int or Fraction."""
    dim = alg.dim
    tensors = _network(g, alg)
    if not tensors:
        return 1
    while len(tensors) > 1:
        best = None
        best_pair = None
        for i in range(len(tensors)):
            for j in range(i + 1, len(tensors)):
                shared = set(tensors[i].legs) & set(tensors[j].legs)
                if not shared:
                    continue
                out_rank = (len(tensors[i].legs) + len(tensors[j].legs)
                            - 2 * len(shared))
                key = (dim ** out_rank, min(shared))
                if best is None or key < best:
                    best, best_pair = key, (i, j)
        if best_pair is None:
            # only scalars left (one per connected component)
            prod = 1
            for t in tensors:
                prod *= t.data[0]
            return _normalize(prod)
        i, j = best_pair
        merged = _contract_pair(tensors[i], tensors[j], dim)
        tensors = [t for k, t in enumerate(tensors) if k != i and k != j]
        tensors.append(merged)
    return _normalize(tensors[0].data[0])

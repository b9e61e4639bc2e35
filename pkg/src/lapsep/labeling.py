"""Tensor factorizations and vertex labelings.

A labeling is a bijection from vertices to index tuples of a tensor
factorization (p1, ..., pm).  Internally a labeling is stored as the
permutation ``perm`` with ``perm[v] = flatten(tuple of v)``; the first
factor is the most significant mixed-radix digit, matching the usual
Kronecker-product row ordering.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

import numpy as np

MAX_ENUM_N = 12


@dataclass(frozen=True)
class TensorShape:
    """Ordered factorization (p1, ..., pm), every factor >= 2, m >= 2."""

    factors: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(int(p) for p in self.factors))
        if len(self.factors) < 2:
            raise ValueError("a tensor shape needs at least two factors")
        if any(p < 2 for p in self.factors):
            raise ValueError("every tensor factor must be >= 2")

    @property
    def n(self) -> int:
        out = 1
        for p in self.factors:
            out *= p
        return out

    @property
    def m(self) -> int:
        return len(self.factors)

    @classmethod
    def parse(cls, text: str) -> "TensorShape":
        try:
            factors = tuple(int(part) for part in text.lower().split("x"))
        except ValueError:
            raise ValueError(f"cannot parse shape {text!r}; expected e.g. '2x3'") from None
        return cls(factors)

    def __str__(self) -> str:
        return "x".join(str(p) for p in self.factors)


@lru_cache(maxsize=None)
def _strides(factors: tuple[int, ...]) -> tuple[int, ...]:
    out, acc = [], 1
    for p in reversed(factors):
        out.append(acc)
        acc *= p
    return tuple(reversed(out))


def flatten(tup: tuple[int, ...], shape: TensorShape) -> int:
    """Mixed-radix value of a 1-based index tuple; bijective onto 0..n-1."""
    if len(tup) != shape.m:
        raise ValueError(f"tuple length {len(tup)} does not match shape {shape}")
    strides = _strides(shape.factors)
    total = 0
    for t, p, stride in zip(tup, shape.factors, strides):
        if not 1 <= t <= p:
            raise ValueError(f"component {t} out of range 1..{p}")
        total += (t - 1) * stride
    return total


def unflatten(index: int, shape: TensorShape) -> tuple[int, ...]:
    if not 0 <= index < shape.n:
        raise ValueError(f"index {index} out of range for shape {shape}")
    out = []
    for stride in _strides(shape.factors):
        out.append(index // stride + 1)
        index %= stride
    return tuple(out)


@dataclass(frozen=True)
class VertexLabeling:
    """Bijection vertices -> tuples, stored as the flattened permutation."""

    shape: TensorShape
    perm: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "perm", tuple(int(x) for x in self.perm))
        n = self.shape.n
        if sorted(self.perm) != list(range(n)):
            raise ValueError("labeling is not a bijection onto 0..n-1")

    @property
    def n(self) -> int:
        return self.shape.n

    def assignment(self, v: int) -> tuple[int, ...]:
        return unflatten(self.perm[v], self.shape)

    def vertex_at(self, position: int) -> int:
        return self.perm.index(position)

    def position_array(self) -> np.ndarray:
        return np.array(self.perm, dtype=np.int64)

    def relabel_positions(self, position_map: tuple[int, ...]) -> "VertexLabeling":
        """Compose with a position permutation (a symmetry-group action)."""
        return VertexLabeling(self.shape, tuple(position_map[x] for x in self.perm))

    def as_line(self) -> str:
        return " ".join(str(x) for x in self.perm)

    @classmethod
    def from_line(cls, shape: TensorShape, line: str) -> "VertexLabeling":
        try:
            perm = tuple(int(tok) for tok in line.split())
        except ValueError:
            raise ValueError(f"cannot parse labeling line {line!r}") from None
        if len(perm) != shape.n:
            raise ValueError(f"labeling line has {len(perm)} entries, expected {shape.n}")
        return cls(shape, perm)

    @classmethod
    def identity(cls, shape: TensorShape) -> "VertexLabeling":
        return cls(shape, tuple(range(shape.n)))

    @classmethod
    def from_tuples(cls, shape: TensorShape,
                    tuples: dict[int, tuple[int, ...]]) -> "VertexLabeling":
        if sorted(tuples) != list(range(shape.n)):
            raise ValueError("tuple assignment must cover vertices 0..n-1")
        return cls(shape, tuple(flatten(tuples[v], shape) for v in range(shape.n)))


# -- labeling symmetries -------------------------------------------------------
#
# Two labelings that differ by a permutation of index values inside one
# factor, or by swapping two factors of equal size, give density matrices
# related by local permutation matrices (resp. a simultaneous factor swap),
# so the separability verdict and the degree condition agree on them.  The
# reduced enumeration emits one representative per orbit of that group.


@lru_cache(maxsize=None)
def position_symmetry_maps(shape: TensorShape) -> tuple[tuple[int, ...], ...]:
    """All position permutations of the verdict-preserving labeling group.

    The group is generated by (a) index permutations within each factor and
    (b) swaps of equal-size factors; its order is (prod p_i!) * |size-
    preserving factor permutations|.  Returned as flat-position maps.
    """
    factors = shape.factors
    m = shape.m
    n = shape.n
    factor_perm_choices = [list(itertools.permutations(range(1, p + 1))) for p in factors]
    size_preserving = [sigma for sigma in itertools.permutations(range(m))
                       if all(factors[sigma[i]] == factors[i] for i in range(m))]
    tuples = [unflatten(x, shape) for x in range(n)]
    maps = []
    for sigma in size_preserving:
        for pis in itertools.product(*factor_perm_choices):
            gpos = []
            for t in tuples:
                image = tuple(pis[i][t[sigma[i]] - 1] for i in range(m))
                gpos.append(flatten(image, shape))
            maps.append(tuple(gpos))
    assert len(set(maps)) == len(maps), "symmetry maps must be distinct"
    return tuple(maps)


def symmetry_group_order(shape: TensorShape) -> int:
    return len(position_symmetry_maps(shape))


def _reduced_perm_stream(shape: TensorShape) -> Iterator[tuple[int, ...]]:
    """Lexicographically smallest representative of each symmetry orbit.

    A permutation w is canonical iff g(w) >= w lexicographically for every
    group element g acting on positions.  The DFS keeps the set of elements
    still tied with the prefix; a candidate value v is pruned when some tied
    g has g(v) < v, since that g would produce a smaller labeling.
    """
    n = shape.n
    maps = [g for g in position_symmetry_maps(shape)
            if g != tuple(range(n))]
    used = [False] * n
    word = [0] * n

    def rec(v: int, active: list[tuple[int, ...]]) -> Iterator[tuple[int, ...]]:
        if v == n:
            yield tuple(word)
            return
        for val in range(n):
            if used[val]:
                continue
            nxt = []
            dominated = False
            for g in active:
                gv = g[val]
                if gv < val:
                    dominated = True
                    break
                if gv == val:
                    nxt.append(g)
            if dominated:
                continue
            used[val] = True
            word[v] = val
            yield from rec(v + 1, nxt)
            used[val] = False

    yield from rec(0, maps)


def count_reduced_labelings(shape: TensorShape) -> int:
    """Orbit count: the group acts freely, so it is n! / |group|."""
    import math
    return math.factorial(shape.n) // symmetry_group_order(shape)


def enumerate_labelings(n: int, shape: TensorShape,
                        reduced: bool = False) -> Iterator[VertexLabeling]:
    """All n! labelings, or one representative per symmetry orbit.

    Both streams are emitted in lexicographic order of the permutation
    line, so "first labeling with property X" is the same labeling in
    either mode whenever X is invariant under the symmetry group.
    """
    if shape.n != n:
        raise ValueError(f"shape {shape} has product {shape.n}, not n={n}")
    if n > MAX_ENUM_N:
        raise ValueError(f"labeling enumeration supported up to n={MAX_ENUM_N}")
    if reduced:
        for perm in _reduced_perm_stream(shape):
            yield VertexLabeling(shape, perm)
    else:
        for perm in itertools.permutations(range(n)):
            yield VertexLabeling(shape, perm)

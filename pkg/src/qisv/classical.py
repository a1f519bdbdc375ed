"""Increasing sequences, permutations and subgroup closure.

This is the classical layer the symbolic maps are checked against.
Permutations act on ``{1, ..., n}`` and compose as functions:
``(s * t)(x) == s(t(x))``. Cycle notation ``(a b c)`` means a -> b -> c -> a.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np


class SequenceError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class IncreasingSequence:
    values: tuple[int, ...]
    n: int

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(int(v) for v in self.values))
        v = self.values
        if len(v) > self.n:
            raise SequenceError(f"length {len(v)} exceeds n={self.n}")
        if any(a >= b for a, b in zip(v, v[1:])):
            raise SequenceError(f"{v} is not strictly increasing")
        if v and (v[0] < 1 or v[-1] > self.n):
            raise SequenceError(f"{v} has values outside 1..{self.n}")

    @property
    def k(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __len__(self) -> int:
        return len(self.values)


@dataclass(frozen=True, order=True)
class Permutation:
    one_line: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "one_line", tuple(int(v) for v in self.one_line))
        if sorted(self.one_line) != list(range(1, len(self.one_line) + 1)):
            raise SequenceError(f"{self.one_line} is not a permutation of 1..{len(self.one_line)}")

    @property
    def n(self) -> int:
        return len(self.one_line)

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], n: int) -> Permutation:
        img = list(range(1, n + 1))
        for cyc in cycles:
            for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
                img[a - 1] = b
        return cls(tuple(img))

    def __call__(self, x: int) -> int:
        return self.one_line[x - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        if other.n != self.n:
            raise SequenceError("cannot compose permutations of different degrees")
        s = self.one_line
        return Permutation(tuple(s[t - 1] for t in other.one_line))

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for i, v in enumerate(self.one_line, 1):
            inv[v - 1] = i
        return Permutation(tuple(inv))

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its smallest point."""
        seen, out = set(), []
        for start in range(1, self.n + 1):
            if start in seen:
                continue
            cyc, x = [], start
            while x not in seen:
                seen.add(x)
                cyc.append(x)
                x = self(x)
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def cycle_str(self) -> str:
        cyc = self.cycles()
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc) if cyc else "()"

    def matrix(self) -> np.ndarray:
        """0/1 matrix with a 1 at (s(j), j)."""
        a = np.zeros((self.n, self.n), dtype=np.int64)
        a[np.array(self.one_line) - 1, np.arange(self.n)] = 1
        return a

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.one_line)) + ")"


def enumerate_sequences(k: int, n: int) -> list[IncreasingSequence]:
    """All increasing sequences of length k in 1..n, lexicographically."""
    if not 0 <= k <= n:
        raise SequenceError(f"need 0 <= k <= n, got k={k}, n={n}")
    return [IncreasingSequence(c, n) for c in combinations(range(1, n + 1), k)]


def matrix_rep(s: IncreasingSequence) -> np.ndarray:
    """n x k 0/1 matrix with a single 1 in column l, at row s[l]."""
    a = np.zeros((s.n, s.k), dtype=np.int64)
    if s.k:
        a[np.array(s.values) - 1, np.arange(s.k)] = 1
    return a


def complete(s: IncreasingSequence) -> Permutation:
    """Send l to s[l] for l <= k, then fill k+1..n with the unused values in
    increasing order."""
    used = set(s.values)
    rest = [v for v in range(1, s.n + 1) if v not in used]
    return Permutation(s.values + tuple(rest))


def closure(gens: Iterable[Permutation], n: int) -> set[Permutation]:
    """The subgroup of S_n generated by ``gens``, by breadth-first search.

    Every element is a product of generators, so right-multiplying the
    frontier by generators reaches the whole group; finiteness gives
    inverses and the identity. The search stops early once all n! elements
    are found.
    """
    gens = list(dict.fromkeys(gens))
    for g in gens:
        if g.n != n:
            raise SequenceError(f"{g} is not a permutation of 1..{n}")
    if not gens:
        return {Permutation.identity(n)}
    full = math.factorial(n)
    seen = _closure_arrays(np.array([g.one_line for g in gens], dtype=np.int8), n, full)
    return {Permutation(tuple(int(x) for x in row)) for row in seen}


def _encode(a: np.ndarray, n: int) -> np.ndarray:
    weights = (n ** np.arange(a.shape[1] - 1, -1, -1)).astype(np.int64)
    return (a.astype(np.int64) - 1) @ weights


def _closure_arrays(gens: np.ndarray, n: int, full: int) -> np.ndarray:
    # rows are one-line tuples; composition s*t is s[t - 1]
    idx = gens.astype(np.intp) - 1
    gens = np.unique(gens, axis=0)
    seen_codes = np.unique(_encode(gens, n))
    elements = [gens]
    frontier = gens
    while len(frontier) and len(seen_codes) < full:
        found = []
        for g in idx:
            prod = frontier[:, g]
            codes = _encode(prod, n)
            codes, first = np.unique(codes, return_index=True)
            fresh = ~np.isin(codes, seen_codes, assume_unique=True)
            if fresh.any():
                seen_codes = np.union1d(seen_codes, codes[fresh])
                found.append(prod[first[fresh]])
            if len(seen_codes) >= full:
                break
        frontier = np.concatenate(found) if found else frontier[:0]
        elements.append(frontier)
    return np.concatenate(elements)


def witness_generators(k: int, n: int) -> list[Permutation]:
    """Completions of the three sequences used to show I_{k,n} generates S_n.

    They are, in order: the transposition (k k+1); the cycle
    (k n n-1 ... k+1), which is the inverse of (k k+1 ... n); and the cycle
    (1 2 ... k+1).
    """
    if not 1 <= k <= n - 1:
        raise SequenceError(f"need 1 <= k <= n-1, got k={k}, n={n}")
    head = tuple(range(1, k))
    seqs = [
        IncreasingSequence(head + (k + 1,), n),
        IncreasingSequence(head + (n,), n),
        IncreasingSequence(tuple(range(2, k + 2)), n),
    ]
    out = [complete(s) for s in seqs]
    expected = [
        Permutation.from_cycles([(k, k + 1)], n),
        Permutation.from_cycles([tuple(range(k, n + 1))], n).inverse(),
        Permutation.from_cycles([tuple(range(1, k + 2))], n),
    ]
    for got, want in zip(out, expected):
        if got != want:
            raise AssertionError(f"completion {got} differs from expected generator {want.cycle_str()}")
    return out


def completions(k: int, n: int) -> list[Permutation]:
    return [complete(s) for s in enumerate_sequences(k, n)]

"""Commutative 0/1 models of the presentations.

A model sends each generator to a number so that every relation holds.
Increasing sequences give models of C(I^+_{k,n}) through their matrix
representation and permutations give models of C(S_n^+) through their
permutation matrix. Models can only refute an identity, never prove one.
"""

from __future__ import annotations

import itertools
import math
import random
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

import numpy as np

from .algebra import AlgebraError, Element, GeneratorId
from .classical import IncreasingSequence, Permutation, complete, enumerate_sequences, matrix_rep
from .morphisms import CheckReport, Status, Witness, apply, curran_map
from .presentations import Kind, Presentation, magic_presentation, qis_presentation


class ModelError(RuntimeError):
    """A supposed model violates a relation of its presentation."""


@dataclass(frozen=True)
class Assignment:
    presentation: Presentation
    values: dict  # GeneratorId -> Fraction, every declared generator
    label: str = ""

    def __post_init__(self):
        for g in self.presentation.generators:
            if g not in self.values:
                raise ModelError(f"{self.label}: no value for {g}")
        for r in self.presentation.rules:
            if evaluate(r.relation, self) != 0:
                raise ModelError(f"{self.label}: rule {r} fails")
        for rel in self.presentation.linear_relations:
            if evaluate(rel, self) != 0:
                raise ModelError(f"{self.label}: relation {rel} = 0 fails")

    def __getitem__(self, g: GeneratorId) -> Fraction:
        return self.values[g]


def evaluate(a: Element, m: Assignment) -> Fraction:
    """Point evaluation; exact."""
    if a.tag is not None and a.tag != m.presentation.tag:
        raise AlgebraError(f"cannot evaluate an element of {a.tag} in a model of {m.presentation.tag}")
    vals = m.values
    total = Fraction(0)
    for word, c in a.items():
        v = c
        for g in word:
            v *= vals[g]
            if not v:
                break
        total += v
    return total


def commutative_model(s: IncreasingSequence, k: int, n: int) -> Assignment:
    if s.k != k or s.n != n:
        raise AlgebraError(f"{s} is not in I_{k},{n}")
    pres = qis_presentation(k, n)
    a = matrix_rep(s)
    values = {g: Fraction(int(a[g.row - 1, g.col - 1])) for g in pres.generators}
    return Assignment(pres, values, f"sequence {s.values}")


def permutation_model(sigma: Permutation, n: int) -> Assignment:
    """u[i,j] -> 1 exactly when sigma(j) == i."""
    if sigma.n != n:
        raise AlgebraError(f"{sigma} is not a permutation of 1..{n}")
    pres = magic_presentation(n)
    values = {g: Fraction(int(sigma(g.col) == g.row)) for g in pres.generators}
    return Assignment(pres, values, f"permutation {sigma}")


def models_of(pres: Presentation, max_models: int | None = None, seed: int = 0) -> Iterator[Assignment]:
    """All commutative 0/1 models of ``pres``.

    For magic unitaries with n! > max_models a deterministic random sample
    of max_models permutations is used instead (identity first).
    """
    if pres.kind is Kind.QUANTUM_INCREASING:
        for s in enumerate_sequences(pres.k, pres.n):
            yield commutative_model(s, pres.k, pres.n)
        return
    n = pres.n
    if max_models is None or math.factorial(n) <= max_models:
        for perm in itertools.permutations(range(1, n + 1)):
            yield permutation_model(Permutation(perm), n)
        return
    rng = random.Random(seed)
    yield permutation_model(Permutation.identity(n), n)
    for _ in range(max_models - 1):
        perm = list(range(1, n + 1))
        rng.shuffle(perm)
        yield permutation_model(Permutation(perm), n)


def refute(a: Element, pres: Presentation, max_models: int | None = None) -> tuple[str, Fraction] | None:
    """First model in which ``a`` does not vanish, as (label, value)."""
    for m in models_of(pres, max_models):
        v = evaluate(a, m)
        if v != 0:
            return m.label, v
    return None


def beta_matrix(k: int, n: int, s: IncreasingSequence) -> np.ndarray:
    """Values of beta_{k,n}(u[i,j]) in the model of ``s``, as an n x n array.

    Integer dtype when every value is an integer, Fractions otherwise.
    """
    beta = curran_map(k, n)
    m = commutative_model(s, k, n)
    out = np.zeros((n, n), dtype=object)
    for g, img in beta.images.items():
        out[g.row - 1, g.col - 1] = evaluate(img, m)
    if all(v.denominator == 1 for v in out.flat):
        return out.astype(np.int64)
    return out


def beta_consistency(k: int, n: int) -> CheckReport:
    """Compare beta_{k,n} evaluated at every s in I_{k,n} with the
    permutation matrix of complete(s)."""
    started = time.perf_counter()
    witnesses = []
    seqs = enumerate_sequences(k, n)
    for s in seqs:
        got = beta_matrix(k, n, s)
        want = complete(s).matrix()
        if got.dtype == object or not np.array_equal(got, want):
            witnesses.append(
                Witness(f"sequence {s.values}", f"beta matrix {got.tolist()} != {want.tolist()}",
                        "completion", f"model:sequence {s.values}")
            )
    status = Status.NOT_VERIFIED if witnesses else Status.VERIFIED
    return CheckReport("beta-consistency", k, n, status, witnesses, ["completion"], len(seqs),
                       (time.perf_counter() - started) * 1e3)


def composite_values(path: list, g: GeneratorId, m: Assignment) -> Fraction:
    """Evaluate the image of ``g`` under the composite of ``path`` in ``m``."""
    x = Element.gen(g)
    for f in path:
        x = apply(f, x)
    return evaluate(x, m)

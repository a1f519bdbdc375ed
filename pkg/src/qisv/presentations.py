"""Universal presentations of C(S_n^+) and C(I^+_{k,n}).

Both families are generated by projections. Mutual orthogonality of the
projections in a partition of unity is included as an axiom (it holds in any
C*-algebra but is not reachable by plain *-algebra rewriting); such rules
carry the note ``"C*-derived rule"``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property, lru_cache

from .algebra import AlgebraError, Element, Family, GeneratorId, RewriteRule, Rewriter

CSTAR_NOTE = "C*-derived rule"


class Kind(str, enum.Enum):
    MAGIC_UNITARY = "magic_unitary"
    QUANTUM_INCREASING = "quantum_increasing"


@dataclass(frozen=True, eq=False)
class Presentation:
    tag: str
    kind: Kind
    n: int
    k: int
    generators: tuple[GeneratorId, ...]
    live: frozenset
    rules: tuple[RewriteRule, ...]
    linear_relations: tuple[Element, ...]

    def __eq__(self, other) -> bool:
        return isinstance(other, Presentation) and self.tag == other.tag

    def __hash__(self) -> int:
        return hash(self.tag)

    def __repr__(self) -> str:
        return f"Presentation({self.tag})"

    @property
    def family(self) -> Family:
        return Family.U if self.kind is Kind.MAGIC_UNITARY else Family.P

    @property
    def columns(self) -> int:
        return self.n if self.kind is Kind.MAGIC_UNITARY else self.k

    def generator(self, i: int, j: int) -> GeneratorId:
        g = GeneratorId(self.family, i, j, self.tag)
        if not (1 <= i <= self.n and 1 <= j <= self.columns):
            raise AlgebraError(f"{g} is not declared in {self.tag}")
        return g

    @property
    def live_generators(self) -> list[GeneratorId]:
        return [g for g in self.generators if g in self.live]

    def entry(self, i: int, j: int) -> Element:
        """Total lookup of a matrix entry with the sentinel conventions.

        For C(I^+_{k,n}): entry(0, 0) is the unit, row 0, column 0 and
        column k+1 are zero. Declared slots outside the live band are
        returned as generators; their GenZero rules kill them on
        normalization.
        """
        if self.kind is Kind.QUANTUM_INCREASING:
            if i == 0 and j == 0:
                return Element.one(self.tag)
            if i == 0 or j == 0 or j == self.k + 1:
                return Element.zero(self.tag)
        return Element.gen(self.generator(i, j))

    def one(self) -> Element:
        return Element.one(self.tag)

    def zero(self) -> Element:
        return Element.zero(self.tag)

    def eliminations(self) -> list[RewriteRule]:
        """One Eliminate rule per column partition of unity.

        The designated generator is the live one with the largest row index.
        """
        out = []
        for j in range(1, self.columns + 1):
            col = [g for g in self.live_generators if g.col == j]
            if not col:
                continue
            d = max(col, key=lambda g: g.row)
            rest = Element.one(self.tag) - Element({(g,): 1 for g in col if g != d}, self.tag)
            out.append(RewriteRule.eliminate(d, rest, note=f"column {j} partition of unity"))
        return out

    @cached_property
    def rewriter(self) -> Rewriter:
        return Rewriter(self)

    def normalize(self, a: Element) -> Element:
        return self.rewriter.normalize(a)

    def is_zero(self, a: Element):
        return self.rewriter.is_zero(a)


def _tag_magic(n: int) -> str:
    return f"C(S_{n}^+)"


def _tag_qis(k: int, n: int) -> str:
    return f"C(I^+_{k},{n})"


@lru_cache(maxsize=None)
def magic_presentation(n: int) -> Presentation:
    """C(S_n^+): an n x n matrix of projections with row and column sums 1."""
    if n < 1:
        raise AlgebraError(f"magic unitary size must be >= 1, got {n}")
    tag = _tag_magic(n)
    gens = tuple(GeneratorId(Family.U, i, j, tag) for i in range(1, n + 1) for j in range(1, n + 1))
    at = {(g.row, g.col): g for g in gens}
    rules = [RewriteRule.idempotent(g) for g in gens]
    for g in gens:
        for h in gens:
            if g == h:
                continue
            if g.row == h.row:
                rules.append(RewriteRule.pair_zero(g, h, f"{CSTAR_NOTE}: same row"))
            elif g.col == h.col:
                rules.append(RewriteRule.pair_zero(g, h, f"{CSTAR_NOTE}: same column"))
    one = Element.one(tag)
    rels = []
    for i in range(1, n + 1):
        rels.append(Element({(at[i, j],): 1 for j in range(1, n + 1)}, tag) - one)
    for j in range(1, n + 1):
        rels.append(Element({(at[i, j],): 1 for i in range(1, n + 1)}, tag) - one)
    return Presentation(tag, Kind.MAGIC_UNITARY, n, n, gens, frozenset(gens), tuple(rules), tuple(rels))


def is_live(i: int, j: int, k: int, n: int) -> bool:
    return j <= i <= n - k + j


def derived_vanishing(k: int, n: int) -> list[RewriteRule]:
    """GenZero rules for the slots p[i,j] with i < j or i > n - k + j."""
    if not 0 <= k <= n:
        raise AlgebraError(f"need 0 <= k <= n, got k={k}, n={n}")
    tag = _tag_qis(k, n)
    return [
        RewriteRule.gen_zero(GeneratorId(Family.P, i, j, tag), note="vanishing outside the band")
        for i in range(1, n + 1)
        for j in range(1, k + 1)
        if not is_live(i, j, k, n)
    ]


@lru_cache(maxsize=None)
def qis_presentation(k: int, n: int) -> Presentation:
    """C(I^+_{k,n}): an n x k matrix of projections, columns are partitions
    of unity and p[i,j] p[i',j'] = 0 whenever j < j' and i >= i'.

    ``k = 0`` gives the trivial algebra spanned by the unit.
    """
    if not (0 <= k <= n and n >= 1):
        raise AlgebraError(f"need 0 <= k <= n and n >= 1, got k={k}, n={n}")
    tag = _tag_qis(k, n)
    gens = tuple(GeneratorId(Family.P, i, j, tag) for i in range(1, n + 1) for j in range(1, k + 1))
    live = [g for g in gens if is_live(g.row, g.col, k, n)]
    rules = [RewriteRule.idempotent(g) for g in live]
    rules += derived_vanishing(k, n)
    for g in live:
        for h in live:
            if g.col < h.col and g.row >= h.row:
                rules.append(RewriteRule.pair_zero(g, h, "increasing sequence condition"))
                rules.append(RewriteRule.pair_zero(h, g, "increasing sequence condition (adjoint)"))
            elif g.col == h.col and g.row != h.row:
                rules.append(RewriteRule.pair_zero(g, h, f"{CSTAR_NOTE}: same column"))
    one = Element.one(tag)
    rels = tuple(
        Element({(g,): 1 for g in gens if g.col == j}, tag) - one for j in range(1, k + 1)
    )
    return Presentation(tag, Kind.QUANTUM_INCREASING, n, k, gens, frozenset(live), tuple(rules), rels)

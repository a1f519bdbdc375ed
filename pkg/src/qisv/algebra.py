"""Exact arithmetic in free *-algebras on projection generators.

Elements are sparse rational combinations of words. All generators in scope
are self-adjoint projections, so the involution reverses words and leaves
rational coefficients alone.

Normalization modulo a presentation is done by a :class:`Rewriter`, which is
sound (every rewrite step is an identity in the universal algebra) but not
complete: an element that normalizes to something nonzero may still be zero.
"""

from __future__ import annotations

import enum
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import TYPE_CHECKING, Iterable, Iterator, Mapping, Union

if TYPE_CHECKING:
    from .presentations import Presentation

logger = logging.getLogger(__name__)

Scalar = Union[int, Fraction]


class AlgebraError(ValueError):
    """Raised when elements of different algebras are combined."""


class Family(str, enum.Enum):
    U = "u"  # magic unitary entry
    P = "p"  # quantum increasing sequence entry


@dataclass(frozen=True, order=True)
class GeneratorId:
    family: Family
    row: int
    col: int
    algebra_tag: str
    _hash: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.row < 1 or self.col < 1:
            raise AlgebraError(f"generator indices must be >= 1, got ({self.row}, {self.col})")
        object.__setattr__(self, "_hash", hash((self.family.value, self.row, self.col, self.algebra_tag)))

    def __hash__(self) -> int:
        return self._hash

    def __str__(self) -> str:
        return f"{self.family.value}[{self.row},{self.col}]"

    def __repr__(self) -> str:
        return f"GeneratorId({self}, {self.algebra_tag!r})"


Word = tuple  # tuple[GeneratorId, ...]; the empty word is the unit


def _rational(c) -> Scalar:
    if isinstance(c, bool) or not isinstance(c, (int, Fraction)):
        raise TypeError(f"coefficients must be int or Fraction, got {type(c).__name__}")
    return c


def _canon(c: Scalar) -> Scalar:
    # integral values are kept as int for speed; Fraction is always reduced
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def word_str(word: Word) -> str:
    return "*".join(str(g) for g in word) if word else "1"


class Element:
    """Rational linear combination of words over one algebra.

    Immutable. Terms iterate in lexicographic word order, zero coefficients
    are never stored.
    """

    __slots__ = ("tag", "_terms", "_hash")

    def __init__(self, terms: Mapping[Word, Scalar] | Iterable[tuple[Word, Scalar]] = (), tag: str | None = None):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Word, Fraction] = {}
        for word, coeff in items:
            word = tuple(word)
            for g in word:
                if tag is None:
                    tag = g.algebra_tag
                elif g.algebra_tag != tag:
                    raise AlgebraError(f"generator {g!r} does not belong to {tag!r}")
            acc[word] = acc.get(word, 0) + _rational(coeff)
        self.tag = tag
        self._terms = {w: _canon(acc[w]) for w in sorted(acc) if acc[w] != 0}
        self._hash = None

    # construction helpers

    @classmethod
    def zero(cls, tag: str | None) -> Element:
        return cls((), tag)

    @classmethod
    def one(cls, tag: str | None) -> Element:
        return cls({(): 1}, tag)

    @classmethod
    def scalar(cls, c: Scalar, tag: str | None) -> Element:
        return cls({(): c}, tag)

    @classmethod
    def gen(cls, g: GeneratorId) -> Element:
        return cls({(g,): 1}, g.algebra_tag)

    @classmethod
    def _raw(cls, terms: dict[Word, Fraction], tag: str | None) -> Element:
        # trusted fast path: terms already nonzero Fractions over `tag`
        obj = cls.__new__(cls)
        obj.tag = tag
        obj._terms = {w: terms[w] for w in sorted(terms)}
        obj._hash = None
        return obj

    # mapping-like access

    @property
    def terms(self) -> Mapping[Word, Fraction]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[Word, Fraction]]:
        return iter(self._terms.items())

    def words(self) -> list[Word]:
        return list(self._terms)

    def coeff(self, word: Word) -> Fraction:
        return Fraction(self._terms.get(tuple(word), 0))

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self) -> int:
        return max((len(w) for w in self._terms), default=-1)

    def generators(self) -> set[GeneratorId]:
        return {g for w in self._terms for g in w}

    # arithmetic

    def _coerce(self, other) -> Element:
        if isinstance(other, Element):
            if self.tag is not None and other.tag is not None and other.tag != self.tag:
                raise AlgebraError(f"cannot combine elements of {self.tag!r} and {other.tag!r}")
            return other
        if isinstance(other, (int, Fraction)):
            return Element.scalar(other, self.tag)
        return NotImplemented

    def _tag_with(self, other: Element) -> str | None:
        return self.tag if self.tag is not None else other.tag

    def __add__(self, other) -> Element:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc = dict(self._terms)
        for w, c in other._terms.items():
            v = acc.get(w, 0) + c
            if v:
                acc[w] = _canon(v)
            else:
                acc.pop(w, None)
        return Element._raw(acc, self._tag_with(other))

    __radd__ = __add__

    def __neg__(self) -> Element:
        return Element._raw({w: -c for w, c in self._terms.items()}, self.tag)

    def __sub__(self, other) -> Element:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> Element:
        return (-self) + other

    def __mul__(self, other) -> Element:
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return Element.zero(self.tag)
            return Element._raw({w: _canon(v * other) for w, v in self._terms.items()}, self.tag)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return mul(self, other)

    def __rmul__(self, other) -> Element:
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __pow__(self, e: int) -> Element:
        if e < 0:
            raise AlgebraError("negative powers are not defined")
        out = Element.one(self.tag)
        for _ in range(e):
            out = out * self
        return out

    @property
    def star(self) -> Element:
        return involution(self)

    # comparison

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Element.scalar(other, self.tag)
        if not isinstance(other, Element):
            return NotImplemented
        return self._terms == other._terms and (
            self.tag == other.tag or not self._terms or self.tag is None or other.tag is None
        )

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for i, (w, c) in enumerate(self._terms.items()):
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if not w:
                body = str(mag)
            elif mag == 1:
                body = word_str(w)
            else:
                body = f"{mag}*{word_str(w)}"
            if i == 0:
                parts.append(body if sign == "+" else f"-{body}")
            else:
                parts.append(f"{sign} {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"Element({self}, tag={self.tag!r})"


def mul(a: Element, b: Element) -> Element:
    """Free-algebra product; words concatenate."""
    if a.tag is not None and b.tag is not None and a.tag != b.tag:
        raise AlgebraError(f"cannot multiply elements of {a.tag!r} and {b.tag!r}")
    acc: dict[Word, Fraction] = {}
    for wa, ca in a._terms.items():
        for wb, cb in b._terms.items():
            w = wa + wb
            v = acc.get(w, 0) + ca * cb
            if v:
                acc[w] = _canon(v)
            else:
                del acc[w]
    return Element._raw(acc, a.tag if a.tag is not None else b.tag)


def involution(a: Element) -> Element:
    """Reverse every word; rational coefficients are their own conjugates."""
    return Element._raw({w[::-1]: c for w, c in a._terms.items()}, a.tag)


# -- rewriting ---------------------------------------------------------------


class RuleKind(enum.IntEnum):
    # value doubles as application priority (lower fires first)
    GEN_ZERO = 0
    PAIR_ZERO = 1
    IDEMPOTENT = 2
    ELIMINATE = 3
    DERIVED = 4


@dataclass(frozen=True)
class RewriteRule:
    """A directed relation ``lhs -> rhs`` valid in the owning presentation."""

    kind: RuleKind
    lhs: Word
    rhs: Element
    note: str = ""

    @classmethod
    def idempotent(cls, g: GeneratorId) -> RewriteRule:
        return cls(RuleKind.IDEMPOTENT, (g, g), Element.gen(g))

    @classmethod
    def pair_zero(cls, g: GeneratorId, h: GeneratorId, note: str = "") -> RewriteRule:
        return cls(RuleKind.PAIR_ZERO, (g, h), Element.zero(g.algebra_tag), note)

    @classmethod
    def gen_zero(cls, g: GeneratorId, note: str = "") -> RewriteRule:
        return cls(RuleKind.GEN_ZERO, (g,), Element.zero(g.algebra_tag), note)

    @classmethod
    def eliminate(cls, g: GeneratorId, rhs: Element, note: str = "") -> RewriteRule:
        if g in rhs.generators():
            raise AlgebraError(f"elimination of {g} must not mention {g}")
        if rhs.degree() > 1:
            raise AlgebraError("elimination right-hand sides must be affine")
        return cls(RuleKind.ELIMINATE, (g,), rhs, note)

    @property
    def relation(self) -> Element:
        """The element ``lhs - rhs`` asserted to vanish."""
        return Element({self.lhs: 1}, self.rhs.tag) - self.rhs

    def adjoint(self) -> RewriteRule:
        return RewriteRule(self.kind, self.lhs[::-1], involution(self.rhs), self.note)

    def __str__(self) -> str:
        return f"{self.kind.name}: {word_str(self.lhs)} -> {self.rhs}"


class Verdict(str, enum.Enum):
    VERIFIED = "verified"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class ZeroTest:
    verdict: Verdict
    normal_form: Element

    @property
    def verified(self) -> bool:
        return self.verdict is Verdict.VERIFIED


class InconsistentPresentation(AlgebraError):
    pass


class Rewriter:
    """Compiled rewrite system for one presentation.

    Rules fire in the fixed priority GenZero > PairZero > Idempotent >
    Eliminate > Derived, each at its leftmost match. Words are ordered by
    length, then lexicographically by letter rank, with the eliminated
    (designated) generators ranked highest; every rule strictly lowers the
    leading word in this order, which gives termination.

    With ``derive=True`` the linear relations are also multiplied on either
    side by each surviving generator, reduced, and oriented into extra rules
    (degree <= 2 consequences such as ``p[1,1]*p[2,2] -> p[2,2]``). Without
    it only the presentation's own rules plus Gaussian elimination of the
    linear relations are used.
    """

    def __init__(self, pres: Presentation, derive: bool = True):
        self.tag = pres.tag
        self.derive = derive
        designated = [r.lhs[0] for r in pres.eliminations()]
        others = sorted(g for g in pres.generators if g not in set(designated))
        self._rank: dict[GeneratorId, int] = {g: i for i, g in enumerate(others + designated)}
        self._unary: dict[GeneratorId, RewriteRule] = {}
        self._binary: dict[tuple[GeneratorId, GeneratorId], RewriteRule] = {}
        self._memo: dict[Word, dict[Word, Fraction]] = {}
        for rule in list(pres.rules) + list(pres.eliminations()):
            self._install(rule)
        self._complete(pres)

    # rule bookkeeping

    def _install(self, rule: RewriteRule) -> None:
        table = self._unary if len(rule.lhs) == 1 else self._binary
        key = rule.lhs[0] if len(rule.lhs) == 1 else rule.lhs
        old = table.get(key)
        if old is None or rule.kind < old.kind:
            table[key] = rule
        self._memo.clear()

    @property
    def rules(self) -> list[RewriteRule]:
        return list(self._unary.values()) + list(self._binary.values())

    @property
    def derived_rules(self) -> list[RewriteRule]:
        return [r for r in self.rules if r.note.startswith("derived")]

    def word_key(self, word: Word) -> tuple:
        return (len(word), tuple(self._rank[g] for g in word))

    def _orient(self, rel: Element, note: str) -> RewriteRule:
        lead = max(rel.words(), key=self.word_key)
        if not lead:
            raise InconsistentPresentation(f"relations of {self.tag} force 1 = 0")
        c = rel.coeff(lead)
        rhs = (Element({lead: c}, self.tag) - rel) * (1 / c)
        rhs = Element._raw({w: _canon(v) for w, v in rhs.items()}, self.tag)
        if len(lead) == 1:
            kind = RuleKind.GEN_ZERO if rhs.is_zero() else RuleKind.ELIMINATE
        elif len(lead) == 2:
            kind = RuleKind.PAIR_ZERO if rhs.is_zero() else RuleKind.DERIVED
        else:
            raise AlgebraError("only relations of degree <= 2 can be oriented")
        return RewriteRule(kind, lead, rhs, note)

    def _critical_pairs(self) -> Iterator[Element]:
        tag = self.tag
        by_first: dict[GeneratorId, list[RewriteRule]] = {}
        for (a, _), rule in self._binary.items():
            by_first.setdefault(a, []).append(rule)
        for (a, b), rule in list(self._binary.items()):
            # binary rule against a substitution inside its own left side
            for pos, g in enumerate((a, b)):
                sub = self._unary.get(g)
                if sub is not None:
                    left = Element({(a,): 1}, tag) if pos else None
                    right = Element({(b,): 1}, tag) if not pos else None
                    other = left * sub.rhs if pos else sub.rhs * right
                    yield rule.rhs - other
            # overlap a.b.c of (a,b) and (b,c)
            for rule2 in by_first.get(b, ()):
                c = rule2.lhs[1]
                yield rule.rhs * Element.gen(c) - Element.gen(a) * rule2.rhs

    def _absorb(self, candidates: list[tuple[Element, str]]) -> tuple[int, list[tuple[Element, str]]]:
        """Orient every reducible candidate of degree <= 2 into a rule.

        Returns the number of new rules and the candidates still worth
        revisiting (nonzero but of higher degree).
        """
        found, pending = [], []
        for rel, note in candidates:
            red = self.normalize(rel)
            if not red:
                continue
            if red.degree() <= 2:
                found.append((red, note))
            else:
                pending.append((red, note))
        added = 0
        for rel, note in found:
            red = self.normalize(rel)
            if red:
                self._install(self._orient(red, note))
                added += 1
        return added, pending

    def _complete(self, pres: Presentation) -> None:
        pool = [(r, "gauss") for r in pres.linear_relations]
        added = True
        while added:
            added, pool = self._absorb(pool)
        if not self.derive:
            return
        letters = [g for g in sorted(pres.generators, key=self._rank.get) if g not in self._unary]
        gens = [Element.gen(g) for g in letters]
        for r in pres.linear_relations:
            for x in gens:
                pool.append((x * r, "derived: one-sided"))
                pool.append((r * x, "derived: one-sided"))
                xr = x * r
                pool.extend((xr * y, "derived: sandwich") for y in gens)
        added = True
        while added:
            added, pool = self._absorb(pool + [(c, "derived: overlap") for c in self._critical_pairs()])
        logger.debug("%s: %d rules after completion", self.tag, len(self.rules))

    # normalization

    def _redex(self, word: Word) -> tuple[int, RewriteRule] | None:
        best = None
        for i, g in enumerate(word):
            rule = self._unary.get(g)
            if rule is not None and (best is None or rule.kind < best[1].kind):
                best = (i, rule)
                if rule.kind == 0:
                    return best
            if i + 1 < len(word):
                rule = self._binary.get((g, word[i + 1]))
                if rule is not None and (best is None or rule.kind < best[1].kind):
                    best = (i, rule)
        return best

    def normal_word(self, word: Word) -> dict[Word, Fraction]:
        hit = self._memo.get(word)
        if hit is not None:
            return hit
        redex = self._redex(word)
        if redex is None:
            out = {word: 1}
        else:
            i, rule = redex
            pre, post = word[:i], word[i + len(rule.lhs):]
            out = {}
            for w, c in rule.rhs._terms.items():
                for w2, c2 in self.normal_word(pre + w + post).items():
                    v = out.get(w2, 0) + c * c2
                    if v:
                        out[w2] = _canon(v)
                    else:
                        del out[w2]
        self._memo[word] = out
        return out

    def normalize(self, a: Element) -> Element:
        if a.tag is not None and a.tag != self.tag:
            raise AlgebraError(f"element of {a.tag!r} cannot be normalized in {self.tag!r}")
        acc: dict[Word, Fraction] = {}
        for w, c in a._terms.items():
            for w2, c2 in self.normal_word(w).items():
                v = acc.get(w2, 0) + c * c2
                if v:
                    acc[w2] = _canon(v)
                else:
                    del acc[w2]
        return Element._raw(acc, self.tag)

    def is_zero(self, a: Element) -> ZeroTest:
        nf = self.normalize(a)
        return ZeroTest(Verdict.VERIFIED if nf.is_zero() else Verdict.INCONCLUSIVE, nf)


def normalize(a: Element, pres: Presentation) -> Element:
    return pres.rewriter.normalize(a)


def is_zero(a: Element, pres: Presentation) -> ZeroTest:
    return pres.rewriter.is_zero(a)

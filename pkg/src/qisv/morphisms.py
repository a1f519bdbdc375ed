"""Generator maps between the presentations and their verification.

A :class:`GeneratorMap` fixes the image of every declared generator; the
unique unital algebra map extending it is :func:`apply`. Checks are split per
relation (well-definedness) or per generator (commuting squares) so each
report line lines up with one case of the hand proof.
"""

from __future__ import annotations

import enum
import logging
import time
from dataclasses import dataclass, field, replace
from typing import Callable, Iterable

from .algebra import AlgebraError, Element, GeneratorId, RuleKind, word_str
from .presentations import Presentation, magic_presentation, qis_presentation

logger = logging.getLogger(__name__)


class Status(str, enum.Enum):
    VERIFIED = "verified"
    NOT_VERIFIED = "not_verified"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class Witness:
    """A check that did not come out zero symbolically."""

    item: str
    residual: str
    case: str = ""
    channel: str = "symbolic"  # "symbolic" or "model:<description>"

    def to_dict(self) -> dict:
        return {"item": self.item, "residual": self.residual, "case": self.case, "channel": self.channel}

    @classmethod
    def from_dict(cls, d: dict) -> Witness:
        return cls(d["item"], d["residual"], d.get("case", ""), d.get("channel", "symbolic"))


@dataclass
class CheckReport:
    check: str
    k: int | None
    n: int | None
    status: Status
    witnesses: list[Witness] = field(default_factory=list)
    case_labels: list[str] = field(default_factory=list)
    checked: int = 0
    elapsed_ms: float = 0.0
    notes: list[str] = field(default_factory=list)

    def __post_init__(self):
        if (self.status is Status.VERIFIED) != (not self.witnesses):
            raise ValueError("a report is verified exactly when it has no witnesses")

    @property
    def verified(self) -> bool:
        return self.status is Status.VERIFIED

    def to_dict(self, with_time: bool = True) -> dict:
        d = {
            "check": self.check,
            "params": {"k": self.k, "n": self.n},
            "status": self.status.value,
            "witnesses": [w.to_dict() for w in self.witnesses],
            "case_labels": list(self.case_labels),
            "checked": self.checked,
            "notes": list(self.notes),
        }
        if with_time:
            d["elapsed_ms"] = round(self.elapsed_ms, 3)
        return d

    @classmethod
    def from_dict(cls, d: dict) -> CheckReport:
        return cls(
            check=d["check"],
            k=d["params"]["k"],
            n=d["params"]["n"],
            status=Status(d["status"]),
            witnesses=[Witness.from_dict(w) for w in d["witnesses"]],
            case_labels=list(d["case_labels"]),
            checked=d.get("checked", 0),
            elapsed_ms=d.get("elapsed_ms", 0.0),
            notes=list(d.get("notes", [])),
        )

    def summary(self) -> str:
        params = ", ".join(f"{a}={v}" for a, v in (("k", self.k), ("n", self.n)) if v is not None)
        line = f"{self.check} ({params})" if params else self.check
        line += f": {self.status.value}, {self.checked} cases"
        if self.case_labels:
            line += f" [{', '.join(self.case_labels)}]"
        return line


@dataclass(frozen=True)
class GeneratorMap:
    name: str
    domain: Presentation
    codomain: Presentation
    images: dict  # GeneratorId -> Element over codomain

    def __post_init__(self):
        missing = [g for g in self.domain.generators if g not in self.images]
        if missing:
            raise AlgebraError(f"{self.name}: no image for {', '.join(map(str, missing))}")
        for g, img in self.images.items():
            if img.tag is not None and img.tag != self.codomain.tag:
                raise AlgebraError(f"{self.name}: image of {g} is not in {self.codomain.tag}")

    def __call__(self, a: Element) -> Element:
        return apply(self, a)

    def image(self, i: int, j: int) -> Element:
        return self.images[self.domain.generator(i, j)]

    def with_image(self, g: GeneratorId, img: Element, name: str | None = None) -> GeneratorMap:
        images = dict(self.images)
        images[g] = img
        return replace(self, images=images, name=name or f"{self.name}[{g} corrupted]")


def apply(f: GeneratorMap, a: Element) -> Element:
    """Substitute generator images letter by letter and multiply out."""
    if a.tag is not None and a.tag != f.domain.tag:
        raise AlgebraError(f"{f.name} is defined on {f.domain.tag}, not {a.tag}")
    cod = f.codomain.tag
    out = Element.zero(cod)
    for word, c in a.items():
        term = Element.scalar(c, cod)
        for g in word:
            term = term * f.images[g]
            if term.is_zero():
                break
        out = out + term
    return out


# -- the five maps -----------------------------------------------------------


def curran_map(k: int, n: int) -> GeneratorMap:
    """beta_{k,n}: C(S_n^+) -> C(I^+_{k,n}), completing increasing sequences.

    ``k = 0`` is accepted and gives the counit onto the trivial algebra.
    """
    if not 0 <= k <= n or n < 1:
        raise AlgebraError(f"curran_map needs 0 <= k <= n, got k={k}, n={n}")
    src, dst = magic_presentation(n), qis_presentation(k, n)
    p = dst.entry
    images = {}
    for i in range(1, n + 1):
        for j in range(1, k + 1):
            images[src.generator(i, j)] = p(i, j)
    for m in range(1, n - k + 1):
        for i in range(1, n + 1):
            if i < m or i > m + k:
                images[src.generator(i, k + m)] = dst.zero()
        for q in range(0, k + 1):
            total = dst.zero()
            for i in range(0, m + q):
                total = total + p(i, q) - p(i + 1, q + 1)
            images[src.generator(m + q, k + m)] = total
    return GeneratorMap(f"beta_{k},{n}", src, dst, images)


def eta_tilde(k: int, n: int) -> GeneratorMap:
    """C(I^+_{k,n}) -> C(I^+_{k,n-1}): drop the last row."""
    if not 1 <= k <= n - 1:
        raise AlgebraError(f"eta_tilde needs 1 <= k <= n-1, got k={k}, n={n}")
    src, dst = qis_presentation(k, n), qis_presentation(k, n - 1)
    images = {}
    for g in src.generators:
        images[g] = dst.entry(g.row, g.col) if g.row < n else dst.zero()
    return GeneratorMap(f"eta_tilde_{k},{n}", src, dst, images)


def eta_dot(k: int, n: int) -> GeneratorMap:
    """C(I^+_{k,n}) -> C(I^+_{k-1,n-1}): force the sequence to start at 1.

    For ``k = 1`` the target is the trivial algebra C(I^+_{0,n-1}).
    """
    if not 1 <= k <= n - 1:
        raise AlgebraError(f"eta_dot needs 1 <= k <= n-1, got k={k}, n={n}")
    src, dst = qis_presentation(k, n), qis_presentation(k - 1, n - 1)
    images = {}
    for g in src.generators:
        i, j = g.row, g.col
        if i == 1 and j == 1:
            images[g] = dst.one()
        elif i == 1 or j == 1:
            images[g] = dst.zero()
        else:
            images[g] = dst.entry(i - 1, j - 1)
    return GeneratorMap(f"eta_dot_{k},{n}", src, dst, images)


def q_map(n: int) -> GeneratorMap:
    """C(S_n^+) -> C(S_{n-1}^+) fixing the last point."""
    if n < 2:
        raise AlgebraError(f"q_map needs n >= 2, got {n}")
    src, dst = magic_presentation(n), magic_presentation(n - 1)
    images = {}
    for g in src.generators:
        i, j = g.row, g.col
        if i < n and j < n:
            images[g] = dst.entry(i, j)
        else:
            images[g] = dst.one() if i == j == n else dst.zero()
    return GeneratorMap(f"q_{n}", src, dst, images)


def q_bar_map(n: int) -> GeneratorMap:
    """C(S_n^+) -> C(S_{n-1}^+) fixing the first point."""
    if n < 2:
        raise AlgebraError(f"q_bar_map needs n >= 2, got {n}")
    src, dst = magic_presentation(n), magic_presentation(n - 1)
    images = {}
    for g in src.generators:
        i, j = g.row, g.col
        if i > 1 and j > 1:
            images[g] = dst.entry(i - 1, j - 1)
        else:
            images[g] = dst.one() if i == j == 1 else dst.zero()
    return GeneratorMap(f"q_bar_{n}", src, dst, images)


MAPS: dict[str, Callable[..., GeneratorMap]] = {
    "curran": curran_map,
    "eta-tilde": eta_tilde,
    "eta-dot": eta_dot,
    "q": lambda k, n: q_map(n),
    "q-bar": lambda k, n: q_bar_map(n),
}


# -- checks ------------------------------------------------------------------


def _relation_label(rule_kind: RuleKind, note: str) -> str:
    if rule_kind is RuleKind.IDEMPOTENT:
        return "projection"
    if rule_kind is RuleKind.GEN_ZERO:
        return "vanishing"
    if "increasing" in note:
        return "increasing"
    return "orthogonality"


def _relations(pres: Presentation) -> Iterable[tuple[str, str, Element]]:
    for r in pres.rules:
        yield _relation_label(r.kind, r.note), f"{word_str(r.lhs)} = {r.rhs}", r.relation
    for rel in pres.linear_relations:
        yield "partition", f"{rel} = 0", rel


def _refute(residual: Element, pres: Presentation, max_models: int | None):
    # local import: models depends on this module for CheckReport
    from .models import refute

    return refute(residual, pres, max_models=max_models)


def _finish(check, k, n, started, witnesses, labels, checked, notes=()) -> CheckReport:
    if any(w.channel != "symbolic" for w in witnesses):
        status = Status.NOT_VERIFIED
    elif witnesses:
        status = Status.INCONCLUSIVE
    else:
        status = Status.VERIFIED
    return CheckReport(
        check, k, n, status, witnesses, labels, checked, (time.perf_counter() - started) * 1e3, list(notes)
    )


def _test(residual: Element, pres: Presentation, item: str, case: str, max_models: int | None) -> Witness | None:
    zt = pres.is_zero(residual)
    if zt.verified:
        return None
    model = _refute(residual, pres, max_models)
    if model is not None:
        desc, value = model
        return Witness(item, f"{zt.normal_form} evaluates to {value}", case, f"model:{desc}")
    return Witness(item, str(zt.normal_form), case)


def check_well_defined(f: GeneratorMap, max_models: int | None = 5040, k: int | None = None, n: int | None = None) -> CheckReport:
    """Check that the images satisfy every defining relation of the domain.

    Each relation is mapped over and tested for zero in the codomain. A
    nonzero normal form is then evaluated in commutative models; a model in
    which it does not vanish makes the report ``not_verified``, otherwise
    the report is ``inconclusive``.
    """
    started = time.perf_counter()
    cod = f.codomain
    witnesses: list[Witness] = []
    labels: list[str] = []
    checked = 0
    for label, item, rel in _relations(f.domain):
        checked += 1
        if label not in labels:
            labels.append(label)
        w = _test(apply(f, rel), cod, item, label, max_models)
        if w is not None:
            witnesses.append(w)
    for g in f.domain.generators:
        img = f.images[g]
        checked += 1
        w = _test(img.star - img, cod, f"{g}* = {g}", "self-adjoint", max_models)
        if w is not None:
            witnesses.append(w)
    if "self-adjoint" not in labels:
        labels.append("self-adjoint")
    notes = [f"surjective on generators: {'yes' if is_surjective_on_generators(f) else 'no'}"]
    if f.name.startswith("eta_dot") and cod.k == 0:
        notes.append("codomain C(I^+_0,m) read as the trivial algebra spanned by the unit")
    return _finish(f"well_defined:{f.name}", k, n, started,
                   witnesses, labels, checked, notes)


def is_surjective_on_generators(f: GeneratorMap) -> bool:
    images = set(f.images.values())
    return all(Element.gen(g) in images for g in f.codomain.live_generators)


def check_diagram(
    top: GeneratorMap,
    left: GeneratorMap,
    right: GeneratorMap,
    bottom: GeneratorMap,
    case_label: Callable[[GeneratorId], str] | None = None,
    name: str = "diagram",
    k: int | None = None,
    n: int | None = None,
    max_models: int | None = 5040,
) -> CheckReport:
    """Check right(top(g)) == bottom(left(g)) for every generator g."""
    if top.domain != left.domain:
        raise AlgebraError(f"{top.name} and {left.name} start in different algebras")
    if right.domain != top.codomain or bottom.domain != left.codomain:
        raise AlgebraError("diagram maps do not compose")
    if right.codomain != bottom.codomain:
        raise AlgebraError(f"{right.name} and {bottom.name} end in different algebras")
    started = time.perf_counter()
    cod = right.codomain
    witnesses: list[Witness] = []
    labels: list[str] = []
    for g in top.domain.generators:
        case = case_label(g) if case_label else ""
        if case and case not in labels:
            labels.append(case)
        lhs = apply(right, top.images[g])
        rhs = apply(bottom, left.images[g])
        w = _test(lhs - rhs, cod, str(g), case, max_models)
        if w is not None:
            witnesses.append(w)
    return _finish(name, k, n, started, witnesses, labels, len(top.domain.generators))


def tilde_case(k: int, n: int) -> Callable[[GeneratorId], str]:
    """Proof case of u[i,j] in the first square (drop the last point)."""

    def label(g: GeneratorId) -> str:
        i, j = g.row, g.col
        if j <= k:
            return "(a)"
        m = j - k
        if i < m or i > m + k:
            return "(b)"
        p = i - m
        if m <= n - 1 - k:
            return "(c)"
        if p == k:
            return "(c)[m=n-k,p=k]"
        return "(c)(i)" if p == 0 else "(c)(ii)"

    return label


def dot_case(k: int, n: int) -> Callable[[GeneratorId], str]:
    """Proof case of u[i,j] in the second square (drop the first point)."""

    def label(g: GeneratorId) -> str:
        i, j = g.row, g.col
        if j <= k:
            return "(a)"
        m = j - k
        if i < m or i > m + k:
            return "(b)"
        p = i - m
        return "(c)[p=0]" if p == 0 else "(c)[p=1]" if p == 1 else "(c)[p>=2]"

    return label


def diagram_tilde(k: int, n: int, **kw) -> CheckReport:
    """eta_tilde_{k,n} . beta_{k,n} == beta_{k,n-1} . q_n on C(S_n^+)."""
    return check_diagram(curran_map(k, n), q_map(n), eta_tilde(k, n), curran_map(k, n - 1),
                         case_label=tilde_case(k, n), name="diagram:tilde", k=k, n=n, **kw)


def diagram_dot(k: int, n: int, **kw) -> CheckReport:
    """eta_dot_{k,n} . beta_{k,n} == beta_{k-1,n-1} . q_bar_n on C(S_n^+)."""
    report = check_diagram(curran_map(k, n), q_bar_map(n), eta_dot(k, n), curran_map(k - 1, n - 1),
                           case_label=dot_case(k, n), name="diagram:dot", k=k, n=n, **kw)
    if k == 1:
        report.notes.append("k=1: bottom-right corner read as the trivial algebra spanned by the unit")
    return report


def well_defined(name: str, k: int, n: int, **kw) -> CheckReport:
    return check_well_defined(MAPS[name](k, n), k=k, n=n, **kw)

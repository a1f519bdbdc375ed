import itertools

import pytest

from qisv.algebra import AlgebraError, RuleKind, involution
from qisv.models import evaluate, models_of
from qisv.presentations import CSTAR_NOTE, derived_vanishing, is_live, magic_presentation, qis_presentation


def _count(pres, kind):
    return sum(1 for r in pres.rules if r.kind is kind)


def test_magic_two_counts():
    pres = magic_presentation(2)
    assert len(pres.generators) == 4
    assert _count(pres, RuleKind.IDEMPOTENT) == 4
    assert _count(pres, RuleKind.PAIR_ZERO) == 8
    assert len(pres.linear_relations) == 4


@pytest.mark.parametrize("n", [3, 4, 5])
def test_magic_counts(n):
    pres = magic_presentation(n)
    assert len(pres.generators) == n * n
    assert _count(pres, RuleKind.IDEMPOTENT) == n * n
    # ordered pairs of distinct entries sharing a row or a column
    assert _count(pres, RuleKind.PAIR_ZERO) == 2 * n * n * (n - 1)
    assert len(pres.linear_relations) == 2 * n


def test_orthogonality_is_marked_as_derived():
    notes = {r.note for r in magic_presentation(3).rules if r.kind is RuleKind.PAIR_ZERO}
    assert all(note.startswith(CSTAR_NOTE) for note in notes)


def test_live_band():
    # rows j .. n-k+j can hold the j-th smallest value
    assert [i for i in range(1, 6) if is_live(i, 1, 2, 5)] == [1, 2, 3, 4]
    assert [i for i in range(1, 6) if is_live(i, 2, 2, 5)] == [2, 3, 4, 5]
    assert [(r.lhs[0].row, r.lhs[0].col) for r in derived_vanishing(2, 5)] == [(1, 2), (5, 1)]


def test_derived_vanishing_matches_models():
    for k, n in [(1, 3), (2, 4), (3, 6), (4, 6)]:
        dead = {(r.lhs[0].row, r.lhs[0].col) for r in derived_vanishing(k, n)}
        ever_one = set()
        for m in models_of(qis_presentation(k, n)):
            ever_one |= {(g.row, g.col) for g, v in m.values.items() if v}
        all_slots = set(itertools.product(range(1, n + 1), range(1, k + 1)))
        assert dead == all_slots - ever_one


def test_increasing_rules_present():
    pres = qis_presentation(2, 4)
    p = pres.generator
    zero_pairs = {r.lhs for r in pres.rules if r.kind is RuleKind.PAIR_ZERO}
    assert (p(2, 1), p(2, 2)) in zero_pairs
    assert (p(2, 2), p(2, 1)) in zero_pairs
    assert (p(3, 1), p(2, 2)) in zero_pairs
    assert (p(1, 1), p(2, 2)) not in zero_pairs
    assert (p(1, 1), p(2, 1)) in zero_pairs


@pytest.mark.parametrize("pres", [magic_presentation(n) for n in range(1, 6)]
                         + [qis_presentation(k, n) for n in range(1, 8) for k in range(0, n + 1)], ids=str)
def test_relations_hold_in_every_model(pres):
    # Assignment validates every rule and relation on construction
    count = sum(1 for _ in models_of(pres, max_models=720))
    assert count >= 1


@pytest.mark.parametrize("pres", [magic_presentation(4), qis_presentation(3, 6)], ids=str)
def test_rule_set_closed_under_adjoint(pres):
    rels = {r.relation for r in pres.rules}
    for r in pres.rules:
        assert involution(r.relation) in rels


def test_sentinels_and_bounds():
    pres = qis_presentation(2, 4)
    assert pres.entry(0, 0) == pres.one()
    assert pres.entry(0, 1).is_zero()
    assert pres.entry(3, 0).is_zero()
    assert pres.entry(2, 3).is_zero()
    with pytest.raises(AlgebraError):
        pres.entry(5, 1)
    with pytest.raises(AlgebraError):
        pres.generator(1, 3)
    with pytest.raises(AlgebraError):
        qis_presentation(5, 4)


def test_eliminations_pick_last_live_row():
    pres = qis_presentation(2, 5)
    assert [r.lhs[0] for r in pres.eliminations()] == [pres.generator(4, 1), pres.generator(5, 2)]
    magic = magic_presentation(3)
    assert [r.lhs[0].row for r in magic.eliminations()] == [3, 3, 3]


def test_presentations_are_distinct_algebras():
    assert qis_presentation(2, 4) != qis_presentation(2, 5)
    assert qis_presentation(2, 4) is qis_presentation(2, 4)
    assert str(qis_presentation(2, 4).generator(2, 1)) == "p[2,1]"


def test_column_relations_are_partitions():
    pres = qis_presentation(2, 4)
    for rel in pres.linear_relations:
        for m in models_of(pres):
            assert evaluate(rel, m) == 0

"""Acceptance criteria, one test each.

Every test prints a single ``ACCEPTANCE <n> PASS|FAIL`` line (visible even
when pytest captures output) and then asserts. Run with
``pytest tests/test_acceptance.py -v``.
"""

import json
import math
import random
import subprocess
import sys
import time
from fractions import Fraction

import pytest

from qisv.classical import IncreasingSequence, Permutation, closure, complete, completions, witness_generators
from qisv.models import beta_consistency, evaluate, models_of
from qisv.morphisms import (
    Status,
    apply,
    check_diagram,
    check_well_defined,
    curran_map,
    diagram_dot,
    diagram_tilde,
    dot_case,
    eta_dot,
    eta_tilde,
    q_bar_map,
    q_map,
    tilde_case,
)
from qisv.presentations import magic_presentation, qis_presentation

from conftest import random_element


@pytest.fixture
def verdict(capsys):
    def record(number: int, title: str, ok: bool, detail: str) -> None:
        with capsys.disabled():
            print(f"\nACCEPTANCE {number} {'PASS' if ok else 'FAIL'}: {title} ({detail})")
        assert ok, detail

    return record


def test_1_figure_reproduction(verdict):
    s = IncreasingSequence((2, 3, 5, 6, 8), 9)
    complete(s)
    times = []
    for _ in range(5):
        t0 = time.perf_counter()
        sigma = complete(s)
        times.append(time.perf_counter() - t0)
    ok = (
        sigma.one_line == (2, 3, 5, 6, 8, 1, 4, 7, 9)
        and sigma == Permutation.from_cycles([(1, 2, 3, 5, 8, 7, 4, 6)], 9)
        and min(times) < 1e-3
    )
    verdict(1, "figure completion", ok, f"one-line {sigma}, cycles {sigma.cycle_str()}, {min(times) * 1e3:.3f} ms")


def test_2_classical_generation(verdict):
    t0 = time.perf_counter()
    bad = []
    for n in range(2, 8):
        for k in range(1, n):
            if len(closure(completions(k, n), n)) != math.factorial(n):
                bad.append((k, n))
            gens = witness_generators(k, n)
            if len(gens) != 3:
                bad.append((k, n, "witnesses"))
    elapsed = time.perf_counter() - t0
    verdict(2, "closure of completed I_k,n is S_n, n <= 7", not bad and elapsed < 30,
            f"failures {bad}, {elapsed:.2f} s")


def test_3_eta_maps_well_defined(verdict):
    counts = {s: 0 for s in Status}
    for n in range(2, 10):
        for k in range(1, n):
            for f in (eta_tilde(k, n), eta_dot(k, n)):
                counts[check_well_defined(f).status] += 1
    ok = counts[Status.NOT_VERIFIED] == 0 and counts[Status.INCONCLUSIVE] == 0
    verdict(3, "eta maps well-defined, n <= 9", ok, ", ".join(f"{s.value} {c}" for s, c in counts.items()))


def test_4_diagrams_commute(verdict):
    t0 = time.perf_counter()
    counts = {s: 0 for s in Status}
    labels = set()
    generators = 0
    for n in range(4, 10):
        for k in range(1, n):
            for r in (diagram_tilde(k, n), diagram_dot(k, n)):
                counts[r.status] += 1
                labels.update(r.case_labels)
                generators += r.checked
    elapsed = time.perf_counter() - t0
    need = {"(a)", "(b)", "(c)(i)", "(c)(ii)"}
    ok = counts[Status.VERIFIED] == sum(counts.values()) and need <= labels and elapsed < 120
    verdict(4, "both squares commute, 4 <= n <= 9", ok,
            f"{counts[Status.VERIFIED]} diagrams, {generators} generator identities, labels {sorted(labels)}, "
            f"{elapsed:.1f} s")


def test_5_beta_consistency(verdict):
    bad, models = [], 0
    for n in range(1, 8):
        for k in range(1, n + 1):
            r = beta_consistency(k, n)
            models += r.checked
            if r.status is not Status.VERIFIED:
                bad.append((k, n))
    verdict(5, "beta matches completion in every model, n <= 7", not bad, f"{models} models, failures {bad}")


def test_6_beta_well_defined(verdict):
    required = [(1, 2), (1, 3), (2, 3)]
    required_ok = all(check_well_defined(curran_map(k, n)).status is Status.VERIFIED for k, n in required)
    statuses = {}
    model_failures = 0
    for n in range(1, 8):
        for k in range(1, n + 1):
            beta = curran_map(k, n)
            statuses[(k, n)] = check_well_defined(beta).status
            ms = list(models_of(beta.codomain))
            rels = [r.relation for r in beta.domain.rules] + list(beta.domain.linear_relations)
            for rel in rels:
                img = apply(beta, rel)
                model_failures += sum(1 for m in ms if evaluate(img, m) != 0)
    refuted = [kn for kn, s in statuses.items() if s is Status.NOT_VERIFIED]
    verified = sum(1 for s in statuses.values() if s is Status.VERIFIED)
    ok = required_ok and not refuted and model_failures == 0
    verdict(6, "beta well-defined", ok,
            f"{verified}/{len(statuses)} verified symbolically, refuted {refuted}, model failures {model_failures}")


FAMILIES = {
    "magic unitary": [magic_presentation(n) for n in (2, 3, 4)],
    "increasing sequence": [qis_presentation(k, n) for n in range(2, 7) for k in range(1, n)],
}


@pytest.mark.parametrize("family", FAMILIES)
def test_7_normalization_soundness(verdict, family):
    press = FAMILIES[family]
    rng = random.Random(7)
    models = {pres: list(models_of(pres)) for pres in press}
    samples, unsound, unstable, evaluations = 10_000, 0, 0, 0
    for i in range(samples):
        pres = press[i % len(press)]
        a = random_element(pres, rng, max_len=4, max_terms=5)
        na = pres.normalize(a)
        unstable += pres.normalize(na) != na
        for m in models[pres]:
            evaluations += 1
            unsound += evaluate(a, m) != evaluate(na, m)
    verdict(7, f"normalization sound and idempotent, {family}", unsound == 0 and unstable == 0,
            f"{samples} elements, {evaluations} evaluations, {unsound} unsound, {unstable} not idempotent")


def _scalar(rng) -> Fraction:
    # never 0, 1 or -1: shifting a 0/1 value by these could land on 0/1 again
    while True:
        lam = Fraction(rng.randint(-9, 9), rng.randint(1, 4))
        if lam not in (0, 1, -1):
            return lam


def _corrupt_map(f, rng):
    g = rng.choice(f.domain.generators)
    return f.with_image(g, f.images[g] + f.codomain.one() * _scalar(rng))


def test_8_mutation_robustness(verdict):
    rng = random.Random(8)
    maps = [eta_tilde(2, 5), eta_dot(3, 5), eta_dot(1, 4), curran_map(1, 3), curran_map(2, 4), q_map(4),
            q_bar_map(4)]
    caught, total = 0, 0
    for f in maps:
        assert check_well_defined(f).status is Status.VERIFIED
        for _ in range(20):
            total += 1
            caught += check_well_defined(_corrupt_map(f, rng)).status is not Status.VERIFIED
    squares = [
        (curran_map(2, 5), q_map(5), eta_tilde(2, 5), curran_map(2, 4), tilde_case(2, 5)),
        (curran_map(3, 5), q_bar_map(5), eta_dot(3, 5), curran_map(2, 4), dot_case(3, 5)),
    ]
    for top, left, right, bottom, lab in squares:
        assert check_diagram(top, left, right, bottom, lab).status is Status.VERIFIED
        for _ in range(20):
            total += 1
            if rng.random() < 0.5:
                top_c, left_c = _corrupt_map(top, rng), left
            else:
                top_c, left_c = top, _corrupt_map(left, rng)
            caught += check_diagram(top_c, left_c, right, bottom, lab).status is not Status.VERIFIED
    verdict(8, "single-image corruptions never verify", caught == total,
            f"{caught}/{total} corruptions caught over {len(maps)} maps and {len(squares)} squares")


def test_9_induction_certificate(verdict):
    t0 = time.perf_counter()
    proc = subprocess.run([sys.executable, "-m", "qisv", "report", "--max-n", "9", "--format", "json"],
                          capture_output=True, text=True, check=False)
    elapsed = time.perf_counter() - t0
    cert = json.loads(proc.stdout) if proc.returncode == 0 else {}
    ids = [a["id"] for a in cert.get("external_assumptions", [])]
    ok = (
        proc.returncode == 0
        and elapsed < 300
        and cert.get("overall_status") == "verified-with-assumptions"
        and ids == ["base-case", "generation-theorem", "hopf-image-factorization", "classical-inclusion"]
    )
    verdict(9, "report --max-n 9", ok,
            f"status {cert.get('overall_status')}, {len(cert.get('cells', []))} cells, assumptions {ids}, "
            f"{elapsed:.1f} s")

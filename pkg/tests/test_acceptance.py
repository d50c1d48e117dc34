"""Acceptance gate: nine end-to-end checks, one printed pass/fail line each.

Each test evaluates its whole check into a boolean first, records the
verdict line through :func:`helpers.record_criterion` (replayed by the
terminal-summary hook in conftest), and only then asserts.  A failing
criterion therefore still prints its line instead of dying mid-check.
"""

import numpy as np
from helpers import random_hamiltonian, random_state, record_criterion

from gspgate.criteria import (
    BoosterGspModel,
    booster_depth_model,
    max_depth,
    verdict_general,
    verdict_simplified,
    verdict_with_reps,
)
from gspgate.fixtures import fixture_text
from gspgate.runtime_model import (
    LT20,
    QPE,
    Accuracy,
    GseeModel,
    GspCandidate,
    Reference,
    runtime_reference,
    runtime_total,
    runtime_with_reps,
)
from gspgate.scenario import max_depth_curve, parse_curve_table, parse_sweep_table, sweep
from gspgate.spectral import FilterSpec, boost_filter, ground_state, overlap

EXPONENT_GRID = [
    (alpha, beta)
    for alpha in (0.0, 2.0, 4.0)
    for beta in (0.0, 1.0, 2.0)
    if alpha + beta >= 1
]


def test_criterion_01_spa_simplified_verdict():
    verdict = verdict_simplified(
        GseeModel(name="spa", alpha=0.0, beta=1.0),
        GspCandidate(name="spa", depth=3.0, gamma=0.85),
        Reference(0.72),
        Accuracy(1e-3),
    )
    ok = abs(verdict.rhs - 1.18) <= 0.005 and verdict.accepted
    line = record_criterion(
        1, "simplified verdict on the N2 SPA inputs: rhs = 1.18 +/- 0.005, accepted", ok
    )
    assert ok, f"{line} (rhs={verdict.rhs!r}, accepted={verdict.accepted})"


def test_criterion_02_booster_accepted_across_the_exponent_grid():
    candidate = GspCandidate(name="booster", depth=1e3, gamma=1.0, p_succ=0.5)
    reference = Reference(0.72)

    verdicts = []
    for alpha, beta in EXPONENT_GRID:
        model = GseeModel(name=f"grid-a{alpha:g}-b{beta:g}", alpha=alpha, beta=beta)
        accuracy = Accuracy(1.0 / (2e4 * candidate.gamma**beta))
        verdicts.append(verdict_with_reps(model, candidate, reference, accuracy))

    linear = verdicts[EXPONENT_GRID.index((0.0, 1.0))]
    ok = (
        len(verdicts) == 8
        and all(abs(v.lhs - 1.100) <= 1e-6 for v in verdicts)
        and abs(linear.rhs - 1.389) <= 1e-3
        and all(v.accepted for v in verdicts)
    )
    line = record_criterion(
        2,
        "booster verdict: lhs = 1.100 +/- 1e-6, linear rhs = 1.389 +/- 0.001, "
        "accepted for every exponent pair",
        ok,
    )
    assert ok, f"{line} (lhs={linear.lhs!r}, rhs={linear.rhs!r})"


def test_criterion_03_h2_sweep_fixture():
    rows, errors = sweep(parse_sweep_table(fixture_text("h2_sweep")))
    by_label = {row.variable: row for row in rows}
    ok = (
        not errors
        and set(by_label) == {"0.5", "2.6"}
        and abs(by_label["0.5"].rhs - 1.005) <= 1e-12
        and abs(by_label["2.6"].rhs - 1.5) <= 1e-12
        and all(row.accepted for row in rows)
    )
    line = record_criterion(
        3, "H2 sweep fixture: rhs = 1.005 and 1.5 at the two bond labels, accepted", ok
    )
    assert ok, f"{line} ({[(r.variable, r.rhs, r.accepted) for r in rows]})"


def test_criterion_04_jellium_depth_curve():
    gamma, d_gsee, grid = parse_curve_table(fixture_text("jellium"))
    points, errors = max_depth_curve(gamma, d_gsee, grid)
    values = [p.max_depth for p in points]
    at_half = {p.gamma0: p.max_depth for p in points}.get(0.5)
    ok = (
        not errors
        and at_half == 1.8e7
        and all(a > b for a, b in zip(values, values[1:]))
        and abs(values[0] - 1.62e8) <= 1e6
        and abs(values[-1] - 2.0e6) <= 1e5
    )
    line = record_criterion(
        4,
        "jellium curve: bound exactly 1.8e7 at gamma0=0.5, strictly decreasing, "
        "endpoints 1.62e8 and 2.0e6",
        ok,
    )
    assert ok, f"{line} (at_half={at_half!r}, ends=({values[0]!r}, {values[-1]!r}))"


def test_criterion_05_lt20_is_stricter_than_qpe():
    rng = np.random.default_rng(0x5CA1E)
    violations = 0
    for _ in range(10_000):
        gamma0 = rng.uniform(0.05, 1.0)
        gamma = rng.uniform(gamma0, 1.0)
        accuracy = Accuracy(10.0 ** rng.uniform(-6.0, -2.0))
        delta = 10.0 ** rng.uniform(-3.0, 0.0)
        depth = booster_depth_model(BoosterGspModel(delta=delta, gamma0=gamma0))
        candidate = GspCandidate(name="boosted", depth=depth, gamma=gamma)
        reference = Reference(gamma0)
        lt20 = verdict_general(LT20, candidate, reference, accuracy)
        qpe = verdict_general(QPE, candidate, reference, accuracy)
        if lt20.accepted and not qpe.accepted:
            violations += 1
    ok = violations == 0
    line = record_criterion(
        5,
        "strictness: zero tuples where lt20 accepts and qpe rejects "
        "(10000 random booster candidates)",
        ok,
    )
    assert ok, f"{line} ({violations} violations)"


def test_criterion_06_verdict_flips_at_the_depth_bound():
    rng = np.random.default_rng(0xB0D1)
    failures = 0
    for _ in range(1_000):
        alpha, beta = EXPONENT_GRID[int(rng.integers(len(EXPONENT_GRID)))]
        model = GseeModel(name=f"m-a{alpha:g}-b{beta:g}", alpha=alpha, beta=beta)
        gamma0 = rng.uniform(0.1, 0.8)
        gamma = gamma0 * rng.uniform(1.01, 1.2)
        accuracy = Accuracy(10.0 ** rng.uniform(-5.0, -2.0))
        p_succ = rng.uniform(0.3, 1.0)
        reference = Reference(gamma0)

        bound = max_depth(model, gamma, reference, accuracy, p_succ=p_succ)
        below = verdict_with_reps(
            model,
            GspCandidate(name="lo", depth=bound * (1 - 1e-9), gamma=gamma, p_succ=p_succ),
            reference,
            accuracy,
        )
        above = verdict_with_reps(
            model,
            GspCandidate(name="hi", depth=bound * (1 + 1e-9), gamma=gamma, p_succ=p_succ),
            reference,
            accuracy,
        )
        if not below.accepted or above.accepted:
            failures += 1
    ok = failures == 0
    line = record_criterion(
        6,
        "boundary: verdicts flip exactly at the depth bound, within 1e-9 relative "
        "(1000 scenarios)",
        ok,
    )
    assert ok, f"{line} ({failures} failures)"


def test_criterion_07_iterative_solver_matches_dense():
    rng = np.random.default_rng(0xD1A6)
    worst = 0.0
    for _ in range(100):
        dim = int(rng.integers(8, 257))
        hamiltonian = random_hamiltonian(rng, dim)
        spectrum = np.linalg.eigvalsh(hamiltonian.to_dense())
        scale = max(1.0, float(np.abs(spectrum).max()))

        dense = ground_state(hamiltonian, method="dense")
        iterative = ground_state(hamiltonian, method="iterative")
        probe = random_state(rng, dim)
        gamma_dense, _ = overlap(probe, dense)
        gamma_iterative, _ = overlap(probe, iterative)

        worst = max(
            worst,
            abs(dense.e0 - float(spectrum[0])) / scale,
            abs(iterative.e0 - dense.e0) / scale,
            abs(iterative.gap - dense.gap) / scale,
            abs(gamma_iterative - gamma_dense),
        )
    ok = worst <= 1e-8
    line = record_criterion(
        7,
        "spectral: iterative and dense routes agree on e0, gap, and overlap "
        "within 1e-8 after norm scaling (100 instances)",
        ok,
    )
    assert ok, f"{line} (worst deviation {worst:.3e})"


def test_criterion_08_filters_never_lower_the_overlap():
    rng = np.random.default_rng(0xF117E4)

    monotone_failures = 0
    checked = 0
    while checked < 1_000:
        dim = int(rng.integers(2, 65))
        hamiltonian = random_hamiltonian(rng, dim)
        spectrum = np.linalg.eigvalsh(hamiltonian.to_dense())
        e0 = float(spectrum[0])
        span = max(float(spectrum[-1] - spectrum[0]), 1.0)
        if rng.integers(2):
            spec = FilterSpec.gaussian(
                center=e0 - rng.uniform(0.001, 1.0) * span,
                width=rng.uniform(0.1, 2.0) * span,
            )
        else:
            spec = FilterSpec.exponential(pivot=e0, rate=rng.uniform(0.05, 5.0) / span)
        result = boost_filter(hamiltonian, random_state(rng, dim), spec)
        if result.gamma_before <= 1e-6:
            continue
        checked += 1
        if result.gamma_after < result.gamma_before - 1e-12:
            monotone_failures += 1

    purified = 0
    step_checked = 0
    while step_checked < 100:
        dim = int(rng.integers(2, 65))
        hamiltonian = random_hamiltonian(rng, dim)
        spectrum = np.linalg.eigvalsh(hamiltonian.to_dense())
        gap = float(spectrum[1] - spectrum[0])
        if gap <= 1e-6:
            continue
        cutoff = float(spectrum[0]) + rng.uniform(0.2, 0.8) * gap
        result = boost_filter(
            hamiltonian, random_state(rng, dim), FilterSpec.step(cutoff)
        )
        step_checked += 1
        if abs(result.gamma_after - 1.0) <= 1e-10:
            purified += 1

    ok = monotone_failures == 0 and purified == step_checked
    line = record_criterion(
        8,
        "boost: gaussian/exponential filters never lower the overlap (1000 runs); "
        "step filters inside the gap purify to gamma = 1 (100 runs)",
        ok,
    )
    assert ok, f"{line} ({monotone_failures} drops, {purified}/{step_checked} purified)"


def test_criterion_09_runtime_identities_hold_bit_for_bit():
    rng = np.random.default_rng(0x1DE7)
    trials = 10_000
    exact_reference = 0
    exact_with_reps = 0
    for _ in range(trials):
        model = GseeModel(
            name="random",
            alpha=float(rng.uniform(0.0, 4.0)),
            beta=float(rng.uniform(0.0, 4.0)),
            prefactor=float(10.0 ** rng.uniform(-1.0, 1.0)),
        )
        accuracy = Accuracy(float(10.0 ** rng.uniform(-6.0, -1.0)))
        gamma0 = float(rng.uniform(0.01, 1.0))

        zero_depth = GspCandidate(name="ref", depth=0.0, gamma=gamma0)
        if runtime_total(model, zero_depth, accuracy) == runtime_reference(
            model, Reference(gamma0), accuracy
        ):
            exact_reference += 1

        candidate = GspCandidate(
            name="cand",
            depth=float(10.0 ** rng.uniform(0.0, 9.0)),
            gamma=float(rng.uniform(gamma0, 1.0)),
            p_succ=1.0,
        )
        if runtime_with_reps(model, candidate, accuracy) == runtime_total(
            model, candidate, accuracy
        ):
            exact_with_reps += 1

    ok = exact_reference == trials and exact_with_reps == trials
    line = record_criterion(
        9,
        "runtime identities: zero-depth total equals the reference and p_succ=1 "
        "equals the plain total, bit for bit (10000 draws)",
        ok,
    )
    assert ok, f"{line} ({exact_reference}/{trials}, {exact_with_reps}/{trials})"

"""Acceptance suite: one test per shipping criterion, all at zero tolerance.

Each test prints a single PASS/FAIL line (bypassing capture) so a plain
``pytest -v`` run shows the per-criterion verdicts inline.  Criteria 1-3
share one generated corpus, built once per module.
"""

import random
import subprocess
import sys
from fractions import Fraction

import pytest

from phstab.bottleneck import (
    bottleneck_bijection,
    bottleneck_diagonal,
    brute_force_bottleneck,
)
from phstab.cli import run_command
from phstab.complexes import FiltrationFunction, has_unique_values
from phstab.generate import (
    GeneratorConfig,
    generate_complex,
    generate_instance,
    random_compatible_order,
    random_filtration,
)
from phstab.instances import format_instance
from phstab.interpolation import interpolate, sup_norm
from phstab.ordering import total_order
from phstab.persistence import diagram, diagram_with_order, pivot_pairs
from phstab.stability import verify_stability

from oracles import diagram_rank_count, persistent_betti, value_grid

CORPUS_SIZE = 500
SIZE_CAP = 40


def _announce(capsys, num, label, ok, detail):
    with capsys.disabled():
        print(f"\n[{num}] {label}: {'PASS' if ok else 'FAIL'} ({detail})")
    assert ok, f"[{num}] {label}: {detail}"


@pytest.fixture(scope="module")
def corpus():
    """500 verified random instances, at most 40 simplices, dimension <= 3."""
    shapes = [(4, 0.65), (5, 0.5), (5, 0.7), (6, 0.4), (6, 0.6), (7, 0.5)]
    out = []
    seed = 0
    while len(out) < CORPUS_SIZE:
        vertices, prob = shapes[seed % len(shapes)]
        cfg = GeneratorConfig(seed=seed, num_vertices=vertices, fill_prob=prob)
        seed += 1
        inst = generate_instance(cfg)
        if len(inst.complex) > SIZE_CAP:
            continue
        report = verify_stability(inst.complex, *inst.functions)
        out.append((inst, report))
    return out


def test_1_stability_bound_holds_everywhere(corpus, capsys):
    failures = 0
    for _, report in corpus:
        chain_ok = (
            report.exact_bottleneck
            <= report.composed_cost
            <= report.sup_norm_value
        )
        if not (report.holds and chain_ok):
            failures += 1
    _announce(
        capsys,
        1,
        "diagram distance bounded by function distance",
        failures == 0,
        f"{len(corpus)} instances, {failures} failures, exact rationals",
    )


def test_2_interval_certificates_stay_within_their_share(corpus, capsys):
    intervals = 0
    failures = 0
    for inst, report in corpus:
        f0, f1 = inst.functions
        gap = sup_norm(f0, f1)
        for cert in report.certificates:
            intervals += 1
            if cert.cost > (cert.t_hi - cert.t_lo) * gap:
                failures += 1
    _announce(
        capsys,
        2,
        "per-interval matchings within interval share",
        failures == 0,
        f"{intervals} intervals across {len(corpus)} instances, {failures} over budget",
    )


def test_3_schedules_are_small_and_midpoints_untied(corpus, capsys):
    failures = 0
    for inst, report in corpus:
        n = len(inst.complex)
        if len(report.schedule.times) > n * (n - 1) // 2:
            failures += 1
            continue
        f0, f1 = inst.functions
        bps = report.schedule.breakpoints()
        for lo, hi in zip(bps, bps[1:]):
            if not has_unique_values(interpolate(f0, f1, (lo + hi) / 2)):
                failures += 1
                break
    _announce(
        capsys,
        3,
        "crossing schedules bounded, interval midpoints tie-free",
        failures == 0,
        f"{len(corpus)} schedules, {failures} violations",
    )


def test_4_point_counts_depend_only_on_the_complex(capsys):
    rng = random.Random(404)
    complexes = 0
    failures = 0
    for seed in range(10):
        K = generate_complex(
            rng, GeneratorConfig(seed=seed, num_vertices=5, fill_prob=0.6)
        )
        complexes += 1
        reference = None
        for _ in range(20):
            f = random_filtration(K, rng)
            counts = diagram(K, f).counts_by_dim()
            if reference is None:
                reference = counts
            elif counts != reference:
                failures += 1
    _announce(
        capsys,
        4,
        "per-dimension point counts constant per complex",
        failures == 0,
        f"{complexes} complexes x 20 filtrations, {failures} mismatches",
    )


def test_5_diagonal_matching_never_costs_more(corpus, capsys):
    pairs = 0
    failures = 0
    for _, report in corpus[:200]:
        d_diag = bottleneck_diagonal(report.left_diagram, report.right_diagram)
        pairs += 1
        if d_diag > report.exact_bottleneck:
            failures += 1
    _announce(
        capsys,
        5,
        "diagonal-augmented distance at most bijection distance",
        failures == 0,
        f"{pairs} diagram pairs, {failures} violations, exact comparison",
    )


def test_6_tie_break_choice_never_changes_the_diagram(capsys):
    rng = random.Random(606)
    tied = 0
    failures = 0
    seed = 0
    while tied < 100:
        K = generate_complex(
            rng, GeneratorConfig(seed=seed, num_vertices=5, fill_prob=0.6)
        )
        seed += 1
        f = random_filtration(K, rng, unique=False)
        if has_unique_values(f):
            continue
        tied += 1
        reference = diagram(K, f).value_multiset()
        for _ in range(5):
            order = random_compatible_order(K, f, rng)
            if diagram_with_order(K, f, order).value_multiset() != reference:
                failures += 1
    _announce(
        capsys,
        6,
        "all tie-break orders give one diagram",
        failures == 0,
        f"{tied} tied filtrations x 5 sampled orders, {failures} mismatches",
    )


def test_7_independent_oracles_agree(capsys):
    # exact matcher vs exhaustive permutation search
    trials = 0
    seed = 0
    mismatches = 0
    while trials < 200:
        inst = generate_instance(
            GeneratorConfig(seed=7000 + seed, num_vertices=4, max_dimension=2, fill_prob=0.6)
        )
        seed += 1
        D0 = diagram(inst.complex, inst.functions[0], "f0")
        D1 = diagram(inst.complex, inst.functions[1], "f1")
        counts = list(D0.counts_by_dim().values()) + list(D1.counts_by_dim().values())
        if any(c > 7 for c in counts):
            continue
        trials += 1
        fast, _ = bottleneck_bijection(D0, D1)
        if fast != brute_force_bottleneck(D0, D1):
            mismatches += 1

    # pairing counts vs sublevel rank arithmetic
    rank_trials = 0
    seed = 0
    rank_failures = 0
    while rank_trials < 100:
        cfg = GeneratorConfig(
            seed=7500 + seed, num_vertices=4, max_dimension=2, fill_prob=0.5
        )
        seed += 1
        rng = random.Random(cfg.seed)
        K = generate_complex(rng, cfg)
        if len(K) > 12:
            continue
        f = random_filtration(K, rng)
        rank_trials += 1
        D = diagram(K, f)
        raw = [s.vertices for s in K.simplices]
        vals = list(f.values)
        grid = value_grid(vals)
        for i, a in enumerate(grid):
            for b in grid[i:]:
                for k in range(K.dim + 1):
                    if diagram_rank_count(D.points, k, a, b) != persistent_betti(
                        raw, vals, k, a, b
                    ):
                        rank_failures += 1
    _announce(
        capsys,
        7,
        "matcher equals brute force; pairing equals rank oracle",
        mismatches == 0 and rank_failures == 0,
        f"{trials} matcher trials ({mismatches} off), "
        f"{rank_trials} rank trials ({rank_failures} off)",
    )


def test_8_everything_is_deterministic(corpus, capsys, tmp_path):
    stable = True
    # pair lists: recompute from scratch on a corpus slice
    for inst, _ in corpus[:20]:
        order = total_order(inst.complex, inst.functions[0])
        if pivot_pairs(inst.complex, order) != pivot_pairs(inst.complex, order):
            stable = False
    # reports: identical in-process CLI output
    path = tmp_path / "det.txt"
    path.write_text(format_instance(corpus[0][0]))
    for argv in (
        ["diagram", str(path)],
        ["crossings", str(path)],
        ["verify", str(path), "--machine"],
    ):
        if run_command(argv) != run_command(argv):
            stable = False
    # and byte-identical across separate processes
    cmd = [sys.executable, "-m", "phstab.cli", "verify", str(path), "--machine"]
    a = subprocess.run(cmd, capture_output=True)
    b = subprocess.run(cmd, capture_output=True)
    if a.stdout != b.stdout or a.returncode != 0:
        stable = False
    _announce(
        capsys,
        8,
        "repeated runs byte-identical",
        stable,
        "pair lists, CLI reports, separate processes",
    )


def test_9_tiny_perturbations_move_diagrams_no_farther(capsys):
    rng = random.Random(909)
    checked = 0
    failures = 0
    for eps in (Fraction(1, 10), Fraction(1, 100), Fraction(1, 1000)):
        for seed in range(5):
            K = generate_complex(
                rng, GeneratorConfig(seed=seed, num_vertices=5, fill_prob=0.6)
            )
            f0 = random_filtration(K, rng)
            order = total_order(K, f0)
            n = len(K)
            # distinct offsets, increasing along the order, peaking at 1
            offsets = [Fraction(order.position_of[i] + 1, n) for i in range(n)]
            f1 = FiltrationFunction(
                K, tuple(v + eps * o for v, o in zip(f0.values, offsets))
            )
            if sup_norm(f0, f1) != eps:
                failures += 1
                continue
            report = verify_stability(K, f0, f1)
            checked += 1
            if report.exact_bottleneck > eps or not report.holds:
                failures += 1
    _announce(
        capsys,
        9,
        "eps-sized shifts move diagrams at most eps",
        failures == 0,
        f"{checked} instances over eps in {{1/10, 1/100, 1/1000}}, {failures} violations",
    )

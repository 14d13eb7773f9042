"""Acceptance criteria; each test prints one PASS/FAIL line."""

import gc
import random
import time
from fractions import Fraction

import pytest

from oorep.embed import derive_orientation, embed
from oorep.generators import InstanceSpec, fan, generate, octahedron, random_maximal_outerplanar
from oorep.geometry import is_plane_oor
from oorep.graph import build_graph
from oorep.obstacle import build_obstacle, visibility_graph
from oorep.orientation import (
    decide_single_hub,
    enumerate_exists,
    greedy_outerplanar,
    solve_dp,
    validate_orientation,
)
from oorep.recognize import NotInnerChordal, recognize

from conftest import k4_star_graph

MIN_ORACLE_INSTANCES = 500
MAX_CHORDS = 12
ORACLE_BUDGET_S = 10.0
MOP_INSTANCES = 200
MOP_MAX_N = 200
MIN_MUTATIONS = 100
OBSTACLE_MAX_N = 50
FAN_SIZES = (10**3, 10**4, 10**5)
FAN_BUDGET_S = 5.0
MAX_STEP_RATIO = 15.0


@pytest.fixture
def report(capsys):
    def emit(k, ok, detail):
        with capsys.disabled():
            print(f"\nCRITERION {k}: {'PASS' if ok else 'FAIL'} {detail}")
        assert ok, detail
    return emit


def oracle_specs():
    specs = [InstanceSpec("fan", n) for n in range(3, MAX_CHORDS + 4)]
    specs += [InstanceSpec("k4_chain", s) for s in range(1, MAX_CHORDS + 2)]
    specs += [InstanceSpec("k4_star", s) for s in range(1, MAX_CHORDS // 3 + 1)]
    specs += [InstanceSpec("random_construction_tree", s, seed)
              for s in range(1, MAX_CHORDS + 2) for seed in range(40)]
    return specs


@pytest.fixture(scope="module")
def corpus():
    """Recognised oracle-sized instances with their DP orientations."""
    out = []
    for spec in oracle_specs():
        ic = recognize(generate(spec).graph)
        out.append((spec, ic, solve_dp(ic.tree)))
    return out


@pytest.fixture(scope="module")
def drawings(corpus):
    """(ic, o, drawing) for every instance with an orientation."""
    return [(ic, o, embed(ic, o)) for _, ic, o in corpus if o is not None]


@pytest.fixture(scope="module")
def mop_cases():
    rng = random.Random(2024)
    out = []
    for _ in range(MOP_INSTANCES):
        n = rng.randint(3, MOP_MAX_N)
        out.append(random_maximal_outerplanar(n, rng))
    return out


def test_criterion_1_dp_matches_oracle(report):
    specs = oracle_specs()
    t0 = time.perf_counter()
    mismatches, sizes, yes = [], [], 0
    for spec in specs:
        ic = recognize(generate(spec).graph)
        sizes.append(len(ic.chords))
        dp = solve_dp(ic.tree) is not None
        yes += dp
        if dp != enumerate_exists(ic, max_chords=MAX_CHORDS):
            mismatches.append(spec)
    elapsed = time.perf_counter() - t0
    ok = (len(specs) >= MIN_ORACLE_INSTANCES and max(sizes) <= MAX_CHORDS
          and not mismatches and elapsed < ORACLE_BUDGET_S)
    report(1, ok, f"{len(specs)} instances (max {max(sizes)} chords, {yes} representable, "
                  f"{len(specs) - yes} not), {len(mismatches)} mismatches, {elapsed:.2f}s < {ORACLE_BUDGET_S}s")


def test_criterion_2_soundness_chain(report, corpus, drawings):
    failures = []
    for ic, o, d in drawings:
        if not validate_orientation(ic, o).ok:
            failures.append(("orientation", ic.chords))
            continue
        r = is_plane_oor(d)
        if not (r.verdict and r.local_verdict and r.exhaustive_verdict):
            failures.append(("verify", ic.chords))
    ok = not failures and len(drawings) > 0
    report(2, ok, f"{len(drawings)} successful DP runs validated, embedded and verified "
                  f"by both criteria; {len(failures)} failures")


def test_criterion_3_maximal_outerplanar(report, mop_cases):
    failures = 0
    for g in mop_cases:
        try:
            ic = recognize(g)
        except NotInnerChordal:
            failures += 1
            continue
        greedy = greedy_outerplanar(ic)
        dp = solve_dp(ic.tree)
        if dp is None or not validate_orientation(ic, greedy).ok or not validate_orientation(ic, dp).ok:
            failures += 1
            continue
        for o in (greedy, dp):
            r = is_plane_oor(embed(ic, o))
            if not (r.verdict and r.local_verdict and r.exhaustive_verdict):
                failures += 1
                break
    ns = [g.n for g in mop_cases]
    report(3, failures == 0, f"{len(mop_cases)} instances with n in [{min(ns)}, {max(ns)}]; "
                             f"greedy and DP orientations embedded and verified; {failures} failures")


def _mutations(drawings, rng, want):
    """Planar, general-position perturbations of produced drawings."""
    out = []
    attempts = 0
    while len(out) < want and attempts < 50 * want:
        attempts += 1
        _, _, d = rng.choice(drawings)
        base = d.without_structure()
        v = rng.randrange(base.graph.n)
        x, y = base.points[v]
        scale = Fraction(1, rng.choice([1, 2, 8, 64, 1024]))
        m = base.moved(v, (x + rng.randint(-3, 3) * scale, y + rng.randint(-3, 3) * scale))
        r = is_plane_oor(m)
        if r.planar and r.general_position and r.structure_ok and r.local_verdict is not None:
            out.append(r)
    return out


def test_criterion_4_local_equals_exhaustive(report, drawings):
    produced = [is_plane_oor(d.without_structure()) for _, _, d in drawings]
    mutated = _mutations(drawings, random.Random(7), 3 * MIN_MUTATIONS)
    disagree = sum(not r.criteria_agree for r in produced + mutated)
    broken = sum(not r.exhaustive_verdict for r in mutated)
    ok = disagree == 0 and len(mutated) >= MIN_MUTATIONS
    report(4, ok, f"{len(produced)} produced + {len(mutated)} mutated planar drawings "
                  f"({broken} of them no longer representations); {disagree} disagreements")


def _decide(g):
    try:
        ic = recognize(g)
    except NotInnerChordal as exc:
        return False, exc.reason.kind, None
    return solve_dp(ic.tree) is not None, None, ic


def test_criterion_5_fixed_instances(report):
    k4 = build_graph(4, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 3), (2, 3)])
    two_k4 = build_graph(6, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 3), (2, 3),
                                (0, 4), (1, 4), (0, 5), (1, 5), (4, 5)])
    gadget = generate(InstanceSpec("triple_k4_gadget")).graph
    expected = [
        ("octahedron", octahedron(), False, "inner_degree_violation"),
        ("C4", build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)]), False, "chordless_cycle"),
        ("K4", k4, True, None),
        ("F6", fan(6), True, None),
        ("two K4 sharing an edge", two_k4, True, None),
        ("K4 star", k4_star_graph(), True, None),
        ("triple K4 gadget", gadget, False, None),
    ]
    wrong = []
    for name, g, want, kind in expected:
        got, got_kind, ic = _decide(g)
        if got != want or (kind is not None and got_kind != kind):
            wrong.append(name)
        if name == "K4 star" and not decide_single_hub(ic.tree):
            wrong.append(name + " (single hub)")
        if name == "triple K4 gadget" and enumerate_exists(ic) is not False:
            wrong.append(name + " (oracle)")
    report(5, not wrong, f"{len(expected)} fixed instances as expected" if not wrong else f"wrong: {wrong}")


def test_criterion_6_round_trip(report, drawings, mop_cases):
    pairs = [(ic, o, d) for ic, o, d in drawings]
    for g in mop_cases[:50]:
        ic = recognize(g)
        o = greedy_outerplanar(ic)
        pairs.append((ic, o, embed(ic, o)))
    bad = sum(derive_orientation(d.without_structure()) != o for _, o, d in pairs)
    report(6, bad == 0, f"{len(pairs)} (graph, orientation) pairs; {bad} round-trip differences")


def test_criterion_7_obstacles(report, drawings, mop_cases):
    cases = [d for _, _, d in drawings if d.graph.n <= OBSTACLE_MAX_N]
    for g in mop_cases:
        if g.n <= OBSTACLE_MAX_N:
            ic = recognize(g)
            cases.append(embed(ic, solve_dp(ic.tree)))
    bad = 0
    for d in cases:
        try:
            poly = build_obstacle(d)
            bad += not (poly.is_simple() and visibility_graph(d.points, poly).edges == d.graph.edges)
        except Exception:
            bad += 1
    report(7, bad == 0, f"{len(cases)} drawings with n <= {OBSTACLE_MAX_N}; {bad} obstacles not certified")


def _decision_time(g, repeat=3):
    best = float("inf")
    for _ in range(repeat):
        gc.collect()
        gc.disable()
        try:
            t0 = time.perf_counter()
            ok = solve_dp(recognize(g).tree) is not None
            best = min(best, time.perf_counter() - t0)
        finally:
            gc.enable()
        assert ok
    return best


def test_criterion_8_fan_scaling(report):
    times = [_decision_time(fan(n)) for n in FAN_SIZES]
    ratios = [b / a for a, b in zip(times, times[1:])]
    ok = times[-1] <= FAN_BUDGET_S and max(ratios) <= MAX_STEP_RATIO
    shown = ", ".join(f"n={n}: {t:.3f}s" for n, t in zip(FAN_SIZES, times))
    report(8, ok, f"{shown}; step ratios {', '.join(f'{r:.1f}x' for r in ratios)} "
                  f"(limits {FAN_BUDGET_S}s, {MAX_STEP_RATIO}x)")

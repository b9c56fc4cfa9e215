import random
from fractions import Fraction

import pytest

from phstab.bottleneck import Matching, matching_cost
from phstab.complexes import FiltrationFunction, validate_complex
from phstab.errors import (
    ChainMismatch,
    InvalidFiltration,
    MultisetMismatch,
    NonUniqueValues,
    OrderNotConstant,
)
from phstab.generate import (
    GeneratorConfig,
    generate_complex,
    generate_instance,
    random_compatible_order,
    random_filtration,
)
from phstab.ordering import check_order_compatible
from phstab.persistence import diagram, diagram_with_order
from phstab.stability import (
    breakpoint_matching,
    compose_matchings,
    interval_matching,
    verify_stability,
)

EDGE = [(0,), (1,), (0, 1)]


def test_interval_certificate_on_half_interval():
    K = validate_complex(EDGE)
    f0 = FiltrationFunction(K, (0, 1, 2))
    f1 = FiltrationFunction(K, (1, Fraction(1, 4), 2))
    # vertices swap at t = 4/7; the left interval is certified in one piece
    cert = interval_matching(K, f0, f1, 0, Fraction(4, 7))
    # every simplex is a coordinate of some point, so cost == bound exactly
    assert cert.cost == cert.bound == Fraction(4, 7) * 1
    assert len(cert.matching) == len(cert.left.points)
    assert cert.left.points == diagram(K, f0).points
    check_order_compatible(K, f0, cert.order_used)


def test_interval_matching_rejects_interior_swap():
    K = validate_complex(EDGE)
    f0 = FiltrationFunction(K, (0, 1, 2))
    f1 = FiltrationFunction(K, (1, Fraction(1, 4), 2))
    with pytest.raises(OrderNotConstant):
        interval_matching(K, f0, f1, 0, 1)
    with pytest.raises(ValueError):
        interval_matching(K, f0, f1, Fraction(1, 2), Fraction(1, 2))


def test_interval_matching_of_identical_functions_costs_nothing():
    # ties are fine here: the canonical tie-break serves both endpoints
    K = validate_complex(EDGE)
    f = FiltrationFunction(K, (0, 0, 1))
    cert = interval_matching(K, f, f, 0, 1)
    assert cert.cost == 0
    assert cert.bound == 0
    assert cert.left.points == cert.right.points


def test_breakpoint_matching_between_tie_break_orders():
    rng = random.Random(21)
    for seed in range(10):
        K = generate_complex(rng, GeneratorConfig(seed=seed, num_vertices=5))
        f = random_filtration(K, rng, unique=False)
        D_a = diagram_with_order(K, f, random_compatible_order(K, f, rng))
        D_b = diagram_with_order(K, f, random_compatible_order(K, f, rng))
        m = breakpoint_matching(D_a, D_b)
        assert matching_cost(D_a, D_b, m) == 0


def test_breakpoint_matching_rejects_different_functions():
    K = validate_complex(EDGE)
    D_a = diagram(K, FiltrationFunction(K, (0, 1, 2)))
    D_b = diagram(K, FiltrationFunction(K, (0, 1, 3)))
    with pytest.raises(MultisetMismatch):
        breakpoint_matching(D_a, D_b)


def test_compose_matchings():
    a = Matching(((0, 1), (1, 0)))
    b = Matching(((0, 0), (1, 1)))
    assert compose_matchings([a, b]).pairs == ((0, 1), (1, 0))
    assert compose_matchings([a, a]).pairs == ((0, 0), (1, 1))
    with pytest.raises(ChainMismatch):
        compose_matchings([])
    with pytest.raises(ChainMismatch):
        compose_matchings([a, Matching(((0, 0),))])


def test_verify_stability_single_crossing():
    K = validate_complex(EDGE)
    f0 = FiltrationFunction(K, (0, 1, 2))
    f1 = FiltrationFunction(K, (1, Fraction(1, 4), 2))
    report = verify_stability(K, f0, f1)
    assert report.holds
    assert report.sup_norm_value == 1
    assert report.schedule.times == (Fraction(4, 7),)
    assert len(report.certificates) == 2
    assert report.composed_cost == Fraction(1, 4)
    assert report.exact_bottleneck == Fraction(1, 4)
    assert report.left_diagram.points == diagram(K, f0, "f0").points
    assert report.right_diagram.points == diagram(K, f1, "f1").points


def test_verify_stability_shift_by_constant():
    """Adding a constant moves every diagram point by exactly that much."""
    rng = random.Random(22)
    K = generate_complex(rng, GeneratorConfig(seed=22, num_vertices=5))
    f0 = random_filtration(K, rng)
    c = Fraction(3, 8)
    f1 = FiltrationFunction(K, tuple(v + c for v in f0.values))
    report = verify_stability(K, f0, f1)
    assert report.sup_norm_value == c
    assert report.schedule.times == ()
    assert report.composed_cost == c
    assert report.exact_bottleneck <= c
    assert report.holds


def test_verify_stability_identical_functions():
    rng = random.Random(23)
    K = generate_complex(rng, GeneratorConfig(seed=23, num_vertices=4))
    f = random_filtration(K, rng)
    report = verify_stability(K, f, f)
    assert report.sup_norm_value == 0
    assert report.composed_cost == 0
    assert report.exact_bottleneck == 0


def test_verify_stability_demands_unique_values():
    K = validate_complex(EDGE)
    f0 = FiltrationFunction(K, (0, 0, 1))
    f1 = FiltrationFunction(K, (0, 1, 2))
    with pytest.raises(NonUniqueValues):
        verify_stability(K, f0, f1)


def test_verify_stability_demands_monotone_functions():
    K = validate_complex(EDGE)
    f0 = FiltrationFunction(K, (0, 1, 2))
    bad = FiltrationFunction(K, (0, 3, 2))
    with pytest.raises(InvalidFiltration):
        verify_stability(K, f0, bad)


def test_verify_stability_random_instances():
    for seed in range(20):
        inst = generate_instance(GeneratorConfig(seed=seed, num_vertices=5))
        report = verify_stability(inst.complex, *inst.functions)
        assert report.holds
        assert report.exact_bottleneck <= report.composed_cost
        assert report.composed_cost <= report.sup_norm_value
        for cert in report.certificates:
            assert cert.cost <= cert.bound
            assert cert.bound == (cert.t_hi - cert.t_lo) * report.sup_norm_value
        # the composed matching is a genuine bijection with the stated cost
        assert (
            matching_cost(
                report.left_diagram, report.right_diagram, report.composed_matching
            )
            == report.composed_cost
        )

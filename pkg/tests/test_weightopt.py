import math
import random
from fractions import Fraction

import pytest

from snspectra.characters import class_size
from snspectra.partitions import partitions_of
from snspectra.spectrum import fixed_point_generating_set, graph_spectrum
from snspectra.weightopt import (
    ClassWeighting,
    LPError,
    optimize_bound,
    solve_lp_min,
    uniform_weighting,
    weighted_eigenvalue,
)


def test_uniform_weighting_recovers_spectrum():
    for n, t in [(5, 2), (6, 2), (6, 3)]:
        uniform = uniform_weighting(n, t)
        assert uniform.weighted_degree() == 1
        spec = graph_spectrum(n, t)
        by = {r.partition: r.eigenvalue for r in spec.rows}
        for alpha in partitions_of(n):
            assert weighted_eigenvalue(alpha, uniform) == Fraction(
                by[alpha], spec.degree
            )


def test_trivial_component_sees_the_normalization():
    for n, t in [(5, 2), (7, 3)]:
        uniform = uniform_weighting(n, t)
        assert weighted_eigenvalue((n,), uniform) == 1


def test_single_class_weighting():
    n, t = 6, 2
    gen = fixed_point_generating_set(n, t)
    ctype, size = gen.classes[0]
    w = ClassWeighting(n=n, t=t, weights=((ctype, Fraction(1, size)),))
    assert w.weighted_degree() == 1
    from snspectra.characters import mn_character
    from snspectra.partitions import dimension

    for alpha in partitions_of(n)[:4]:
        expected = Fraction(mn_character(alpha, ctype), dimension(alpha))
        assert weighted_eigenvalue(alpha, w) == expected


# ---------------------------------------------------------------------------
# The exact simplex core.


def test_simplex_small_dictionary():
    # min -x - y st x + y <= 1 as equalities with a slack
    cost = [Fraction(-1), Fraction(-1), Fraction(0)]
    a_eq = [[Fraction(1), Fraction(1), Fraction(1)]]
    b_eq = [Fraction(1)]
    x, obj, _ = solve_lp_min(cost, a_eq, b_eq)
    assert obj == -1
    assert x[0] + x[1] == 1


def test_simplex_infeasible():
    cost = [Fraction(1)]
    a_eq = [[Fraction(1)], [Fraction(1)]]
    b_eq = [Fraction(1), Fraction(2)]
    with pytest.raises(LPError):
        solve_lp_min(cost, a_eq, b_eq)


def test_simplex_unbounded():
    cost = [Fraction(-1), Fraction(0)]
    a_eq = [[Fraction(1), Fraction(-1)]]  # x - y = 1, minimize -x
    b_eq = [Fraction(1)]
    with pytest.raises(LPError):
        solve_lp_min(cost, a_eq, b_eq)


# ---------------------------------------------------------------------------
# The weighted bound.


@pytest.mark.parametrize("n,t", [(6, 2), (6, 3), (7, 2), (7, 3), (8, 2), (8, 3)])
def test_optimized_bound_is_certified_and_sound(n, t):
    result = optimize_bound(n, t)
    assert result.certified
    assert result.least_eigenvalue < 0
    assert result.bound <= result.uniform_bound
    # the t-coset is a verified independent family of size (n-t)!
    assert result.bound >= math.factorial(n - t)


def test_uniform_bound_matches_unweighted_hoffman():
    from snspectra.bounds import bound_report

    for n, t in [(6, 2), (7, 2), (8, 2)]:
        result = optimize_bound(n, t)
        assert result.uniform_bound == bound_report(n, t).hoffman_value


def test_random_feasible_weightings_stay_sound():
    rng = random.Random(7)
    for n, t in [(6, 2), (7, 2), (7, 3), (8, 3)]:
        gen = fixed_point_generating_set(n, t)
        classes = gen.classes
        for _ in range(10):
            raw = [Fraction(rng.randint(0, 20)) for _ in classes]
            if not any(raw):
                raw[0] = Fraction(1)
            scale = sum(
                (r * size for r, (_, size) in zip(raw, classes)), Fraction(0)
            )
            weights = tuple(
                (c, r / scale) for r, (c, size) in zip(raw, classes)
            )
            weighting = ClassWeighting(n=n, t=t, weights=weights)
            assert weighting.weighted_degree() == 1
            least = min(
                weighted_eigenvalue(a, weighting)
                for a in partitions_of(n)
                if a != (n,)
            )
            assert least < 0
            bound = Fraction(-least, 1 - least) * math.factorial(n)
            assert bound >= math.factorial(n - t)


def test_optimize_requires_generating_classes():
    with pytest.raises(LPError):
        optimize_bound(5, 5)  # no class has exactly 4 fixed points


def test_weight_support_stays_on_generating_classes():
    result = optimize_bound(7, 2)
    gen_types = set(fixed_point_generating_set(7, 2).cycle_types())
    for ctype, weight in result.weighting.weights:
        assert ctype in gen_types
        assert weight >= 0
    total = sum(
        (w * class_size(c) for c, w in result.weighting.weights), Fraction(0)
    )
    assert total == 1


def test_t3_bound_stalls_at_pair_scale():
    # weighted bounds do not reach (n-3)! for the 3-point graph; they stay
    # at the (n-2)! scale, which is the point of exploring them
    for n in (7, 8):
        result = optimize_bound(n, 3)
        assert result.bound > math.factorial(n - 2) / 2

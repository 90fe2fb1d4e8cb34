"""
Channel Tests
=============

Exact entropy, posterior, mutual-information and moment quantities of f(X)
observed through BSC(alpha).
"""

import math

import numpy as np
import pytest
import allure

from boolinfo.analysis.channel import (
    LOG2_E,
    NoiseParameter,
    binary_entropy,
    bsc_capacity,
    conditional_entropy,
    entropy_taylor_lower_bound,
    even_moment,
    even_moments_array,
    hypercontractive_check,
    max_posterior_deviation,
    mi_upper_from_moments,
    moment_report,
    mutual_information,
    mutual_information_array,
    posterior_table,
    second_moment_spectral,
    taylor_coefficient,
    taylor_weights,
)
from boolinfo.analysis.hypercube import (
    BooleanFunction,
    RealHypercubeFunction,
    fourier_transform,
    named_family,
    noise_array,
    spectrum_array,
)
from boolinfo.core import SmartAssert, step_aware_loggerStep
from boolinfo.core.errors import InvalidNoiseParameter, MomentInputError
from boolinfo.search.enumeration import FunctionClass, Scope, iter_truth_table_ints
from boolinfo.utils.data_loader import get_scenarios, get_section
from boolinfo.utils.function_spec import parse_function_spec
from boolinfo.utils.grids import linspace_grid
from boolinfo.utils.random_utils import make_rng, random_balanced, random_function, random_permutation
from boolinfo.utils.truth_table import tables_from_ints

BOUNDS = get_section("bounds")


def _all_functions(n: int):
    return [BooleanFunction.from_int(n, value) for value in range(1 << (1 << n))]


class TestEntropy:
    """h(p), the BSC capacity and the Taylor machinery."""

    @allure.title("Binary entropy values and domain")
    @allure.tag("channel", "entropy", "smoke")
    @allure.severity(allure.severity_level.CRITICAL)
    @pytest.mark.smoke
    def test_binary_entropy(self):
        with step_aware_loggerStep("Step 1: Closed-form values"):
            SmartAssert.equal(binary_entropy(0.5), 1.0, "h(1/2) = 1")
            SmartAssert.equal(binary_entropy(0.0), 0.0, "h(0) = 0")
            SmartAssert.equal(binary_entropy(1.0), 0.0, "h(1) = 0")
            SmartAssert.close(binary_entropy(0.25), 2.0 - 0.75 * math.log2(3.0), 1e-15, "h(1/4) = 2 - 3/4 log2 3")
            SmartAssert.close(binary_entropy(0.25), BOUNDS["entropy_quarter"], 1e-15, "h(1/4)")
        with step_aware_loggerStep("Step 2: Symmetry"):
            worst = max(abs(binary_entropy(p) - binary_entropy(1.0 - p)) for p in np.linspace(0.0, 1.0, 41))
            SmartAssert.close(worst, 0.0, 1e-14, "h(p) = h(1 - p) on 41 points")
        for p in (-0.01, 1.01, float("nan")):
            with pytest.raises(InvalidNoiseParameter):
                binary_entropy(p)

    @allure.title("BSC capacity: series and closed form agree")
    @allure.tag("channel", "entropy")
    @allure.severity(allure.severity_level.NORMAL)
    def test_bsc_capacity(self):
        with step_aware_loggerStep("Step 1: Compare with 1 - h((1 - rho)/2)"):
            worst = max(abs(bsc_capacity(rho) - (1.0 - binary_entropy((1.0 - rho) / 2.0)))
                        for rho in np.linspace(0.05, 1.0, 96))
            SmartAssert.close(worst, 0.0, 1e-12, "Series matches the closed form on 96 points")
            SmartAssert.equal(bsc_capacity(0.0), 0.0, "Capacity 0 at rho = 0")
            SmartAssert.equal(bsc_capacity(1.0), 1.0, "Capacity 1 at rho = 1")
        with step_aware_loggerStep("Step 2: Leading term c1 rho^2 for tiny rho"):
            rho = 1e-6
            SmartAssert.close(bsc_capacity(rho) / (rho * rho), taylor_coefficient(1), 1e-9, "capacity ~ c1 rho^2")
        with pytest.raises(InvalidNoiseParameter):
            bsc_capacity(1.5)

    @allure.title("Taylor coefficients from log2(e)")
    @allure.tag("channel", "taylor")
    @allure.severity(allure.severity_level.CRITICAL)
    def test_taylor_coefficients(self):
        with step_aware_loggerStep("Step 1: c1 and c2"):
            c1 = taylor_coefficient(1)
            SmartAssert.true(BOUNDS["c1_low"] <= c1 <= BOUNDS["c1_high"], "c1 in [0.72134752, 0.72134753]")
            SmartAssert.close(c1, LOG2_E / 2.0, 1e-16, "c1 = log2(e)/2")
            SmartAssert.close(taylor_coefficient(2), BOUNDS["c2_approx"], 1e-7, "c2 ~ 0.1202246")
        with step_aware_loggerStep("Step 2: Weights sum to 1"):
            for t in range(1, 8):
                weights = taylor_weights(t)
                SmartAssert.equal(len(weights), t, f"t={t} weights")
                SmartAssert.close(sum(weights), 1.0, 1e-15, f"sum of weights at t={t}")
        with pytest.raises(MomentInputError):
            taylor_weights(0)

    @allure.title("Entropy Taylor lower bound examples")
    @allure.tag("channel", "taylor", "smoke")
    @allure.severity(allure.severity_level.CRITICAL)
    @pytest.mark.smoke
    def test_taylor_lower_bound(self):
        with step_aware_loggerStep("Step 1: Endpoints"):
            for t in range(1, 6):
                SmartAssert.equal(entropy_taylor_lower_bound(0.0, t), 1.0, f"p=0, t={t}")
                SmartAssert.close(entropy_taylor_lower_bound(1.0, t), 0.0, 1e-15, f"p=1, t={t}")
                SmartAssert.close(entropy_taylor_lower_bound(-1.0, t), 0.0, 1e-15, f"p=-1, t={t}")
        with step_aware_loggerStep("Step 2: p = 1/2, t = 2"):
            value = entropy_taylor_lower_bound(0.5, 2)
            SmartAssert.close(value, BOUNDS["taylor_p_half_t2"], 1e-12, "1 - c1/4 - (1 - c1)/16")
            SmartAssert.at_most(value, binary_entropy(0.25), 0.0, "Below h(1/4)")
        with pytest.raises(InvalidNoiseParameter):
            entropy_taylor_lower_bound(1.5, 2)


class TestPosteriorsAndInformation:
    """Posterior deviations and exact mutual information."""

    mi_scenarios = get_scenarios("mutual_information")

    @pytest.mark.parametrize("scenario", mi_scenarios)
    @allure.title("Mutual information: {scenario[id]}")
    @allure.description("Data-driven exact MI values from config/verification_data.json")
    @allure.tag("channel", "mutual-information", "data-driven")
    @allure.severity(allure.severity_level.CRITICAL)
    def test_mutual_information(self, scenario):
        f = parse_function_spec(scenario["spec"])
        with step_aware_loggerStep(f"Step 1: I(f(X); Y) for {scenario['spec']} at alpha={scenario['alpha']}"):
            SmartAssert.close(mutual_information(f, scenario["alpha"]), scenario["mi"],
                              scenario["tolerance"], "Exact MI")

    @allure.title("Posterior tables of the dictator, at alpha=0 and at alpha=1/2")
    @allure.tag("channel", "posterior")
    @allure.severity(allure.severity_level.CRITICAL)
    def test_posterior_examples(self):
        dictator = named_family("dictator", 3, 1)
        with step_aware_loggerStep("Step 1: Dictator posteriors are alpha and 1 - alpha"):
            table = posterior_table(dictator, 0.2)
            expected = np.where(dictator.table == 1, 0.2, 0.8)
            SmartAssert.true(bool(np.allclose(table.posteriors, expected, atol=1e-15)), "P_y in {alpha, 1 - alpha}")
        with step_aware_loggerStep("Step 2: Noiseless channel returns f"):
            f = random_function(4, 3)
            SmartAssert.true(bool(np.array_equal(posterior_table(f, 0.0).deviations.table, f.table)), "d = f")
        with step_aware_loggerStep("Step 3: Pure noise"):
            d = posterior_table(random_balanced(4, 5), 0.5).deviations.table
            SmartAssert.equal(float(np.max(np.abs(d))), 0.0, "d = 0 at alpha = 1/2")
        for alpha in (-0.1, 0.51):
            with pytest.raises(InvalidNoiseParameter):
                NoiseParameter(alpha)

    @allure.title("Dictator attains 1 - h(alpha) on the acceptance grid")
    @allure.tag("channel", "dictator", "acceptance")
    @allure.severity(allure.severity_level.BLOCKER)
    @pytest.mark.acceptance
    def test_dictator_equality(self):
        for alpha in get_section("acceptance")["dictator_alphas"]:
            for i in (1, 2, 3):
                mi = mutual_information(named_family("dictator", 3, i), alpha)
                SmartAssert.close(mi, 1.0 - binary_entropy(alpha), 1e-12, f"x{i} at alpha={alpha}")

    @allure.title("0 <= MI <= H(f(X)) and the posterior mean on every function at n=3")
    @allure.tag("channel", "mutual-information", "exhaustive")
    @allure.severity(allure.severity_level.CRITICAL)
    def test_information_range_and_posterior_mean(self):
        functions = list(_all_functions(3))
        for alpha in (0.0, 0.1, 0.25, 0.4, 0.5):
            with step_aware_loggerStep(f"Step: 256 functions at alpha={alpha}"):
                below_zero = above_prior = chain_error = mean_error = largest_deviation = 0.0
                for f in functions:
                    prior = binary_entropy(f.count_negative() / f.size)
                    mi = mutual_information(f, alpha)
                    d = posterior_table(f, alpha).deviations
                    below_zero = max(below_zero, -mi)
                    above_prior = max(above_prior, mi - prior)
                    chain_error = max(chain_error, abs(mi - (prior - conditional_entropy(f, alpha))))
                    mean_error = max(mean_error, abs(d.mean() - fourier_transform(f).coefficient()))
                    largest_deviation = max(largest_deviation, float(np.max(np.abs(d.table))))
                SmartAssert.at_most(below_zero, 0.0, 1e-12, "MI >= 0")
                SmartAssert.at_most(above_prior, 0.0, 1e-12, "MI <= H(f(X))")
                SmartAssert.close(chain_error, 0.0, 1e-12, "MI = H(f(X)) - H(f(X) | Y)")
                SmartAssert.close(mean_error, 0.0, 1e-9, "E d = f_hat(empty set)")
                SmartAssert.at_most(largest_deviation, 1.0, 1e-12, "|d| <= 1")

    @allure.title("MI and moments are invariant under permutation and negation")
    @allure.tag("channel", "symmetry")
    @allure.severity(allure.severity_level.NORMAL)
    def test_symmetry(self):
        rng = make_rng(99)
        for trial in range(100):
            n = int(rng.integers(2, 6))
            f = random_function(n, rng)
            g = f.permute(random_permutation(n, rng)).negate()
            alpha = float(rng.uniform(0.0, 0.5))
            with step_aware_loggerStep(f"Step {trial + 1}: n={n}, alpha={alpha:.4f}"):
                SmartAssert.close(mutual_information(g, alpha), mutual_information(f, alpha), 1e-12, "MI")
                SmartAssert.close(even_moment(g, alpha, 2), even_moment(f, alpha, 2), 1e-12, "M_4")

    @allure.title("Maximum posterior deviation: dictator, majority, pure noise")
    @allure.tag("channel", "posterior")
    @allure.severity(allure.severity_level.NORMAL)
    def test_max_posterior_deviation(self):
        with step_aware_loggerStep("Step 1: Dictator"):
            value, _ = max_posterior_deviation(named_family("dictator", 3, 2), 0.25)
            SmartAssert.close(value, 0.5, 1e-15, "1 - 2 alpha")
        with step_aware_loggerStep("Step 2: Majority at the all-(+1) mask"):
            value, mask = max_posterior_deviation(named_family("majority", 3), 0.25)
            SmartAssert.close(value, get_section("acceptance")["crossover_max_deviation_majority"], 1e-15,
                              "3/2 rho - 1/2 rho^3")
            SmartAssert.less_than(0.5, value, "Majority exceeds 1 - 2 alpha")
            SmartAssert.equal(mask, 0, "Attained at mask 0 (all +1)")
        with step_aware_loggerStep("Step 3: Pure noise"):
            value, _ = max_posterior_deviation(named_family("majority", 3), 0.5)
            SmartAssert.equal(value, 0.0, "No deviation at alpha = 1/2")


class TestMoments:
    """Even moments, their spectral form and the moment-based MI bound."""

    moment_scenarios = get_scenarios("moments")

    @pytest.mark.parametrize("scenario", moment_scenarios)
    @allure.title("Even moment: {scenario[id]}")
    @allure.description("Data-driven even moments from config/verification_data.json")
    @allure.tag("channel", "moments", "data-driven")
    @allure.severity(allure.severity_level.CRITICAL)
    def test_even_moment(self, scenario):
        f = parse_function_spec(scenario["spec"])
        with step_aware_loggerStep(f"Step 1: M_{2 * scenario['k']} of {scenario['spec']}"):
            SmartAssert.close(even_moment(f, scenario["alpha"], scenario["k"]), scenario["moment"],
                              scenario["tolerance"], "Direct summation")

    @allure.title("Spectral second moment equals the direct sum")
    @allure.tag("channel", "moments", "acceptance")
    @allure.severity(allure.severity_level.CRITICAL)
    @pytest.mark.acceptance
    def test_second_moment_cross_check(self):
        with step_aware_loggerStep("Step 1: Closed forms"):
            SmartAssert.close(second_moment_spectral(fourier_transform(named_family("majority", 3)), 0.5),
                              0.19140625, 1e-15, "3/4 rho^2 + 1/4 rho^6")
            SmartAssert.equal(second_moment_spectral(fourier_transform(named_family("constant", 2)), 0.3),
                              1.0, "Constant keeps f_hat(empty)^2")
        with step_aware_loggerStep("Step 2: Every function at n=3"):
            worst = 0.0
            for f in _all_functions(3):
                spectrum = fourier_transform(f)
                for alpha in (0.0, 0.1, 0.3, 0.5):
                    worst = max(worst, abs(even_moment(f, alpha, 1) - second_moment_spectral(spectrum, 1 - 2 * alpha)))
            SmartAssert.close(worst, 0.0, 1e-10, "M_2 direct vs spectral on 256 functions")
        with step_aware_loggerStep("Step 3: 1000 random functions at n=8 and n=12"):
            rng = make_rng(812)
            worst = 0.0
            for n in (8, 12):
                for _ in range(1000):
                    f = random_function(n, rng)
                    alpha = float(rng.uniform(0.0, 0.5))
                    spectral = second_moment_spectral(fourier_transform(f), 1 - 2 * alpha)
                    worst = max(worst, abs(even_moment(f, alpha, 1) - spectral))
            SmartAssert.at_most(worst, 0.0, 1e-10, "max |direct - spectral|")
        with pytest.raises(InvalidNoiseParameter):
            second_moment_spectral(fourier_transform(named_family("constant", 2)), 1.5)

    @allure.title("Moments decrease in k; MomentReport serialization")
    @allure.tag("channel", "moments")
    @allure.severity(allure.severity_level.NORMAL)
    def test_moment_report(self):
        rng = make_rng(5)
        with step_aware_loggerStep("Step 1: 0 <= M_16 <= ... <= M_2 <= 1 on 50 random functions"):
            largest = increase = below_zero = 0.0
            for _ in range(50):
                report = moment_report(random_function(4, rng), float(rng.uniform(0.0, 0.5)))
                values = [report.moment(k) for k in range(1, 9)]
                largest = max(largest, values[0])
                increase = max([increase] + [b - a for a, b in zip(values, values[1:])])
                below_zero = max(below_zero, -values[-1])
            SmartAssert.at_most(largest, 1.0, 1e-12, "M_2 <= 1")
            SmartAssert.at_most(increase, 0.0, 1e-15, "Moments nonincreasing in k")
            SmartAssert.at_most(below_zero, 0.0, 0.0, "M_16 >= 0")
        with step_aware_loggerStep("Step 2: k_max defaults from settings and rejects 0"):
            SmartAssert.equal(len(moment_report(named_family("majority", 3), 0.25).moments), 8, "Default k_max")
            with pytest.raises(MomentInputError):
                moment_report(named_family("majority", 3), 0.25, k_max=0)
        with step_aware_loggerStep("Step 3: JSON fields"):
            report = moment_report(named_family("dictator", 3, 1), 0.25, k_max=3)
            payload = report.to_dict()
            SmartAssert.equal(sorted(payload), ["alpha", "mi_bits", "moments", "n"], "n, alpha, moments, mi_bits")
            SmartAssert.equal(payload["moments"], [0.25, 0.0625, 0.015625], "rho^2k for the dictator")
            with pytest.raises(MomentInputError):
                report.moment(4)
        with pytest.raises(MomentInputError):
            even_moment(named_family("dictator", 3, 1), 0.25, 0)

    @allure.title("Moment-based MI bound: examples and the unbalanced guard")
    @allure.tag("channel", "moments", "smoke")
    @allure.severity(allure.severity_level.CRITICAL)
    @pytest.mark.smoke
    def test_mi_upper_from_moments(self):
        report = moment_report(named_family("dictator", 3, 1), 0.25)
        with step_aware_loggerStep("Step 1: t=1 and t=2 for the dictator"):
            SmartAssert.close(mi_upper_from_moments(report, 1, True), 0.25, 1e-15, "t=1 gives M_2")
            upper = mi_upper_from_moments(report, 2, True)
            SmartAssert.close(upper, BOUNDS["mi_upper_t2_dictator_quarter"], 1e-12, "c1/4 + (1 - c1)/16")
            SmartAssert.at_most(report.mi_bits, upper, 0.0, "Exact MI below the bound")
        with step_aware_loggerStep("Step 2: Pure noise"):
            silent = moment_report(named_family("majority", 3), 0.5)
            SmartAssert.equal(mi_upper_from_moments(silent, 3, True), 0.0, "All moments vanish")
        with pytest.raises(MomentInputError):
            mi_upper_from_moments(report, 2, False)
        with pytest.raises(MomentInputError):
            mi_upper_from_moments(moment_report(named_family("dictator", 3, 1), 0.25, k_max=2), 3, True)

    @allure.title("Moment bound dominates MI for all balanced functions at n <= 4")
    @allure.tag("channel", "moments", "exhaustive")
    @allure.severity(allure.severity_level.CRITICAL)
    @pytest.mark.slow
    def test_moment_bound_dominance(self):
        grid = linspace_grid(0.025, 0.5, 21)
        for n in (2, 3, 4):
            with step_aware_loggerStep(f"Step: balanced functions at n={n}"):
                patterns = list(iter_truth_table_ints(FunctionClass(n, Scope.BALANCED)))
                spectra = spectrum_array(tables_from_ints(patterns, n), n)
                worst = math.inf
                for alpha in grid:
                    deviations = noise_array(spectra, 1.0 - 2.0 * alpha, n)
                    mi = mutual_information_array(0.5, deviations)
                    moments = {k: even_moments_array(deviations, k) for k in (1, 2, 3)}
                    for t in (1, 2, 3):
                        upper = sum(w * moments[k] for k, w in enumerate(taylor_weights(t), start=1))
                        worst = min(worst, float(np.min(upper - mi)))
                SmartAssert.at_most(-worst, 0.0, 1e-12, f"min(bound - MI) >= -1e-12 at n={n}")


class TestHypercontractivity:
    """||T_rho g||_q <= ||g||_p below the critical correlation."""

    @allure.title("Constant, dictator and random tables")
    @allure.tag("channel", "hypercontractivity")
    @allure.severity(allure.severity_level.NORMAL)
    def test_hypercontractive_check(self):
        rho = 1.0 / math.sqrt(3.0)
        with step_aware_loggerStep("Step 1: g = 1"):
            check = hypercontractive_check(named_family("constant", 3), rho, 2.0, 4.0)
            SmartAssert.close(check.lhs, 1.0, 1e-15, "lhs = 1")
            SmartAssert.close(check.rhs, 1.0, 1e-15, "rhs = 1")
            SmartAssert.true(check.premise_ok, "Premise holds at the critical rho")
        with step_aware_loggerStep("Step 2: Dictator"):
            check = hypercontractive_check(named_family("dictator", 3, 1).as_real(), rho, 2.0, 4.0)
            SmartAssert.close(check.lhs, rho, 1e-15, "lhs = rho")
            SmartAssert.close(check.rhs, 1.0, 1e-15, "rhs = 1")
        with step_aware_loggerStep("Step 3: Random +-1 and real tables"):
            rng = make_rng(31)
            excess, premise_ok = -math.inf, True
            for _ in range(200):
                check = hypercontractive_check(random_function(3, rng), rho, 2.0, 4.0)
                premise_ok = premise_ok and check.premise_ok
                excess = max(excess, check.lhs - check.rhs)
                g = RealHypercubeFunction(3, rng.standard_normal(8))
                check = hypercontractive_check(g, rho, 2.0, 4.0)
                excess = max(excess, check.lhs - check.rhs)
            SmartAssert.true(bool(premise_ok), "Premise holds for every draw")
            SmartAssert.at_most(excess, 0.0, 1e-12, "||T_rho g||_4 <= ||g||_2 on 400 tables")
            SmartAssert.false(hypercontractive_check(g, 0.9, 2.0, 4.0).premise_ok, "rho = 0.9 is above the limit")
        for p, q in ((0.5, 2.0), (2.0, 2.0), (2.0, math.inf)):
            with pytest.raises(InvalidNoiseParameter):
                hypercontractive_check(named_family("constant", 2), 0.5, p, q)


if __name__ == "__main__":
    pytest.main([__file__, "-v", "-s"])

# ==================================================================================================
# Copyright 2026 The syncqkd Authors
# --------------------------------------------------------------------------------------------------
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this work except in compliance with the License.
# You may obtain a copy of the License in the LICENSE file, or at:
#
#  http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
# ==================================================================================================


import math

import numpy as np
import pytest

from syncqkd.base.hilbert import PvmFamily, validate_pvm
from syncqkd.base.util import InputDomainError
from syncqkd.game.bell import QUANTUM_BOUND, classify, j3_effective
from syncqkd.game.correlations import ideal_correlation, tracial_correlation
from syncqkd.rigidity.two_projections import (
  ANGLE_WINDOW,
  IDEAL_ANGLE,
  TwoProjectionForm,
  assemble_observables,
  assemble_pvms,
  block_step_bounds,
  observable_deviation,
  random_form,
  reference_family,
  reflection,
  sweep,
  trace_deviation,
  verify_main_bound,
  verify_mixture_bound,
)


PERTURBED_LAMBDA = (1 - math.cos(0.1)) / 4


def same_family(a, b, tol=1e-12):
  return all(np.max(np.abs(a[x][y] - b[x][y])) <= tol for x in range(3) for y in range(2))


def test_form_validation():
  assert TwoProjectionForm([IDEAL_ANGLE], l01=2).dim == 4
  assert TwoProjectionForm(l00=1).dim == 1
  with pytest.raises(InputDomainError):
    TwoProjectionForm()
  with pytest.raises(InputDomainError):
    TwoProjectionForm([IDEAL_ANGLE + ANGLE_WINDOW + 0.01])
  with pytest.raises(InputDomainError):
    TwoProjectionForm([IDEAL_ANGLE], l10=-1)
  with pytest.raises(InputDomainError):
    TwoProjectionForm([IDEAL_ANGLE], m2_angles=[0.0, 1.0])
  with pytest.raises(InputDomainError):
    TwoProjectionForm([IDEAL_ANGLE], m2_signs=[1, 1, 0, -1])


def test_window_edges_are_accepted():
  form = TwoProjectionForm([math.pi / 2, 5 * math.pi / 6])
  assert form.blocks == 2


def test_block_matrices():
  t = IDEAL_ANGLE + 0.05
  m0, m1, m2 = assemble_observables(TwoProjectionForm([t]))
  assert np.allclose(m0, [[1, 0], [0, -1]], atol=1e-15)
  assert np.allclose(m1, [[math.cos(2 * t), math.sin(2 * t)], [math.sin(2 * t), -math.cos(2 * t)]], atol=1e-15)
  assert np.allclose(m2, reflection(IDEAL_ANGLE), atol=1e-12)


def test_scalar_summands():
  m0, m1, m2 = assemble_observables(TwoProjectionForm(l00=1, l01=1, l10=1, l11=1))
  assert list(np.diag(m0).real) == [-1, -1, 1, 1]
  assert list(np.diag(m1).real) == [-1, 1, -1, 1]
  assert list(np.diag(m2).real) == [1, 1, -1, -1]


def test_ideal_block():
  form = TwoProjectionForm([IDEAL_ANGLE])
  family = assemble_pvms(form)
  assert validate_pvm(family).passed

  p = tracial_correlation(family)
  assert p.allclose(ideal_correlation(), 1e-12)
  assert same_family(family, reference_family(form))

  report = verify_main_bound(form)
  assert abs(report.lam) <= 1e-12
  assert report.passed
  assert abs(report.deviation) <= 1e-12
  assert abs(report.statistical_difference) <= 1e-12


def test_perturbed_block():
  form = TwoProjectionForm([IDEAL_ANGLE + 0.05])
  report = verify_main_bound(form)
  assert abs(report.j3 + 0.123751) <= 1e-6
  assert abs(report.lam - PERTURBED_LAMBDA) <= 1e-12
  assert abs(report.lam - 0.00124896) <= 1e-8
  assert abs(report.m1_deviation - 2 * (1 - math.cos(0.1))) <= 1e-12
  assert abs(report.m1_deviation - 8 * report.lam) <= 1e-12
  assert abs(report.deviation - 8 * report.lam / 6) <= 1e-12
  assert report.passed


def test_perturbed_reference_differs_on_m1_only():
  form = TwoProjectionForm([IDEAL_ANGLE + 0.05])
  family, reference = assemble_pvms(form), reference_family(form)
  assert np.allclose(family[0][0], reference[0][0], atol=1e-15)
  assert np.allclose(family[2][0], reference[2][0], atol=1e-12)
  assert not np.allclose(family[1][0], reference[1][0], atol=1e-3)


def test_junk_summand():
  report = verify_main_bound(TwoProjectionForm([IDEAL_ANGLE], l01=1))
  assert report.d == 3
  assert abs(report.j3 + 1.0 / 12) <= 1e-12
  assert abs(report.lam - 1.0 / 24) <= 1e-12
  assert abs(report.junk_ratio - 1.0 / 3) <= 1e-15
  assert abs(report.limits["junk_ratio"] - 4.0 / 9) <= 1e-12
  assert report.passed


def test_reference_is_ideal_on_blocks():
  rng = np.random.default_rng(4)
  for _ in range(20):
    form = random_form(rng, max_blocks=5)
    ideal_part = TwoProjectionForm([IDEAL_ANGLE] * form.blocks)
    assert abs(j3_effective(tracial_correlation(reference_family(ideal_part))) - QUANTUM_BOUND) <= 1e-12


def test_trace_deviation():
  form = TwoProjectionForm([IDEAL_ANGLE])
  family = assemble_pvms(form)
  assert trace_deviation(family, family) == 0.0

  flipped = PvmFamily([(family[0][1], family[0][0]), family[1], family[2]])
  assert abs(trace_deviation(family, flipped) - 2.0 / 3) <= 1e-12

  with pytest.raises(InputDomainError):
    trace_deviation(family, assemble_pvms(TwoProjectionForm([IDEAL_ANGLE], l00=1)))


def test_trace_deviation_matches_observables():
  rng = np.random.default_rng(5)
  for _ in range(50):
    form = random_form(rng, max_blocks=6)
    a, b = assemble_pvms(form), reference_family(form)
    assert abs(trace_deviation(a, b) - observable_deviation(a, b)) <= 1e-12


def test_step_bounds_at_ideal_angle():
  printed, cauchy_schwarz = block_step_bounds(IDEAL_ANGLE)
  assert abs(printed - 2) <= 1e-12
  assert abs(cauchy_schwarz) <= 1e-12

  report = verify_main_bound(TwoProjectionForm([IDEAL_ANGLE]))
  assert report.printed_step_violations == 1
  assert report.cauchy_schwarz_step_violations == 0


def test_m2_override():
  form = TwoProjectionForm([IDEAL_ANGLE], m2_angles=[0.0], m2_signs=[1, 1, 1, 1])
  report = verify_main_bound(form)
  assert report.lam > 0.1
  assert abs(report.identity_residual) <= 1e-12


def test_random_forms_respect_quantum_bound():
  rng = np.random.default_rng(6)
  for _ in range(100):
    form = random_form(rng, max_blocks=8)
    report = classify(tracial_correlation(assemble_pvms(form)))
    assert min(report.J) >= QUANTUM_BOUND - 1e-9


def test_deviation_vanishes_near_ideal():
  deviations = []
  for offset in (0.1, 0.01, 0.001):
    deviations.append(verify_main_bound(TwoProjectionForm([IDEAL_ANGLE + offset] * 3)).deviation)
  assert deviations[0] > deviations[1] > deviations[2] > 0
  assert deviations[2] <= 1e-6


def test_sweep():
  summary = sweep(1000, 3, threads=4)
  assert summary.forms == 1000
  assert summary.passed
  assert all(margin >= -1e-9 for margin in summary.worst_margins.values())
  assert summary.max_identity_residual <= 1e-9
  assert summary.min_m1_margin >= -1e-9
  assert summary.lam["min"] >= -1e-12
  assert summary.to_dict()["all_passed"]


def test_sweep_is_deterministic():
  a, b = sweep(20, 9, max_blocks=6, threads=1), sweep(20, 9, max_blocks=6, threads=3)
  assert a.to_dict() == b.to_dict()
  with pytest.raises(InputDomainError):
    sweep(0, 9)


# convex mixtures

def test_mixture_of_one_form():
  form = TwoProjectionForm([IDEAL_ANGLE + 0.05], l01=1)
  single = verify_main_bound(form)
  mixture = verify_mixture_bound([form], [1.0])
  assert mixture.passed
  assert mixture.components == 1
  assert abs(mixture.lam - single.lam) <= 1e-12
  assert abs(mixture.statistical_difference - single.statistical_difference) <= 1e-12
  assert abs(mixture.weighted_difference - single.statistical_difference) <= 1e-12
  assert abs(mixture.deviation - single.deviation) <= 1e-12


def test_mixture_lambda_is_weighted():
  forms = [TwoProjectionForm([IDEAL_ANGLE]), TwoProjectionForm([IDEAL_ANGLE], l01=1)]
  mixture = verify_mixture_bound(forms, [0.5, 0.5])
  assert abs(mixture.lam - 1.0 / 48) <= 1e-12
  assert abs(mixture.lambda_residual) <= 1e-12
  assert abs(mixture.junk_ratio - 1.0 / 6) <= 1e-12
  assert mixture.passed
  assert mixture.triangle_margin >= -1e-12
  assert list(mixture.to_dict())[:2] == ["components", "weights"]


def test_random_mixtures_respect_the_bound():
  rng = np.random.default_rng(17)
  forms = [random_form(rng, 6) for _ in range(12)]
  reports = [verify_main_bound(form) for form in forms]
  for _ in range(100):
    members = rng.choice(len(forms), size=int(rng.integers(1, 6)), replace=False)
    weights = rng.dirichlet(np.ones(len(members)))
    mixture = verify_mixture_bound(
      [forms[j] for j in members], weights, reports=[reports[j] for j in members])
    assert mixture.passed, mixture.to_dict()
    assert abs(mixture.lambda_residual) <= 1e-12
    assert mixture.statistical_difference <= mixture.weighted_difference + 1e-12
    limit = math.sqrt(8 * max(mixture.lam, 0)) + 64 * max(mixture.lam, 0) / 3
    assert mixture.weighted_difference <= limit + 1e-9

  recomputed = verify_mixture_bound(forms[:3], [0.2, 0.3, 0.5])
  reused = verify_mixture_bound(forms[:3], [0.2, 0.3, 0.5], reports=reports[:3])
  assert recomputed.to_dict() == reused.to_dict()


@pytest.mark.parametrize("weights", [[], [1.0], [0.5, 0.6], [1.5, -0.5], [float("nan"), 1.0]])
def test_mixture_weights_rejected(weights):
  forms = [TwoProjectionForm([IDEAL_ANGLE]), TwoProjectionForm(l00=1)]
  with pytest.raises(InputDomainError):
    verify_mixture_bound(forms, weights)


def test_sweep_with_mixtures():
  plain = sweep(30, 5, max_blocks=8, threads=2)
  mixed = sweep(30, 5, max_blocks=8, threads=2, mixtures=40)
  assert mixed.mixtures == 40
  assert mixed.mixture_violations == 0
  assert mixed.passed
  assert mixed.worst_margins == plain.worst_margins
  assert list(mixed.worst_mixture_margins) == [
    "junk_ratio", "deviation", "weighted_difference", "statistical_difference"]
  assert plain.to_dict()["worst_mixture_margins"] == {}
  with pytest.raises(InputDomainError):
    sweep(5, 5, mixtures=-1)
  with pytest.raises(InputDomainError):
    sweep(5, -1)

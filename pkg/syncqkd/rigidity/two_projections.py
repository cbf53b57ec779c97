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


'''
A numerical laboratory for the rigidity bound of the three-measurement game.

By two-projections theory, M_0 and M_1 split the space into one-dimensional
summands L_00, L_01, L_10, L_11 (where both act as scalars) plus 2x2 blocks on
which

  M_0 = [[1, 0], [0, -1]]      M_1 = [[cos 2t, sin 2t], [sin 2t, -cos 2t]]

for a block angle t. Writing R(a) for the reflection [[cos a, sin a], [sin a, -cos a]],
M_0 = R(0) and M_1 = R(2t). The third measurement M_2 is R(-2T) on every block
(T = 2pi/3, the ideal angle) unless overridden, with the sign pattern below on
the L summands.

For every such family (1/d) tr((M_0 + M_1 + M_2)^2) = 1 + 8 J_3, and with
lambda = J_3 + 1/8 the bounds

  l/d <= 32 lambda / 3,   deviation <= 52 lambda / 3,   D <= sqrt(8 lambda) + 64 lambda / 3

hold against the reference family that snaps every block to T.
'''

from collections import OrderedDict
import math

import numpy as np

from syncqkd.base.hilbert import direct_sum, hs_trace, pvm_from_observables
from syncqkd.base.process import run_parallel
from syncqkd.base.util import INPUTS, OUTPUTS, PREDICATE_TOL, InputDomainError, check_seed
from syncqkd.game.bell import j3_effective
from syncqkd.game.correlations import Correlation, tracial_correlation
from syncqkd.stats.util import summarize

from twitter.common import log


IDEAL_ANGLE = 2 * math.pi / 3
ANGLE_WINDOW = math.pi / 6
WINDOW_TOL = 1e-12

# values of M_0, M_1, M_2 on L_00, L_01, L_10, L_11
M0_SIGNS = (-1, -1, 1, 1)
M1_SIGNS = (-1, 1, -1, 1)
M2_SIGNS = (1, 1, -1, -1)

M2_BLOCK_ANGLE = -2 * IDEAL_ANGLE


def reflection(angle):
  return np.array([
    [math.cos(angle), math.sin(angle)],
    [math.sin(angle), -math.cos(angle)],
  ])


class TwoProjectionForm(object):
  """
  l00 .. l11: dimensions of the scalar summands
  angles: block angles t_j, each within pi/6 of 2pi/3
  m2_angles: per-block reflection angle of M_2 (default -4pi/3)
  m2_signs: M_2 on L_00, L_01, L_10, L_11 (default +1, +1, -1, -1)
  """

  def __init__(self, angles=(), l00=0, l01=0, l10=0, l11=0, m2_angles=None, m2_signs=None):
    self.l = tuple(int(v) for v in (l00, l01, l10, l11))
    self.angles = tuple(float(a) for a in angles)
    self.m2_angles = tuple(float(a) for a in (
      m2_angles if m2_angles is not None else [M2_BLOCK_ANGLE] * len(self.angles)))
    self.m2_signs = tuple(int(s) for s in (m2_signs if m2_signs is not None else M2_SIGNS))
    self._validate((l00, l01, l10, l11))

  def _validate(self, raw_dims):
    if any(v != int(v) or v < 0 for v in raw_dims):
      raise InputDomainError("summand dimensions must be nonnegative integers, got %s" % (raw_dims,))
    if self.dim < 1:
      raise InputDomainError("the form must have dimension >= 1")
    for j, angle in enumerate(self.angles):
      if not math.isfinite(angle) or abs(angle - IDEAL_ANGLE) > ANGLE_WINDOW + WINDOW_TOL:
        raise InputDomainError(
          "block angle %d = %r outside the window [pi/2, 5pi/6] (within pi/6 of 2pi/3)" % (j, angle))
    if len(self.m2_angles) != len(self.angles):
      raise InputDomainError("need one M_2 angle per block (%d), got %d" % (
        len(self.angles), len(self.m2_angles)))
    if not all(math.isfinite(a) for a in self.m2_angles):
      raise InputDomainError("M_2 angles must be finite")
    if len(self.m2_signs) != 4 or any(s not in (-1, 1) for s in self.m2_signs):
      raise InputDomainError("M_2 signs must be four values in {-1, +1}, got %s" % (self.m2_signs,))

  @property
  def blocks(self):
    return len(self.angles)

  @property
  def junk(self):
    """ total dimension of the scalar summands """
    return sum(self.l)

  @property
  def dim(self):
    return self.junk + 2 * self.blocks

  def to_dict(self):
    return OrderedDict([
      ("l00", self.l[0]),
      ("l01", self.l[1]),
      ("l10", self.l[2]),
      ("l11", self.l[3]),
      ("angles", list(self.angles)),
      ("m2_angles", list(self.m2_angles)),
      ("m2_signs", list(self.m2_signs)),
    ])

  def __repr__(self):
    return "TwoProjectionForm(l=%s, blocks=%d)" % (self.l, self.blocks)


def _observable(l, signs, block_angles):
  scalars = np.concatenate([np.full(n, float(s)) for n, s in zip(l, signs)])
  parts = [np.diag(scalars)] if len(scalars) else []
  parts.extend(reflection(a) for a in block_angles)
  return direct_sum(*parts)


def _observables(form, block_angles_1, block_angles_2, m2_signs):
  zeros = [0.0] * form.blocks
  return (
    _observable(form.l, M0_SIGNS, zeros),
    _observable(form.l, M1_SIGNS, block_angles_1),
    _observable(form.l, m2_signs, block_angles_2),
  )


def assemble_observables(form):
  return _observables(form, [2 * t for t in form.angles], form.m2_angles, form.m2_signs)


def reference_observables(form):
  return _observables(form, [2 * IDEAL_ANGLE] * form.blocks, [M2_BLOCK_ANGLE] * form.blocks, M2_SIGNS)


def assemble_pvms(form):
  return pvm_from_observables(*assemble_observables(form))


def reference_family(form):
  return pvm_from_observables(*reference_observables(form))


def _check_dims(a, b):
  if a.dim != b.dim:
    raise InputDomainError("families act on different dimensions (%d vs %d)" % (a.dim, b.dim))


def trace_deviation(a, b):
  """ (1/3) sum_{x,y} (1/d) tr((E^x_y - F^x_y)^2) """
  _check_dims(a, b)
  total = 0.0
  for x in INPUTS:
    for y in OUTPUTS:
      diff = a[x][y] - b[x][y]
      total += hs_trace(diff, diff).real
  return total / (len(INPUTS) * a.dim)


def observable_deviation(a, b):
  """ (1/6) sum_x (1/d) tr((M_x - N_x)^2) """
  _check_dims(a, b)
  total = 0.0
  for x in INPUTS:
    diff = (a[x][0] - a[x][1]) - (b[x][0] - b[x][1])
    total += hs_trace(diff, diff).real
  return total / (6 * a.dim)


def block_step_bounds(angle):
  """ the per-block lower bounds on tr(Delta^2) as printed and by Cauchy-Schwarz """
  base = 6 + 4 * math.cos(2 * angle)
  return base - 4 * abs(math.cos(angle)), base - 8 * abs(math.cos(angle))


def bound_limits(lam):
  """ the right-hand sides of the three bounds at lambda (clamped at 0) """
  lam = max(lam, 0.0)
  return OrderedDict([
    ("junk_ratio", 32 * lam / 3),
    ("deviation", 52 * lam / 3),
    ("statistical_difference", math.sqrt(8 * lam) + 64 * lam / 3),
  ])


def statistical_difference(correlation):
  """ (1/3) sum_{x,y} |p(y, y|x, x) - 1/2| """
  return sum(
    abs(correlation.prob(y, y, x, x) - 0.5) for x in INPUTS for y in OUTPUTS) / len(INPUTS)


class RigidityReport(object):
  BOUNDS = ("junk_ratio", "deviation", "statistical_difference")

  def __init__(self, form, j3, deviation, statistical_difference, identity_residual,
               m1_deviation, printed_step_violations, cauchy_schwarz_step_violations,
               tol=PREDICATE_TOL, correlation=None):
    self.form = form
    self.correlation = correlation
    self.d = form.dim
    self.j3 = j3
    self.lam = j3 + 0.125
    self.junk_ratio = form.junk / float(form.dim)
    self.deviation = deviation
    self.statistical_difference = statistical_difference
    self.identity_residual = identity_residual
    self.m1_deviation = m1_deviation
    self.printed_step_violations = printed_step_violations
    self.cauchy_schwarz_step_violations = cauchy_schwarz_step_violations
    self.tol = tol

    self.limits = bound_limits(self.lam)
    self.margins = OrderedDict((name, self.limits[name] - getattr(self, name)) for name in self.BOUNDS)
    self.m1_margin = 8 * max(self.lam, 0.0) - m1_deviation

  @property
  def failures(self):
    return [name for name, margin in self.margins.items() if margin < -self.tol]

  @property
  def passed(self):
    return not self.failures

  def to_dict(self):
    return OrderedDict([
      ("form", self.form.to_dict()),
      ("d", self.d),
      ("j3", self.j3),
      ("lambda", self.lam),
      ("junk_ratio", self.junk_ratio),
      ("deviation", self.deviation),
      ("statistical_difference", self.statistical_difference),
      ("limits", self.limits),
      ("margins", self.margins),
      ("passed", OrderedDict((name, bool(self.margins[name] >= -self.tol)) for name in self.BOUNDS)),
      ("all_passed", self.passed),
      ("identity_residual", self.identity_residual),
      ("m1_deviation", self.m1_deviation),
      ("m1_margin", self.m1_margin),
      ("printed_step_violations", self.printed_step_violations),
      ("cauchy_schwarz_step_violations", self.cauchy_schwarz_step_violations),
    ])


def verify_main_bound(form, tol=PREDICATE_TOL):
  observables = assemble_observables(form)
  reference = reference_observables(form)
  family = pvm_from_observables(*observables)
  correlation = tracial_correlation(family)
  j3 = j3_effective(correlation)

  delta = observables[0] + observables[1] + observables[2]
  residual = hs_trace(delta, delta).real / form.dim - (1 + 8 * j3)

  m1_diff = observables[1] - reference[1]
  m1_deviation = hs_trace(m1_diff, m1_diff).real / form.dim

  printed = cauchy_schwarz = 0
  for angle, m2_angle in zip(form.angles, form.m2_angles):
    block = np.diag([1.0, -1.0]) + reflection(2 * angle) + reflection(m2_angle)
    actual = float(np.sum(block * block))
    printed_bound, cs_bound = block_step_bounds(angle)
    printed += actual < printed_bound - tol
    cauchy_schwarz += actual < cs_bound - tol

  report = RigidityReport(
    form, j3,
    trace_deviation(family, pvm_from_observables(*reference)),
    statistical_difference(correlation), residual, m1_deviation, printed, cauchy_schwarz, tol,
    correlation)
  if not report.passed:
    log.warn("rigidity bound failed for %r: %s" % (form, ", ".join(report.failures)))
  return report


class MixtureReport(object):
  """
  The bounds for p = sum_j c_j p_j, each p_j the tracial correlation of a form.

  J_3 is affine, so lambda = sum_j c_j lambda_j. Junk ratio and deviation are
  weighted averages of linear bounds; for D the triangle inequality gives
  D(p) <= sum_j c_j D(p_j) and concavity of the square root carries
  sum_j c_j sqrt(8 lambda_j) <= sqrt(8 lambda).
  """

  BOUNDS = ("junk_ratio", "deviation", "weighted_difference", "statistical_difference")

  def __init__(self, reports, weights, tol=PREDICATE_TOL):
    self.weights = tuple(float(w) for w in weights)
    self.components = len(reports)
    self.tol = tol

    mixed = Correlation(sum(w * r.correlation.table for w, r in zip(self.weights, reports)))
    self.j3 = j3_effective(mixed)
    self.lam = self.j3 + 0.125
    self.lambda_residual = self.lam - sum(w * r.lam for w, r in zip(self.weights, reports))
    self.junk_ratio = sum(w * r.junk_ratio for w, r in zip(self.weights, reports))
    self.deviation = sum(w * r.deviation for w, r in zip(self.weights, reports))
    self.statistical_difference = statistical_difference(mixed)
    self.weighted_difference = sum(w * r.statistical_difference for w, r in zip(self.weights, reports))

    limits = bound_limits(self.lam)
    limits["weighted_difference"] = limits["statistical_difference"]
    self.limits = OrderedDict((name, limits[name]) for name in self.BOUNDS)
    self.margins = OrderedDict((name, self.limits[name] - getattr(self, name)) for name in self.BOUNDS)
    self.triangle_margin = self.weighted_difference - self.statistical_difference

  @property
  def failures(self):
    failures = [name for name, margin in self.margins.items() if margin < -self.tol]
    if self.triangle_margin < -self.tol:
      failures.append("triangle")
    return failures

  @property
  def passed(self):
    return not self.failures

  def to_dict(self):
    return OrderedDict([
      ("components", self.components),
      ("weights", list(self.weights)),
      ("j3", self.j3),
      ("lambda", self.lam),
      ("lambda_residual", self.lambda_residual),
      ("junk_ratio", self.junk_ratio),
      ("deviation", self.deviation),
      ("weighted_difference", self.weighted_difference),
      ("statistical_difference", self.statistical_difference),
      ("limits", self.limits),
      ("margins", self.margins),
      ("triangle_margin", self.triangle_margin),
      ("all_passed", self.passed),
    ])


def _check_weights(weights, count):
  weights = [float(w) for w in weights]
  if count < 1 or len(weights) != count:
    raise InputDomainError("need one weight per form (%d forms, %d weights)" % (count, len(weights)))
  if any(not math.isfinite(w) or w < 0 for w in weights) or abs(sum(weights) - 1) > PREDICATE_TOL:
    raise InputDomainError("weights must be nonnegative and sum to 1, got %s" % (weights,))
  return weights


def verify_mixture_bound(forms, weights, tol=PREDICATE_TOL, reports=None):
  """
  Checks the bounds on the convex mixture sum_j weights[j] * p_j of the forms'
  tracial correlations; reports, when given, are the forms' verify_main_bound
  results and are reused.
  """
  forms = list(forms)
  weights = _check_weights(weights, len(forms))
  if reports is None:
    reports = [verify_main_bound(form, tol) for form in forms]

  report = MixtureReport(reports, weights, tol)
  if not report.passed:
    log.warn("mixture bound failed for %d forms: %s" % (len(forms), ", ".join(report.failures)))
  return report


def random_form(rng, max_blocks=50):
  """ k in [1, max_blocks] blocks with angles uniform in the window, each L dim in [0, k] """
  k = int(rng.integers(1, max_blocks + 1))
  angles = rng.uniform(IDEAL_ANGLE - ANGLE_WINDOW, IDEAL_ANGLE + ANGLE_WINDOW, size=k)
  dims = rng.integers(0, k + 1, size=4)
  return TwoProjectionForm(angles, *[int(v) for v in dims])


def random_mixture(rng, count, max_components=5):
  """ indices of 1..max_components distinct forms out of count, with Dirichlet weights """
  size = int(rng.integers(1, min(max_components, count) + 1))
  members = rng.choice(count, size=size, replace=False)
  return [int(j) for j in members], rng.dirichlet(np.ones(size))


class SweepSummary(object):
  def __init__(self, seed, reports, mixture_reports=()):
    self.seed = seed
    self.forms = len(reports)
    self.violations = sum(1 for r in reports if not r.passed)
    self.worst_margins = OrderedDict(
      (name, min(r.margins[name] for r in reports)) for name in RigidityReport.BOUNDS)
    self.max_identity_residual = max(abs(r.identity_residual) for r in reports)
    self.min_m1_margin = min(r.m1_margin for r in reports)
    self.printed_step_violations = sum(r.printed_step_violations for r in reports)
    self.cauchy_schwarz_step_violations = sum(r.cauchy_schwarz_step_violations for r in reports)
    self.lam = summarize([r.lam for r in reports])

    self.mixtures = len(mixture_reports)
    self.mixture_violations = sum(1 for r in mixture_reports if not r.passed)
    self.worst_mixture_margins = OrderedDict(
      (name, min(r.margins[name] for r in mixture_reports)) for name in MixtureReport.BOUNDS
    ) if mixture_reports else OrderedDict()

  @property
  def passed(self):
    return self.violations == 0 and self.mixture_violations == 0

  def to_dict(self):
    return OrderedDict([
      ("seed", self.seed),
      ("forms", self.forms),
      ("violations", self.violations),
      ("all_passed", self.passed),
      ("worst_margins", self.worst_margins),
      ("max_identity_residual", self.max_identity_residual),
      ("min_m1_margin", self.min_m1_margin),
      ("printed_step_violations", self.printed_step_violations),
      ("cauchy_schwarz_step_violations", self.cauchy_schwarz_step_violations),
      ("lambda", self.lam),
      ("mixtures", self.mixtures),
      ("mixture_violations", self.mixture_violations),
      ("worst_mixture_margins", self.worst_mixture_margins),
    ])


def sweep(count, seed, max_blocks=50, threads=None, mixtures=0):
  """
  Verifies count random forms, then mixtures random convex mixtures of them.
  Mixtures are drawn after the forms, so the forms do not depend on mixtures.
  """
  if count < 1:
    raise InputDomainError("sweep needs at least one form, got %d" % count)
  if mixtures < 0:
    raise InputDomainError("mixture count must be >= 0, got %d" % mixtures)

  rng = np.random.Generator(np.random.Philox(check_seed(seed)))
  forms = [random_form(rng, max_blocks) for _ in range(count)]
  log.info("verifying %d random forms (seed=%d)" % (count, seed))
  reports = run_parallel(verify_main_bound, forms, threads)

  mixture_reports = []
  for _ in range(mixtures):
    members, weights = random_mixture(rng, count)
    mixture_reports.append(verify_mixture_bound(
      [forms[j] for j in members], weights, reports=[reports[j] for j in members]))

  summary = SweepSummary(seed, reports, mixture_reports)
  log.info("sweep done: %d violations, %d mixture violations" % (
    summary.violations, summary.mixture_violations))
  return summary

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
The basis-guessing adversary. Eve learns each party's basis up to an
uncertainty epsilon (right with probability 1 - epsilon, otherwise one of the
two wrong bases uniformly), answers with her strategy table q(y_A, y_B|z_A, z_B)
on her guesses and the parties observe the mixture.

On the statistics (1 - J_3, S) the mixing is linear, with matrix

  [[1 - e + 3e^2/4,  3e/2 - 9e^2/8],
   [4e/3 - e^2,      1 - 2e + 3e^2/2]]

which is singular only at e = 2/3 (uniform ignorance).
'''

from collections import OrderedDict
import math

import numpy as np
from scipy.optimize import bisect

from syncqkd.base.util import INPUTS, InputDomainError, NoThreshold, check_input
from syncqkd.game.bell import j3_effective
from syncqkd.game.correlations import Correlation, asynchronicity, ideal_correlation

from twitter.common import log


EPSILON_LIMIT = 2.0 / 3
EPSILON_TOL = 1e-12
SINGULAR_TOL = 1e-12


def check_epsilon(epsilon):
  if not 0 <= epsilon <= EPSILON_LIMIT + EPSILON_TOL:
    raise InputDomainError("epsilon must lie in [0, 2/3], got %r" % epsilon)
  return min(float(epsilon), EPSILON_LIMIT)


def check_lambda_mu(lam, mu):
  if not 0 <= lam <= 0.125:
    raise InputDomainError("lambda must lie in [0, 1/8], got %r" % lam)
  if not (mu >= 0 and math.isfinite(mu)):
    raise InputDomainError("mu must be a nonnegative real, got %r" % mu)


class EveModel(object):
  """ uncertainty epsilon plus a strategy table; defaults to the ideal statistics """

  def __init__(self, epsilon, strategy=None):
    self.epsilon = check_epsilon(epsilon)
    self.strategy = strategy if strategy is not None else ideal_correlation()
    if not isinstance(self.strategy, Correlation):
      self.strategy = Correlation(self.strategy)

  def __repr__(self):
    return "EveModel(epsilon=%g)" % self.epsilon


class EveStats(object):
  __slots__ = ("j3", "s")

  def __init__(self, j3, s):
    self.j3 = float(j3)
    self.s = float(s)

  def vector(self):
    """ (1 - J_3, S), the coordinates the mixing acts on """
    return np.array([1 - self.j3, self.s])

  def to_dict(self):
    return OrderedDict([("j3", self.j3), ("s", self.s)])

  def __repr__(self):
    return "EveStats(j3=%.12g, s=%.12g)" % (self.j3, self.s)


class Thresholds(object):
  def __init__(self, lam, mu, delta, eps_max, eps_delta_max):
    self.lam = lam
    self.mu = mu
    self.delta = delta
    self.eps_max = eps_max
    self.eps_delta_max = eps_delta_max

  def to_dict(self):
    return OrderedDict([
      ("lambda", self.lam),
      ("mu", self.mu),
      ("delta", self.delta),
      ("epsilon_max", self.eps_max),
      ("epsilon_delta_max", self.eps_delta_max),
    ])


def guess_distribution(epsilon, x):
  epsilon = check_epsilon(epsilon)
  check_input(x)
  return tuple(1 - epsilon if z == x else epsilon / 2 for z in INPUTS)


def guess_matrix(epsilon):
  """ w[x, z]: probability of guessing z when the basis is x """
  return np.array([guess_distribution(epsilon, x) for x in INPUTS])


def observed_correlation(model):
  """ p(y_A, y_B|x_A, x_B) = sum_z q(y_A, y_B|z_A, z_B) w(z_A|x_A) w(z_B|x_B) """
  w = guess_matrix(model.epsilon)
  return Correlation(np.einsum("abzv,xz,yv->abxy", model.strategy.table, w, w))


def eve_stats(strategy):
  """ (J_3, S) of any strategy table; no nonsignalling needed """
  return EveStats(j3_effective(strategy), asynchronicity(strategy)[0])


def mixing_matrix(epsilon):
  e = check_epsilon(epsilon)
  return np.array([
    [1 - e + 0.75 * e * e, 1.5 * e - 1.125 * e * e],
    [4.0 / 3 * e - e * e, 1 - 2 * e + 1.5 * e * e],
  ])


def forward_stats(stats, epsilon):
  """ expected (J_3, S) observed when Eve's strategy has stats (J~_3, S~) """
  one_minus_j3, s = mixing_matrix(epsilon).dot(stats.vector())
  return 1 - one_minus_j3, s


def invert_stats(lam, mu, epsilon):
  """
  The strategy statistics Eve needs to show J_3 = -1/8 + lam and S = mu:

    J~_3 = [t (3 - 6mu + 8lam) + 16lam - 2] / [4 (3e - 2)^2]
    S~   = [t (6mu - 8lam + 9) + 24mu]     / [6 (3e - 2)^2]

  with t = 3e^2 - 4e.
  """
  e = check_epsilon(epsilon)
  gap = (3 * e - 2) ** 2
  if gap < SINGULAR_TOL:
    raise NoThreshold("mixing is singular at epsilon = 2/3")

  t = 3 * e * e - 4 * e
  j3 = (t * (3 - 6 * mu + 8 * lam) + 16 * lam - 2) / (4 * gap)
  s = (t * (6 * mu - 8 * lam + 9) + 24 * mu) / (6 * gap)
  return EveStats(j3, s)


def epsilon_max(lam, mu):
  """
  The largest uncertainty at which a strategy with S~ >= 0 still fits the
  observed (lam, mu):

    2/3 - (2/3) sqrt(64lam^2 + 6(8lam - 9)mu - 72mu^2 - 144lam + 81) / (6mu - 8lam + 9)
  """
  check_lambda_mu(lam, mu)
  radicand = 64 * lam ** 2 + 6 * (8 * lam - 9) * mu - 72 * mu ** 2 - 144 * lam + 81
  if radicand < 0:
    raise NoThreshold("negative radicand %.6g for lambda=%g, mu=%g" % (radicand, lam, mu))
  return 2.0 / 3 - (2.0 / 3) * math.sqrt(radicand) / (6 * mu - 8 * lam + 9)


def epsilon_delta_max(delta, lam, mu):
  """
  As epsilon_max, but Eve must keep S~ >= delta:

    2/3 - (2/3) sqrt(1 - 18(mu - delta) / (6mu - 8lam + 9 - 18delta))

  Defined for 0 <= delta <= mu; past mu no strategy shows the observed
  asynchronicity and NoThreshold is raised.
  """
  check_lambda_mu(lam, mu)
  if not (delta >= 0 and math.isfinite(delta)):
    raise InputDomainError("delta must be a nonnegative real, got %r" % delta)
  if delta > mu + EPSILON_TOL:
    raise NoThreshold("delta=%g exceeds mu=%g: no feasible strategy" % (delta, mu))

  scale = 6 * mu - 8 * lam + 9 - 18 * delta
  if scale <= 0:
    raise NoThreshold("delta=%g too large for lambda=%g, mu=%g" % (delta, lam, mu))
  radicand = 1 - 18 * (mu - delta) / scale
  if radicand < 0:
    raise NoThreshold("negative radicand %.6g for delta=%g, lambda=%g, mu=%g" % (radicand, delta, lam, mu))
  return max(2.0 / 3 - (2.0 / 3) * math.sqrt(radicand), 0.0)


def epsilon_threshold_bisect(delta, lam, mu, xtol=1e-15):
  """ root of S~(epsilon) = delta on [0, 2/3), found by bisection """
  check_lambda_mu(lam, mu)

  def excess(epsilon):
    return invert_stats(lam, mu, epsilon).s - delta

  low, high = 0.0, EPSILON_LIMIT - 1e-6
  at_low, at_high = excess(low), excess(high)
  if at_low == 0:
    return low
  if at_low < 0 or at_high > 0:
    raise NoThreshold("S~ - delta does not change sign on [0, 2/3) for delta=%g, lambda=%g, mu=%g" % (
      delta, lam, mu))

  return bisect(excess, low, high, xtol=xtol, maxiter=200)


def thresholds(lam, mu, delta=0.0):
  """ both thresholds, None where undefined """
  def attempt(func, *args):
    try:
      return func(*args)
    except NoThreshold as ex:
      log.warn("threshold undefined: %s" % ex)
      return None

  return Thresholds(lam, mu, delta,
    attempt(epsilon_max, lam, mu),
    attempt(epsilon_delta_max, delta, lam, mu))


class FeasibilityCurve(object):
  """ (mu, epsilon) points; epsilon is None where the threshold is undefined """

  def __init__(self, lam, delta, points):
    self.lam = lam
    self.delta = delta
    self.points = tuple(points)
    defined = [eps for _, eps in self.points if eps is not None]
    self.undefined = len(self.points) - len(defined)
    self.monotone = all(b >= a for a, b in zip(defined, defined[1:]))

  def to_data(self):
    """ one "mu epsilon" pair per line, nan where undefined """
    return "".join(
      "%.17g %s\n" % (mu, "nan" if eps is None else "%.17g" % eps) for mu, eps in self.points)

  def to_dict(self):
    return OrderedDict([
      ("lambda", self.lam),
      ("delta", self.delta),
      ("monotone", self.monotone),
      ("undefined", self.undefined),
      ("points", [list(point) for point in self.points]),
    ])

  def __len__(self):
    return len(self.points)


def feasibility_curve(lam, mu_max, step, delta=0.0, mu_min=0.0):
  """ epsilon thresholds on the grid mu_min, mu_min + step, .., mu_max (inclusive) """
  if not (step > 0 and math.isfinite(step)):
    raise InputDomainError("step must be a positive real, got %r" % step)
  if not 0 <= mu_min <= mu_max:
    raise InputDomainError("need 0 <= mu_min <= mu_max, got [%r, %r]" % (mu_min, mu_max))

  count = int(math.floor((mu_max - mu_min) / step + 1e-9)) + 1
  points = []
  for k in range(count):
    mu = mu_min + k * step
    if delta == 0:
      points.append((mu, epsilon_max(lam, mu)))
    elif delta > mu + EPSILON_TOL:
      points.append((mu, None))
    else:
      points.append((mu, epsilon_delta_max(delta, lam, mu)))

  curve = FeasibilityCurve(lam, delta, points)
  if curve.undefined:
    log.info("%d grid points below delta=%g have no threshold" % (curve.undefined, delta))
  if not curve.monotone:
    log.warn("threshold curve for lambda=%g delta=%g is not monotone in mu" % (lam, delta))
  return curve

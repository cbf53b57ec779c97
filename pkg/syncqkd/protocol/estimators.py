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


""" plug-in estimators for J_3 and the asynchronicity S, and the acceptance test """

from syncqkd.base.util import EstimationUndefined, InputDomainError
from syncqkd.stats.accumulators import CROSS_PAIRS, EQUAL_PAIRS, RoundCountsAccumulator

from .config import Variant


class Verdict(object):
  ACCEPTED = "accepted"
  ABORTED = "aborted"


def _counts(rounds):
  if isinstance(rounds, RoundCountsAccumulator):
    return rounds
  return RoundCountsAccumulator.from_rounds(rounds)


def estimate_j3(rounds):
  """
  J_3 = 1 - (1/4) sum over the 6 ordered cross-basis pairs of the empirical
  frequency of unequal outputs; every pair must have been observed.
  """
  counts = _counts(rounds)
  total = 0.0
  for xa, xb in CROSS_PAIRS:
    observed = counts.total(xa, xb)
    if observed == 0:
      raise EstimationUndefined(
        "no test rounds for bases (%d, %d); rerun with a larger n" % (xa, xb))
    total += counts.mismatches(xa, xb) / float(observed)
  return 1 - total / 4


def estimate_s(rounds):
  """ (1/3) sum_x of the fraction of y_A != y_B among rounds with x_A = x_B = x """
  counts = _counts(rounds)
  total = 0.0
  for x, _ in EQUAL_PAIRS:
    observed = counts.total(x, x)
    if observed == 0:
      raise EstimationUndefined(
        "no asynchronicity test rounds for basis %d; rerun with a larger n" % x)
    total += counts.mismatches(x, x) / float(observed)
  return total / len(EQUAL_PAIRS)


def accept(j3_hat, s_hat, config):
  if config.variant == Variant.B and s_hat is None:
    raise InputDomainError("variant B needs an asynchronicity estimate")

  if abs(j3_hat + 0.125) > config.lam:
    return Verdict.ABORTED
  if config.variant == Variant.B and s_hat > config.mu:
    return Verdict.ABORTED
  return Verdict.ACCEPTED

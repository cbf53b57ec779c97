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
The four synchronous Bell functionals on (c01, c02, c12):

  J_0 = (1 - c01 - c02 + c12) / 4
  J_1 = (1 - c01 + c02 - c12) / 4
  J_2 = (1 + c01 - c02 - c12) / 4
  J_3 = (1 + c01 + c02 + c12) / 4

Classical synchronous correlations satisfy J_i >= 0; synchronous quantum ones
satisfy J_i >= -1/8 and violate at most one of them.
'''

from collections import OrderedDict
import itertools

import numpy as np

from syncqkd.base.util import INPUTS, PREDICATE_TOL, PreconditionError, check_tolerance

from .correlations import (
  check_nonsignalling,
  check_symmetric,
  check_synchronous,
  to_bias_form,
)


CLASSICAL_BOUND = 0.0
QUANTUM_BOUND = -0.125

J_SIGNS = (
  (-1, -1, 1),
  (-1, 1, -1),
  (1, -1, -1),
  (1, 1, 1),
)

KEY_FUNCTIONAL = 3


class BellReport(object):
  def __init__(self, values, tol=PREDICATE_TOL):
    self.J = tuple(float(v) for v in values)
    self.tol = tol

    negative = [i for i, v in enumerate(self.J) if v < -tol]
    self.classical = not negative
    self.quantum_feasible = len(negative) <= 1 and min(self.J) >= QUANTUM_BOUND - tol
    self.violated_index = int(np.argmin(self.J)) if negative else None

  def to_dict(self):
    return OrderedDict([
      ("J", list(self.J)),
      ("classical", self.classical),
      ("quantum_feasible", self.quantum_feasible),
      ("violated_index", self.violated_index),
    ])

  def __repr__(self):
    return "BellReport(J=%s, classical=%s, quantum_feasible=%s)" % (
      self.J, self.classical, self.quantum_feasible)


def bell_functionals(bias, tol=PREDICATE_TOL):
  check_tolerance(tol)
  diagonal = np.diag(bias.c)
  if np.max(np.abs(diagonal - 1)) > tol:
    raise PreconditionError("unit_diagonal", "c_xx = %s" % list(diagonal))

  c = bias.off_diagonal
  values = [(1 + sum(s * v for s, v in zip(signs, c))) / 4 for signs in J_SIGNS]
  return BellReport(values, tol)


def j3_effective(p):
  """
  J_3 = 1 - (1/4) sum over x_A != x_B of [p(0,1|x_A,x_B) + p(1,0|x_A,x_B)]

  Needs no synchronicity; this is the quantity the protocol estimates.
  """
  total = 0.0
  for xa, xb in itertools.permutations(INPUTS, 2):
    total += p.table[0, 1, xa, xb] + p.table[1, 0, xa, xb]
  return 1 - total / 4


def classify(p, tol=PREDICATE_TOL):
  for name, predicate in (
      ("nonsignalling", check_nonsignalling),
      ("symmetric", check_symmetric),
      ("synchronous", check_synchronous)):
    if not predicate(p, tol):
      raise PreconditionError(name)

  return bell_functionals(to_bias_form(p, tol), tol)

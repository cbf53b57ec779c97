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


""" helpers """

import math


INPUTS = (0, 1, 2)
OUTPUTS = (0, 1)

PREDICATE_TOL = 1e-9
EXACT_TOL = 1e-12
GROUP_TOL = 1e-9

MAX_SEED = 2 ** 64


class Error(Exception): pass


class InputDomainError(Error, ValueError):
  """ an argument lies outside the domain of the operation """


class ValidationError(Error):
  """ an object violates the axioms of its type (e.g.: a non-projective PVM) """


class ConsistencyError(Error):
  """ a table is internally inconsistent (e.g.: signalling marginals) """


class PreconditionError(Error):
  """ raised with the name of the predicate that does not hold """

  def __init__(self, predicate, detail=""):
    self.predicate = predicate
    message = "precondition %s does not hold" % predicate
    super(PreconditionError, self).__init__("%s: %s" % (message, detail) if detail else message)


class EstimationUndefined(Error):
  """
  an estimator met an empty cell; the estimate has no meaning, so no
  verdict should be derived from it.
  """


class NoThreshold(Error):
  """ a closed-form threshold is undefined (negative radicand or singular map) """


class DeviceParseError(Error):
  def __init__(self, path, line, reason):
    self.path = path
    self.line = line
    super(DeviceParseError, self).__init__("%s:%d: %s" % (path, line, reason))


def check_input(x):
  if x not in INPUTS:
    raise InputDomainError("input must be one of %s, got %r" % (INPUTS, x))
  return x


def check_tolerance(tol):
  if not tol > 0 or not math.isfinite(tol):
    raise InputDomainError("tolerance must be a positive real, got %r" % tol)
  return tol


def check_seed(seed):
  """ seeds key Philox generators: 64-bit unsigned integers """
  if isinstance(seed, bool) or int(seed) != seed or not 0 <= seed < MAX_SEED:
    raise InputDomainError("seed must be a 64-bit unsigned integer, got %r" % (seed,))
  return int(seed)


def check_finite(name, value):
  if not math.isfinite(value):
    raise InputDomainError("%s must be finite, got %r" % (name, value))
  return value


def sign_of(y):
  """ +1 for output 0, -1 for output 1 (the M = E_0 - E_1 convention) """
  return 1 - 2 * y

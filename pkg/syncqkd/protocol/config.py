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


""" protocol configuration """

from collections import OrderedDict
import math

from syncqkd.base.util import INPUTS, PREDICATE_TOL, InputDomainError, check_seed


class Variant(object):
  A = "A"  # key + J3 test
  B = "B"  # key + J3 test + asynchronicity test on sacrificed rounds

  VALID = (A, B)

  @classmethod
  def invalid(cls, variant):
    return variant not in cls.VALID


class Role(object):
  KEY     = 0
  J3_TEST = 1
  S_TEST  = 2

  VALID = range(KEY, S_TEST + 1)

  NAMES = [
    "key",
    "j3_test",
    "s_test",
  ]

  @classmethod
  def invalid(cls, role):
    return role not in cls.VALID

  @classmethod
  def to_str(cls, role):
    return "" if cls.invalid(role) else cls.NAMES[role]


class ProtocolConfig(object):
  def __init__(self,
      variant=Variant.A,
      n=100000,
      lam=0.01,
      seed=0):
    """
      m and mu only matter for variant B
      input_distribution is over the three bases, uniform unless set
    """
    self.variant = variant
    self.n = n
    self.m = 10
    self.lam = lam
    self.mu = 0.01
    self.seed = seed
    self.input_distribution = (1.0 / 3, 1.0 / 3, 1.0 / 3)
    self.abort_on_mismatch = False

  def validate(self):
    if Variant.invalid(self.variant):
      raise InputDomainError("variant must be one of %s, got %r" % (Variant.VALID, self.variant))
    if int(self.n) != self.n or self.n < 1:
      raise InputDomainError("n must be a positive integer, got %r" % self.n)
    if self.variant == Variant.B and (int(self.m) != self.m or self.m < 2):
      raise InputDomainError("m must be an integer >= 2 for variant B, got %r" % self.m)
    if not 0 <= self.lam <= 0.125:
      raise InputDomainError("lambda must lie in [0, 1/8], got %r" % self.lam)
    if not (self.mu >= 0 and math.isfinite(self.mu)):
      raise InputDomainError("mu must be a nonnegative real, got %r" % self.mu)
    check_seed(self.seed)

    dist = tuple(float(p) for p in self.input_distribution)
    if len(dist) != len(INPUTS) or any(p < 0 for p in dist) or abs(sum(dist) - 1) > PREDICATE_TOL:
      raise InputDomainError("input distribution must be %d probabilities summing to 1, got %r" % (
        len(INPUTS), self.input_distribution))

    self.input_distribution = dist
    return self

  def to_dict(self):
    return OrderedDict([
      ("variant", self.variant),
      ("n", int(self.n)),
      ("m", int(self.m)),
      ("lambda", float(self.lam)),
      ("mu", float(self.mu)),
      ("seed", int(self.seed)),
      ("input_distribution", [float(p) for p in self.input_distribution]),
      ("abort_on_mismatch", bool(self.abort_on_mismatch)),
    ])

  def __str__(self):
    return """
***protocol config ***
variant = %s
n = %d
m = %d
lambda = %g
mu = %g
seed = %d
input_distribution = %s
abort_on_mismatch = %s
""" % (self.variant,
          self.n,
          self.m,
          self.lam,
          self.mu,
          self.seed,
          ",".join("%g" % p for p in self.input_distribution),
          str(self.abort_on_mismatch).lower())

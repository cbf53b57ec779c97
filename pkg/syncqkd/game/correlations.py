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
Correlation tables p(y_A, y_B | x_A, x_B) for the three-input, two-output
synchronous game, their bias form (a, b, c) and the nonsignalling, symmetric
and synchronous predicates.

Tables are stored as read-only float arrays indexed [y_A, y_B, x_A, x_B];
flattened, that is the documented 36-entry order (y_A, y_B major, x_A, x_B
minor).
'''

from collections import OrderedDict
import itertools

import numpy as np

from syncqkd.base.hilbert import BipartiteState, hs_trace, validate_pvm
from syncqkd.base.util import (
  EXACT_TOL,
  INPUTS,
  OUTPUTS,
  PREDICATE_TOL,
  ConsistencyError,
  InputDomainError,
  ValidationError,
  check_tolerance,
)


SHAPE = (len(OUTPUTS), len(OUTPUTS), len(INPUTS), len(INPUTS))
SIGNS = np.array([1.0, -1.0])


class Correlation(object):
  __slots__ = ("table",)

  def __init__(self, table, tol=PREDICATE_TOL):
    table = np.array(table, dtype=float)
    if table.shape != SHAPE:
      raise InputDomainError("expected a table of shape %s, got %s" % (SHAPE, table.shape))
    if not np.all(np.isfinite(table)):
      raise ValidationError("table has non-finite entries")
    if table.min() < -tol or table.max() > 1 + tol:
      raise ValidationError("entries must lie in [0, 1] (min=%.3g, max=%.3g)" % (table.min(), table.max()))

    totals = table.sum(axis=(0, 1))
    worst = np.unravel_index(np.argmax(np.abs(totals - 1)), totals.shape)
    if abs(totals[worst] - 1) > tol:
      raise ValidationError("p(.,.|%d,%d) sums to %.12g" % (worst[0], worst[1], totals[worst]))

    table.setflags(write=False)
    self.table = table

  @classmethod
  def from_flat(cls, values, tol=PREDICATE_TOL):
    values = list(values)
    if len(values) != int(np.prod(SHAPE)):
      raise InputDomainError("expected %d entries, got %d" % (np.prod(SHAPE), len(values)))
    return cls(np.reshape(values, SHAPE), tol)

  def flat(self):
    return [float(v) for v in self.table.reshape(-1)]

  def prob(self, ya, yb, xa, xb):
    return float(self.table[ya, yb, xa, xb])

  def conditional(self, xa, xb):
    """ the 2x2 output distribution for one input pair """
    return self.table[:, :, xa, xb]

  def matrix(self):
    """ rows (y_A, y_B), columns (x_A, x_B): the 4x9 display layout """
    return self.table.reshape(len(OUTPUTS) ** 2, len(INPUTS) ** 2)

  def allclose(self, other, tol=EXACT_TOL):
    return float(np.max(np.abs(self.table - other.table))) <= tol

  def to_dict(self):
    return OrderedDict([("p", self.flat())])

  def __repr__(self):
    return "Correlation(%s)" % np.array2string(self.matrix(), precision=6)


class BiasForm(object):
  """
  a_x: Alice's biases, b_x: Bob's biases, c[x_A, x_B]: correlators, all in [-1, 1]
  """

  __slots__ = ("a", "b", "c")

  def __init__(self, a, b, c, tol=PREDICATE_TOL):
    a = np.array(a, dtype=float)
    b = np.array(b, dtype=float)
    c = np.array(c, dtype=float)
    n = len(INPUTS)
    if a.shape != (n,) or b.shape != (n,) or c.shape != (n, n):
      raise InputDomainError("bias form needs a, b of length %d and a %dx%d c" % (n, n, n))
    for name, v in (("a", a), ("b", b), ("c", c)):
      if not np.all(np.isfinite(v)) or np.max(np.abs(v)) > 1 + tol:
        raise InputDomainError("%s must have entries in [-1, 1]" % name)
      v.setflags(write=False)
    self.a, self.b, self.c = a, b, c

  @property
  def off_diagonal(self):
    """ (c01, c02, c12) """
    return (float(self.c[0, 1]), float(self.c[0, 2]), float(self.c[1, 2]))

  def to_dict(self):
    return OrderedDict([
      ("a", [float(v) for v in self.a]),
      ("b", [float(v) for v in self.b]),
      ("c", [[float(v) for v in row] for row in self.c]),
    ])

  def __repr__(self):
    return "BiasForm(a=%s, b=%s, c=%s)" % (list(self.a), list(self.b), self.off_diagonal)


FUNCTIONS = tuple(itertools.product(OUTPUTS, repeat=len(INPUTS)))


class ClassicalStrategy(object):
  """ shared randomness omega picks a deterministic f_omega: X -> Y for both parties """

  def __init__(self, functions, weights, tol=PREDICATE_TOL):
    functions = [tuple(int(y) for y in f) for f in functions]
    weights = [float(w) for w in weights]
    if not functions or len(functions) != len(weights):
      raise InputDomainError("need one weight per function")
    for f in functions:
      if len(f) != len(INPUTS) or any(y not in OUTPUTS for y in f):
        raise InputDomainError("invalid function %r" % (f,))
    if any(w < 0 for w in weights) or abs(sum(weights) - 1) > tol:
      raise InputDomainError("weights must be nonnegative and sum to 1")
    self.functions = tuple(functions)
    self.weights = tuple(weights)

  @classmethod
  def deterministic(cls, f):
    return cls([f], [1.0])

  @classmethod
  def all_deterministic(cls):
    return [cls.deterministic(f) for f in FUNCTIONS]

  @classmethod
  def mixture(cls, weights):
    """ weights over FUNCTIONS """
    return cls(FUNCTIONS, weights)

  def __repr__(self):
    return "ClassicalStrategy(%s)" % ", ".join(
      "%s:%.4g" % ("".join(map(str, f)), w) for f, w in zip(self.functions, self.weights))


def ideal_correlation():
  """
  The exact statistics of the ideal measurements on an EPR pair:
  p(y, y|x, x) = 1/2, and for x_A != x_B equal outputs 1/8, unequal 3/8.
  """
  table = np.zeros(SHAPE)
  for xa, xb in itertools.product(INPUTS, INPUTS):
    if xa == xb:
      table[0, 0, xa, xb] = table[1, 1, xa, xb] = 0.5
    else:
      table[0, 0, xa, xb] = table[1, 1, xa, xb] = 0.125
      table[0, 1, xa, xb] = table[1, 0, xa, xb] = 0.375
  return Correlation(table)


def uniform_correlation():
  return Correlation(np.full(SHAPE, 0.25))


def tracial_correlation(family, tol=PREDICATE_TOL):
  """ p(y_A, y_B|x_A, x_B) = (1/d) trace(E^{x_A}_{y_A} E^{x_B}_{y_B}) """
  report = validate_pvm(family, tol)
  if not report.passed:
    raise ValidationError(str(report))

  table = np.zeros(SHAPE)
  for ya, yb, xa, xb in itertools.product(OUTPUTS, OUTPUTS, INPUTS, INPUTS):
    table[ya, yb, xa, xb] = hs_trace(family[xa][ya], family[xb][yb]).real / family.dim
  return Correlation(table)


def correlation_from_state(rho, alice, bob):
  """
  p = <psi|E (x) F|psi> for a BipartiteState, or trace(rho (E (x) F)) for a
  density matrix on C^{d_A} (x) C^{d_B}.
  """
  dims = (alice.dim, bob.dim)
  table = np.zeros(SHAPE)

  if isinstance(rho, BipartiteState):
    if rho.dims != dims:
      raise InputDomainError("state dims %s do not match measurements %s" % (rho.dims, dims))
    psi = rho.matrix()
    for ya, yb, xa, xb in itertools.product(OUTPUTS, OUTPUTS, INPUTS, INPUTS):
      # (E (x) F)|psi> reshaped is E psi F^T
      image = alice[xa][ya].dot(psi).dot(bob[xb][yb].T)
      table[ya, yb, xa, xb] = np.vdot(psi, image).real
  else:
    rho = np.asarray(rho, dtype=complex)
    size = dims[0] * dims[1]
    if rho.shape != (size, size):
      raise InputDomainError("density matrix of shape %s does not match measurements %s" % (rho.shape, dims))
    for ya, yb, xa, xb in itertools.product(OUTPUTS, OUTPUTS, INPUTS, INPUTS):
      table[ya, yb, xa, xb] = hs_trace(rho, np.kron(alice[xa][ya], bob[xb][yb])).real

  return Correlation(table)


def classical_correlation(strategy):
  table = np.zeros(SHAPE)
  for f, weight in zip(strategy.functions, strategy.weights):
    for xa, xb in itertools.product(INPUTS, INPUTS):
      table[f[xa], f[xb], xa, xb] += weight
  return Correlation(table)


def _signalling_violation(p, tol):
  """ the worst marginal dependence on the other party's input, or None """
  alice = p.table.sum(axis=1)  # [y_A, x_A, x_B]
  bob = p.table.sum(axis=0)    # [y_B, x_A, x_B]

  worst = None
  for x in INPUTS:
    spread_a = float(np.ptp(alice[0, x, :]))
    spread_b = float(np.ptp(bob[0, :, x]))
    for party, spread in (("Alice", spread_a), ("Bob", spread_b)):
      if spread > tol and (worst is None or spread > worst[2]):
        worst = (party, x, spread)
  return worst


def check_nonsignalling(p, tol=PREDICATE_TOL):
  check_tolerance(tol)
  return _signalling_violation(p, tol) is None


def check_symmetric(p, tol=PREDICATE_TOL):
  """ p(y_A, y_B|x_A, x_B) = p(y_B, y_A|x_B, x_A) """
  check_tolerance(tol)
  return float(np.max(np.abs(p.table - p.table.transpose(1, 0, 3, 2)))) <= tol


def check_synchronous(p, tol=PREDICATE_TOL):
  """ p(y_A, y_B|x, x) = 0 for y_A != y_B """
  check_tolerance(tol)
  return max(asynchronicity(p)[1]) <= tol


def to_bias_form(p, tol=PREDICATE_TOL):
  violation = _signalling_violation(p, tol)
  if violation is not None:
    party, x, spread = violation
    raise ConsistencyError(
      "%s's marginal for input %d depends on the other party's input (spread %.3g)" % (party, x, spread))

  alice = p.table.sum(axis=1)
  bob = p.table.sum(axis=0)
  a = np.einsum("y,yxz->x", SIGNS, alice) / len(INPUTS)
  b = np.einsum("y,yzx->x", SIGNS, bob) / len(INPUTS)
  c = np.einsum("i,j,ijxz->xz", SIGNS, SIGNS, p.table)
  return BiasForm(a, b, c, tol)


def to_correlation(bias, tol=PREDICATE_TOL):
  """ p = (1 + s_A a_{x_A} + s_B b_{x_B} + s_A s_B c_{x_A x_B}) / 4, s = +1 for y = 0 """
  ones = np.ones(len(INPUTS))
  table = (
    np.ones(SHAPE)
    + np.einsum("i,j,x,z->ijxz", SIGNS, np.ones(2), bias.a, ones)
    + np.einsum("i,j,x,z->ijxz", np.ones(2), SIGNS, ones, bias.b)
    + np.einsum("i,j,xz->ijxz", SIGNS, SIGNS, bias.c)
  ) / 4
  return Correlation(table, tol)


def from_unit_vectors(u0, u1, u2, tol=PREDICATE_TOL):
  """ c_{x_A x_B} = <u_{x_A}, u_{x_B}>, a = b = 0 """
  vectors = [np.array(u, dtype=float).reshape(-1) for u in (u0, u1, u2)]
  if len(set(v.size for v in vectors)) != 1:
    raise InputDomainError("unit vectors must share a dimension")
  for x, v in enumerate(vectors):
    if not np.all(np.isfinite(v)) or abs(np.linalg.norm(v) - 1) > tol:
      raise InputDomainError("u_%d is not a unit vector (norm=%.12g)" % (x, np.linalg.norm(v)))

  gram = np.array([[np.dot(u, v) for v in vectors] for u in vectors])
  np.fill_diagonal(gram, 1.0)
  zeros = np.zeros(len(INPUTS))
  return BiasForm(zeros, zeros, np.clip(gram, -1.0, 1.0), tol)


def asynchronicity(p):
  """
  S_x = sum_{y_A != y_B} p(y_A, y_B|x, x) and S = (1/3) sum_x S_x
  :return: (S, (S_0, S_1, S_2))
  """
  per_input = tuple(float(p.table[0, 1, x, x] + p.table[1, 0, x, x]) for x in INPUTS)
  return sum(per_input) / len(INPUTS), per_input

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
Dense complex linear algebra for the small Hilbert spaces the toolkit works on:
projectors, projection-valued measures (PVMs), +/-1 observables, bipartite
states and their Schmidt decompositions.

Matrices are plain read-only numpy arrays of complex128; families and states
wrap them with the invariants of their type.
'''

import math

import numpy as np
from scipy.linalg import block_diag

from .util import (
  EXACT_TOL,
  GROUP_TOL,
  INPUTS,
  OUTPUTS,
  InputDomainError,
  check_finite,
  check_input,
  check_tolerance,
)


def as_matrix(entries):
  """ a square, finite, read-only complex matrix """
  m = np.array(entries, dtype=complex)
  if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] < 1:
    raise InputDomainError("expected a non-empty square matrix, got shape %s" % (m.shape,))
  if not np.all(np.isfinite(m)):
    raise InputDomainError("matrix has non-finite entries")
  m.setflags(write=False)
  return m


def identity(dim):
  return as_matrix(np.eye(dim))


def dagger(m):
  return m.conj().T


def projector(vector):
  """ rank-1 projector onto span{vector} """
  v = np.array(vector, dtype=complex)
  norm = np.linalg.norm(v)
  if norm == 0:
    raise InputDomainError("cannot project onto the zero vector")
  v = v / norm
  return as_matrix(np.outer(v, v.conj()))


def tensor(a, b):
  return as_matrix(np.kron(a, b))


def direct_sum(*blocks):
  return as_matrix(block_diag(*blocks))


def hs_trace(a, b):
  """ trace(a . b) in O(d^2), without forming the product """
  return complex(np.sum(np.asarray(a) * np.asarray(b).T))


def max_norm(m):
  return float(np.max(np.abs(m))) if np.size(m) else 0.0


class PvmFamily(object):
  """ for each input x in {0, 1, 2} a pair of projectors (E^x_0, E^x_1) """

  __slots__ = ("dim", "_projectors")

  def __init__(self, projectors):
    projectors = tuple(projectors)
    if len(projectors) != len(INPUTS):
      raise InputDomainError("a family needs %d measurements, got %d" % (len(INPUTS), len(projectors)))

    pairs = []
    for pair in projectors:
      pair = tuple(as_matrix(e) for e in pair)
      if len(pair) != len(OUTPUTS):
        raise InputDomainError("each measurement needs %d effects" % len(OUTPUTS))
      pairs.append(pair)

    dims = set(e.shape[0] for pair in pairs for e in pair)
    if len(dims) != 1:
      raise InputDomainError("projectors act on different dimensions: %s" % sorted(dims))

    self.dim = dims.pop()
    self._projectors = tuple(pairs)

  def __getitem__(self, x):
    return self._projectors[check_input(x)]

  def __iter__(self):
    return iter(self._projectors)

  def projector(self, x, y):
    return self[x][y]

  def __repr__(self):
    return "PvmFamily(dim=%d)" % self.dim


class Observable(object):
  """ a +/-1 valued observable M_x = E^x_0 - E^x_1 """

  __slots__ = ("dim", "matrix")

  def __init__(self, matrix):
    self.matrix = as_matrix(matrix)
    self.dim = self.matrix.shape[0]

  def squared_defect(self):
    """ max-norm distance of M^2 from the identity """
    return max_norm(self.matrix.dot(self.matrix) - np.eye(self.dim))

  def __repr__(self):
    return "Observable(dim=%d)" % self.dim


class PvmReport(object):
  """ per-input defects of a PVM family; failures are data, not exceptions """

  def __init__(self, tol, hermiticity, idempotency, completeness):
    self.tol = tol
    self.hermiticity = tuple(hermiticity)
    self.idempotency = tuple(idempotency)
    self.completeness = tuple(completeness)

  @property
  def failures(self):
    failed = []
    for name in ("hermiticity", "idempotency", "completeness"):
      for x, defect in enumerate(getattr(self, name)):
        if defect > self.tol:
          failed.append((name, x, defect))
    return failed

  @property
  def passed(self):
    return not self.failures

  def __str__(self):
    if self.passed:
      return "PVM ok (tol=%g)" % self.tol
    return "PVM failed (tol=%g): %s" % (
      self.tol, ", ".join("%s[x=%d]=%.3g" % f for f in self.failures))


def validate_pvm(family, tol=EXACT_TOL):
  check_tolerance(tol)

  hermiticity, idempotency, completeness = [], [], []
  one = np.eye(family.dim)
  for e0, e1 in family:
    hermiticity.append(max(max_norm(e - dagger(e)) for e in (e0, e1)))
    idempotency.append(max(max_norm(e.dot(e) - e) for e in (e0, e1)))
    completeness.append(max_norm(e0 + e1 - one))

  return PvmReport(tol, hermiticity, idempotency, completeness)


def ideal_pvms():
  """
  The protocol's measurements on a qubit: E^x_1 projects onto |phi_x> with
    |phi_0> = |1>, |phi_1> = (sqrt3/2)|0> + (1/2)|1>, |phi_2> = (sqrt3/2)|0> - (1/2)|1>
  and E^x_0 is the complement.
  """
  half_root3 = math.sqrt(3) / 2
  vectors = ([0.0, 1.0], [half_root3, 0.5], [half_root3, -0.5])
  return _rank_one_family(vectors)


def pvm_from_angles(theta0, theta1, theta2):
  """ E^x_1 projects onto cos(theta_x)|0> + sin(theta_x)|1> """
  thetas = [check_finite("angle", float(t)) for t in (theta0, theta1, theta2)]
  return _rank_one_family([[math.cos(t), math.sin(t)] for t in thetas])


def _rank_one_family(vectors):
  one = np.eye(2)
  pairs = []
  for v in vectors:
    e1 = projector(v)
    pairs.append((one - e1, e1))
  return PvmFamily(pairs)


def pvm_from_observables(*observables):
  """ E_0 = (1 + M)/2, E_1 = (1 - M)/2 for each +/-1 observable """
  pairs = []
  for m in observables:
    m = np.asarray(getattr(m, "matrix", m), dtype=complex)
    one = np.eye(m.shape[0])
    pairs.append(((one + m) / 2, (one - m) / 2))
  return PvmFamily(pairs)


def observable(family, x):
  e0, e1 = family[x]
  return Observable(e0 - e1)


def transpose_family(family):
  return PvmFamily([(e0.T, e1.T) for e0, e1 in family])


class BipartiteState(object):
  """ a unit vector in C^{d_A} (x) C^{d_B}, index a * d_B + b """

  __slots__ = ("dims", "amplitudes")

  def __init__(self, amplitudes, dims, tol=1e-9):
    d_a, d_b = int(dims[0]), int(dims[1])
    if d_a < 1 or d_b < 1:
      raise InputDomainError("local dimensions must be positive, got %s" % (dims,))

    amplitudes = np.array(amplitudes, dtype=complex).reshape(-1)
    if amplitudes.size != d_a * d_b:
      raise InputDomainError("expected %d amplitudes, got %d" % (d_a * d_b, amplitudes.size))
    if not np.all(np.isfinite(amplitudes)):
      raise InputDomainError("state has non-finite amplitudes")

    norm = np.linalg.norm(amplitudes)
    if norm == 0:
      raise InputDomainError("zero state")
    if abs(norm - 1) > tol:
      raise InputDomainError("state is not normalized (norm=%.12g)" % norm)

    amplitudes.setflags(write=False)
    self.dims = (d_a, d_b)
    self.amplitudes = amplitudes

  def matrix(self):
    """ the d_A x d_B amplitude matrix """
    return self.amplitudes.reshape(self.dims)

  def __repr__(self):
    return "BipartiteState(dims=%s)" % (self.dims,)


def maximally_entangled(dim):
  amplitudes = np.eye(dim).reshape(-1) / math.sqrt(dim)
  return BipartiteState(amplitudes, (dim, dim))


def epr_pair():
  """ (|00> + |11>)/sqrt2 """
  return maximally_entangled(2)


def product_state(a, b):
  a = np.array(a, dtype=complex)
  b = np.array(b, dtype=complex)
  return BipartiteState(np.kron(a / np.linalg.norm(a), b / np.linalg.norm(b)), (a.size, b.size))


def density_matrix(state):
  v = state.amplitudes
  return as_matrix(np.outer(v, v.conj()))


class SchmidtDecomposition(object):
  """
  |psi> = sum_j sqrt(sigma_j) sum_m |phi^A_{j,m}> (x) |phi^B_{j,m}>

  coefficients are the distinct squared Schmidt values sigma_j (descending),
  multiplicities the d_j, and basis_a[j] / basis_b[j] hold the d_j paired
  vectors as columns.
  """

  def __init__(self, dims, coefficients, multiplicities, basis_a, basis_b):
    self.dims = dims
    self.coefficients = tuple(coefficients)
    self.multiplicities = tuple(multiplicities)
    self.basis_a = tuple(basis_a)
    self.basis_b = tuple(basis_b)

  @property
  def rank(self):
    return sum(self.multiplicities)

  @property
  def total_weight(self):
    return sum(s * d for s, d in zip(self.coefficients, self.multiplicities))

  def reconstruct(self):
    out = np.zeros(self.dims[0] * self.dims[1], dtype=complex)
    for sigma, a, b in zip(self.coefficients, self.basis_a, self.basis_b):
      for m in range(a.shape[1]):
        out += math.sqrt(sigma) * np.kron(a[:, m], b[:, m])
    return out

  def __repr__(self):
    return "SchmidtDecomposition(%s)" % ", ".join(
      "%.12g x %d" % (s, d) for s, d in zip(self.coefficients, self.multiplicities))


def schmidt_decompose(state, group_tol=GROUP_TOL):
  check_tolerance(group_tol)
  matrix = state.matrix()
  if not np.any(matrix):
    raise InputDomainError("zero state")

  u, values, vh = np.linalg.svd(matrix)
  keep = values > EXACT_TOL
  squared = values[keep] ** 2

  groups = []
  for i, sigma in enumerate(squared):
    if groups and abs(squared[groups[-1][0]] - sigma) <= group_tol:
      groups[-1].append(i)
    else:
      groups.append([i])

  coefficients, multiplicities, basis_a, basis_b = [], [], [], []
  for members in groups:
    coefficients.append(float(np.mean(squared[members])))
    multiplicities.append(len(members))
    basis_a.append(u[:, members])
    basis_b.append(vh[members, :].T)

  return SchmidtDecomposition(state.dims, coefficients, multiplicities, basis_a, basis_b)

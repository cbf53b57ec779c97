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
import unittest

import numpy as np
import pytest

from syncqkd.base.hilbert import (
  BipartiteState,
  PvmFamily,
  direct_sum,
  epr_pair,
  ideal_pvms,
  maximally_entangled,
  observable,
  product_state,
  pvm_from_angles,
  pvm_from_observables,
  schmidt_decompose,
  tensor,
  transpose_family,
  validate_pvm,
)
from syncqkd.base.util import InputDomainError

from .common import random_pvm_family


ROOT3 = math.sqrt(3)


def test_ideal_pvms():
  family = ideal_pvms()
  assert family.dim == 2
  assert np.allclose(family[1][1], [[0.75, ROOT3 / 4], [ROOT3 / 4, 0.25]], atol=1e-12)
  assert np.allclose(family[0][0], [[1, 0], [0, 0]], atol=1e-12)
  assert validate_pvm(family, 1e-12).passed


def test_pvm_from_angles():
  ideal = ideal_pvms()
  family = pvm_from_angles(math.pi / 2, math.pi / 6, -math.pi / 6)
  for x in range(3):
    for y in range(2):
      assert np.max(np.abs(family[x][y] - ideal[x][y])) <= 1e-12

  same = pvm_from_angles(0, 0, 0)
  assert np.array_equal(same[0][1], same[2][1])

  with pytest.raises(InputDomainError):
    pvm_from_angles(float("nan"), 0, 0)


def test_observable():
  family = ideal_pvms()
  assert np.allclose(observable(family, 0).matrix, [[1, 0], [0, -1]], atol=1e-12)
  # M_1 = 1 - 2 E^1_1
  assert np.allclose(observable(family, 1).matrix, [[-0.5, -ROOT3 / 2], [-ROOT3 / 2, 0.5]], atol=1e-12)
  assert np.allclose(observable(family, 2).matrix, [[-0.5, ROOT3 / 2], [ROOT3 / 2, 0.5]], atol=1e-12)

  for x in (-1, 3, "1"):
    with pytest.raises(InputDomainError):
      observable(family, x)


def test_observable_trace_and_square():
  rng = np.random.default_rng(11)
  for _ in range(50):
    dim = int(rng.integers(1, 6))
    family = random_pvm_family(rng, dim)
    report = validate_pvm(family, 1e-12)
    assert report.passed, str(report)
    for x in range(3):
      m = observable(family, x)
      rank = int(round(np.trace(family[x][1]).real))
      assert abs(np.trace(m.matrix).real - (dim - 2 * rank)) <= 1e-9
      assert m.squared_defect() <= 4e-12


def test_pvm_from_observables():
  rng = np.random.default_rng(5)
  family = random_pvm_family(rng, 4)
  rebuilt = pvm_from_observables(*[observable(family, x) for x in range(3)])
  assert validate_pvm(rebuilt, 1e-12).passed
  for x in range(3):
    for a in range(2):
      assert np.allclose(rebuilt[x][a], family[x][a], atol=1e-12)

  # raw matrices work too
  ideal = ideal_pvms()
  rebuilt = pvm_from_observables(*[observable(ideal, x).matrix for x in range(3)])
  assert np.allclose(rebuilt[1][1], ideal[1][1], atol=1e-12)


def test_validate_pvm_detects_broken_projector():
  ideal = ideal_pvms()
  broken = PvmFamily([(ideal[0][0], 0.999 * ideal[0][1]), ideal[1], ideal[2]])
  report = validate_pvm(broken, 1e-12)
  assert not report.passed
  assert ("idempotency", 0) in [(name, x) for name, x, _ in report.failures]
  assert all(x == 0 for _, x, _ in report.failures)

  with pytest.raises(InputDomainError):
    validate_pvm(ideal, 0)


def test_family_shapes():
  with pytest.raises(InputDomainError):
    PvmFamily([(np.eye(2), np.zeros((2, 2)))] * 2)
  with pytest.raises(InputDomainError):
    PvmFamily([(np.eye(2), np.zeros((2, 2))), (np.eye(2), np.zeros((2, 2))), (np.eye(3), np.zeros((3, 3)))])
  with pytest.raises(InputDomainError):
    PvmFamily([(np.eye(2), np.full((2, 2), np.nan))] * 3)


def test_trace_under_assembly():
  rng = np.random.default_rng(5)
  for _ in range(20):
    a = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
    b = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
    a, b = a + a.conj().T, b + b.conj().T
    assert abs(np.trace(direct_sum(a, b)) - (np.trace(a) + np.trace(b))) <= 1e-12
    assert abs(np.trace(tensor(a, b)) - np.trace(a) * np.trace(b)) <= 1e-12


def test_transpose_family():
  rng = np.random.default_rng(2)
  family = random_pvm_family(rng, 3)
  transposed = transpose_family(family)
  assert np.array_equal(transposed[1][0], family[1][0].T)
  assert validate_pvm(transposed, 1e-12).passed


class SchmidtTestCase(unittest.TestCase):
  def test_epr_pair(self):
    decomposition = schmidt_decompose(epr_pair())
    self.assertEqual(len(decomposition.coefficients), 1)
    self.assertAlmostEqual(decomposition.coefficients[0], 0.5, places=12)
    self.assertEqual(decomposition.multiplicities, (2,))

  def test_product_state(self):
    decomposition = schmidt_decompose(product_state([1, 0], [0, 1]))
    self.assertAlmostEqual(decomposition.coefficients[0], 1.0, places=12)
    self.assertEqual(decomposition.multiplicities, (1,))

  def test_distinct_coefficients(self):
    state = BipartiteState([math.sqrt(0.8), 0, 0, math.sqrt(0.2)], (2, 2))
    decomposition = schmidt_decompose(state)
    self.assertEqual(decomposition.multiplicities, (1, 1))
    self.assertAlmostEqual(decomposition.coefficients[0], 0.8, places=12)
    self.assertAlmostEqual(decomposition.coefficients[1], 0.2, places=12)

  def test_maximally_entangled_groups(self):
    decomposition = schmidt_decompose(maximally_entangled(4))
    self.assertEqual(decomposition.multiplicities, (4,))
    self.assertAlmostEqual(decomposition.total_weight, 1.0, places=12)

  def test_reconstruction(self):
    rng = np.random.default_rng(17)
    for _ in range(30):
      dims = (int(rng.integers(1, 5)), int(rng.integers(1, 5)))
      amplitudes = rng.normal(size=dims[0] * dims[1]) + 1j * rng.normal(size=dims[0] * dims[1])
      state = BipartiteState(amplitudes / np.linalg.norm(amplitudes), dims)
      decomposition = schmidt_decompose(state)

      self.assertLessEqual(np.linalg.norm(decomposition.reconstruct() - state.amplitudes), 1e-9)
      self.assertAlmostEqual(decomposition.total_weight, 1.0, places=9)
      self.assertEqual(list(decomposition.coefficients), sorted(decomposition.coefficients, reverse=True))
      for basis in decomposition.basis_a + decomposition.basis_b:
        gram = basis.conj().T.dot(basis)
        self.assertLessEqual(np.max(np.abs(gram - np.eye(basis.shape[1]))), 1e-9)

  def test_zero_state(self):
    with self.assertRaises(InputDomainError):
      schmidt_decompose(BipartiteState([0, 0, 0, 0], (2, 2)))

  def test_unnormalized_state(self):
    with self.assertRaises(InputDomainError):
      BipartiteState([1, 1, 0, 0], (2, 2))
    with self.assertRaises(InputDomainError):
      BipartiteState([1, 0, 0], (2, 2))


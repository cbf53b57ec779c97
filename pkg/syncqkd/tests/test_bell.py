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


import itertools
import math

import numpy as np
import pytest

from syncqkd.base.hilbert import pvm_from_angles
from syncqkd.base.util import PreconditionError
from syncqkd.game.bell import (
  KEY_FUNCTIONAL,
  QUANTUM_BOUND,
  bell_functionals,
  classify,
  j3_effective,
)
from syncqkd.game.correlations import (
  BiasForm,
  ClassicalStrategy,
  classical_correlation,
  from_unit_vectors,
  ideal_correlation,
  to_bias_form,
  tracial_correlation,
  uniform_correlation,
)

from .common import random_classical_strategy, random_pvm_family, random_synchronous_table, random_table


def bias(c01, c02, c12):
  c = np.eye(3)
  c[0, 1] = c[1, 0] = c01
  c[0, 2] = c[2, 0] = c02
  c[1, 2] = c[2, 1] = c12
  return BiasForm(np.zeros(3), np.zeros(3), c)


def test_functionals_at_maximal_violation():
  report = bell_functionals(bias(-0.5, -0.5, -0.5))
  assert report.J == (0.375, 0.375, 0.375, -0.125)
  assert not report.classical
  assert report.quantum_feasible
  assert report.violated_index == KEY_FUNCTIONAL


def test_functionals_constant_and_uncorrelated():
  assert bell_functionals(bias(1, 1, 1)).J == (0.0, 0.0, 0.0, 1.0)
  report = bell_functionals(bias(0, 0, 0))
  assert report.J == (0.25, 0.25, 0.25, 0.25)
  assert report.classical
  assert report.violated_index is None


def test_functionals_beyond_quantum_bound():
  report = bell_functionals(bias(-1, -1, -1))
  assert report.J[3] == -0.5
  assert not report.quantum_feasible


def test_functionals_need_unit_diagonal():
  c = np.full((3, 3), 0.5)
  with pytest.raises(PreconditionError) as info:
    bell_functionals(BiasForm(np.zeros(3), np.zeros(3), c))
  assert info.value.predicate == "unit_diagonal"


def test_j3_effective():
  assert j3_effective(ideal_correlation()) == QUANTUM_BOUND
  assert j3_effective(uniform_correlation()) == 0.25


def test_j3_effective_matches_functional():
  rng = np.random.default_rng(5)
  for _ in range(200):
    p = random_synchronous_table(rng)
    assert abs(j3_effective(p) - bell_functionals(to_bias_form(p)).J[3]) <= 1e-12


def test_j3_effective_on_signalling_table():
  value = j3_effective(random_table(np.random.default_rng(6)))
  assert -1.0 - 1e-12 <= value <= 1.0 + 1e-12


def test_classify_ideal():
  report = classify(ideal_correlation())
  assert not report.classical
  assert report.quantum_feasible
  assert report.violated_index == 3
  assert abs(report.J[3] + 0.125) <= 1e-12


def test_classify_preconditions():
  with pytest.raises(PreconditionError) as info:
    classify(uniform_correlation())
  assert info.value.predicate == "synchronous"

  with pytest.raises(PreconditionError) as info:
    classify(random_table(np.random.default_rng(7)))
  assert info.value.predicate == "nonsignalling"


def test_classical_strategies_are_classical():
  for strategy in ClassicalStrategy.all_deterministic():
    report = classify(classical_correlation(strategy))
    assert report.classical
    assert min(report.J) >= -1e-12

  rng = np.random.default_rng(9)
  for _ in range(200):
    assert min(classify(classical_correlation(random_classical_strategy(rng))).J) >= -1e-12


def test_quantum_bound_over_random_angles():
  rng = np.random.default_rng(10)
  for thetas in rng.uniform(0, math.pi, size=(10000, 3)):
    report = bell_functionals(to_bias_form(tracial_correlation(pvm_from_angles(*thetas))))
    assert min(report.J) >= QUANTUM_BOUND - 1e-9
    assert sum(1 for v in report.J if v < 0) <= 1
    assert report.quantum_feasible


def test_quantum_bound_over_random_projectors():
  rng = np.random.default_rng(11)
  for _ in range(300):
    family = random_pvm_family(rng, int(rng.integers(1, 7)))
    report = classify(tracial_correlation(family))
    assert min(report.J) >= QUANTUM_BOUND - 1e-9
    assert report.quantum_feasible


def test_maximal_violation_is_unique_on_grid():
  # planar unit vectors u_0 = (1, 0), u_1, u_2 on a dense angle grid
  grid = np.linspace(0, 2 * math.pi, 361)
  pattern = bias(-0.5, -0.5, -0.5).c
  hits = 0
  for phi1, phi2 in itertools.product(grid, grid):
    b = from_unit_vectors([1.0, 0.0], [math.cos(phi1), math.sin(phi1)], [math.cos(phi2), math.sin(phi2)])
    if abs(bell_functionals(b).J[3] - QUANTUM_BOUND) <= 1e-6:
      hits += 1
      assert np.max(np.abs(b.c - pattern)) <= 1e-2
  assert hits >= 2

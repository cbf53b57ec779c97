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


import optparse

import numpy as np

from syncqkd.base.hilbert import PvmFamily
from syncqkd.game.correlations import (
  SHAPE,
  ClassicalStrategy,
  Correlation,
  FUNCTIONS,
  classical_correlation,
  tracial_correlation,
)


def random_unitary(rng, dim):
  z = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
  q, r = np.linalg.qr(z)
  return q * (np.diag(r) / np.abs(np.diag(r)))


def random_pvm_family(rng, dim):
  """ for each input a random projector of random rank and its complement """
  pairs = []
  for _ in range(3):
    u = random_unitary(rng, dim)
    rank = int(rng.integers(0, dim + 1))
    e1 = u[:, :rank].dot(u[:, :rank].conj().T)
    pairs.append((np.eye(dim) - e1, e1))
  return PvmFamily(pairs)


def random_classical_strategy(rng):
  return ClassicalStrategy.mixture(rng.dirichlet(np.ones(len(FUNCTIONS))))


def random_synchronous_table(rng, max_dim=4):
  """ a mixture of a tracial and a classical correlation: synchronous, symmetric, nonsignalling """
  weight = rng.uniform()
  quantum = tracial_correlation(random_pvm_family(rng, int(rng.integers(1, max_dim + 1))))
  classical = classical_correlation(random_classical_strategy(rng))
  return Correlation(weight * quantum.table + (1 - weight) * classical.table)


def random_table(rng):
  """ arbitrary (usually signalling) conditional distributions """
  outcomes = rng.dirichlet(np.ones(4), size=(3, 3))  # [x_A, x_B, outcome]
  return Correlation(outcomes.transpose(2, 0, 1).reshape(SHAPE))


def parse_options(module, argv=()):
  """ the options a command module declares, parsed the way the app parses them """
  parser = optparse.OptionParser()
  for args, kwargs in module.OPTIONS:
    parser.add_option(*args, **kwargs)
  options, _ = parser.parse_args(list(argv))
  return options

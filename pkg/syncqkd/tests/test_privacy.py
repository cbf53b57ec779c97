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


import numpy as np
import pytest
from scipy.linalg import toeplitz

from syncqkd.base.util import InputDomainError
from syncqkd.protocol.privacy import bits_to_hex, privacy_amplify, toeplitz_seed_bits


def dense_hash(bits, out_len, seed):
  diagonals = toeplitz_seed_bits(seed, out_len, len(bits)).astype(np.int64)
  matrix = toeplitz(diagonals[:out_len], np.concatenate([diagonals[:1], diagonals[out_len:]]))
  return matrix.dot(np.asarray(bits, dtype=np.int64)) % 2


def test_matches_dense_product():
  rng = np.random.default_rng(1)
  for in_len, out_len in ((1, 1), (8, 3), (64, 64), (1000, 250), (4099, 1024)):
    bits = rng.integers(0, 2, size=in_len)
    seed = int(rng.integers(0, 2 ** 32))
    assert np.array_equal(privacy_amplify(bits, out_len, seed), dense_hash(bits, out_len, seed))


def test_linear_over_gf2():
  rng = np.random.default_rng(2)
  a = rng.integers(0, 2, size=500)
  b = rng.integers(0, 2, size=500)
  assert np.array_equal(
    privacy_amplify(a ^ b, 120, 9),
    privacy_amplify(a, 120, 9) ^ privacy_amplify(b, 120, 9))
  assert not np.any(privacy_amplify(np.zeros(500, dtype=int), 120, 9))


def test_deterministic_in_seed():
  bits = np.random.default_rng(3).integers(0, 2, size=300)
  assert np.array_equal(privacy_amplify(bits, 100, 4), privacy_amplify(bits, 100, 4))
  assert not np.array_equal(privacy_amplify(bits, 100, 4), privacy_amplify(bits, 100, 5))


def test_seeds_pick_different_hashes():
  key = np.array([1, 0] * 32)
  first = privacy_amplify(key, 16, 0)
  # a collision has probability 2^-16 per seed
  same = sum(np.array_equal(privacy_amplify(key, 16, seed), first) for seed in range(1, 100))
  assert same <= 1


def test_output_type_and_edges():
  key = privacy_amplify([1, 0, 1, 1], 2, 0)
  assert key.dtype == np.uint8
  assert key.shape == (2,)
  assert privacy_amplify([1, 0, 1], 0, 0).shape == (0,)


def test_rejects_bad_input():
  with pytest.raises(InputDomainError):
    privacy_amplify([0, 2, 1], 1, 0)
  with pytest.raises(InputDomainError):
    privacy_amplify([0, 1, 1], 4, 0)
  with pytest.raises(InputDomainError):
    privacy_amplify([0, 1, 1], -1, 0)
  for seed in (-1, 2 ** 64, 1.5):
    with pytest.raises(InputDomainError):
      privacy_amplify([0, 1, 1], 2, seed)
    with pytest.raises(InputDomainError):
      toeplitz_seed_bits(seed, 2, 3)
  with pytest.raises(InputDomainError):
    privacy_amplify([0, 1, 1], 0, -1)


def test_bits_to_hex():
  assert bits_to_hex([1, 0, 0, 0, 0, 0, 0, 1]) == "81"
  assert bits_to_hex([1]) == "80"
  assert bits_to_hex([1, 1, 1, 1, 1, 1, 1, 1, 0, 1]) == "ff40"
  assert bits_to_hex([]) == ""

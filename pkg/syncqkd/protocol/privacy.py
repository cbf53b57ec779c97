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


""" privacy amplification by two-universal Toeplitz hashing """

import numpy as np
from scipy.linalg import matmul_toeplitz

from syncqkd.base.util import InputDomainError, check_seed


def toeplitz_seed_bits(seed, out_len, in_len):
  """ the out_len + in_len - 1 bits that define the hashing matrix """
  rng = np.random.Generator(np.random.Philox(check_seed(seed)))
  return rng.integers(0, 2, size=out_len + in_len - 1, dtype=np.uint8)


def privacy_amplify(raw_key, out_len, seed):
  """
  Hashes raw_key with the out_len x len(raw_key) binary Toeplitz matrix drawn
  from seed, over GF(2)
  :return: a uint8 array of out_len bits
  """
  bits = np.asarray(raw_key, dtype=np.int64).reshape(-1)
  if np.any((bits != 0) & (bits != 1)):
    raise InputDomainError("raw key must consist of 0/1 values")
  if int(out_len) != out_len or not 0 <= out_len <= len(bits):
    raise InputDomainError("output length must lie in [0, %d], got %r" % (len(bits), out_len))
  seed = check_seed(seed)

  out_len = int(out_len)
  if out_len == 0:
    return np.zeros(0, dtype=np.uint8)

  diagonals = toeplitz_seed_bits(seed, out_len, len(bits)).astype(np.float64)
  column = diagonals[:out_len]
  row = np.concatenate([diagonals[:1], diagonals[out_len:]])

  # integer products of at most len(bits) terms: exact after rounding
  product = matmul_toeplitz((column, row), bits.astype(np.float64))
  return (np.rint(product).astype(np.int64) % 2).astype(np.uint8)


def bits_to_hex(bits):
  """ bits packed big-endian, zero padded to whole bytes """
  return np.packbits(np.asarray(bits, dtype=np.uint8)).tobytes().hex()

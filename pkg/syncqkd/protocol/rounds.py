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
Round sampling and sifting.

Rounds are numbered 1..n and drawn in blocks of BLOCK_ROUNDS; block b takes
its randomness from a Philox generator keyed by (seed, b), so a run is the
same whichever worker samples which block.
'''

from collections import OrderedDict, namedtuple

import numpy as np

from syncqkd.base.util import INPUTS, InputDomainError

from .config import Role, Variant


BLOCK_ROUNDS = 16384


def block_rng(seed, block):
  return np.random.Generator(np.random.Philox(key=np.array([seed, block], dtype=np.uint64)))


def block_count(n):
  return (n + BLOCK_ROUNDS - 1) // BLOCK_ROUNDS


class RoundRecord(object):
  __slots__ = ("i", "xa", "xb", "ya", "yb", "role")

  def __init__(self, i, xa, xb, ya, yb, role=None):
    self.i = i
    self.xa = xa
    self.xb = xb
    self.ya = ya
    self.yb = yb
    self.role = role

  def to_dict(self):
    return OrderedDict([
      ("i", self.i),
      ("xA", self.xa),
      ("xB", self.xb),
      ("yA", self.ya),
      ("yB", self.yb),
      ("role", Role.to_str(self.role)),
    ])

  def __eq__(self, other):
    return all(getattr(self, s) == getattr(other, s) for s in self.__slots__)

  def __ne__(self, other):
    return not self == other

  def __repr__(self):
    return "RoundRecord(i=%d, x=(%d, %d), y=(%d, %d), role=%s)" % (
      self.i, self.xa, self.xb, self.ya, self.yb, Role.to_str(self.role))


class Transcript(object):
  """ columnar rounds: parallel int arrays i, xa, xb, ya, yb, role """

  COLUMNS = ("i", "xa", "xb", "ya", "yb", "role")

  def __init__(self, i, xa, xb, ya, yb, role):
    columns = [np.asarray(c, dtype=np.int64) for c in (i, xa, xb, ya, yb, role)]
    if len(set(len(c) for c in columns)) != 1:
      raise InputDomainError("transcript columns differ in length")
    self.i, self.xa, self.xb, self.ya, self.yb, self.role = columns

  @classmethod
  def empty(cls):
    return cls(*[[] for _ in cls.COLUMNS])

  @classmethod
  def from_records(cls, records):
    records = list(records)
    columns = [[getattr(r, name) for r in records] for name in cls.COLUMNS[:-1]]
    roles = [Role.KEY if r.role is None else r.role for r in records]
    return cls(*(columns + [roles]))

  @classmethod
  def concatenate(cls, parts):
    parts = list(parts)
    if not parts:
      return cls.empty()
    return cls(*[np.concatenate([getattr(p, name) for p in parts]) for name in cls.COLUMNS])

  def select(self, mask):
    return Transcript(*[getattr(self, name)[mask] for name in self.COLUMNS])

  def with_roles(self, role):
    return Transcript(self.i, self.xa, self.xb, self.ya, self.yb, role)

  def of_role(self, role):
    return self.select(self.role == role)

  def records(self):
    for values in zip(*[getattr(self, name).tolist() for name in self.COLUMNS]):
      yield RoundRecord(*values)

  def __len__(self):
    return len(self.i)

  def __iter__(self):
    return self.records()


Partition = namedtuple("Partition", ("key", "j3_test", "s_test"))


def assign_roles(i, xa, xb, variant, m):
  """
  x_A != x_B -> j3_test; equal bases with variant B and i = 0 (mod m) -> s_test;
  other equal-basis rounds -> key
  """
  i, xa, xb = np.asarray(i), np.asarray(xa), np.asarray(xb)
  roles = np.full(len(i), Role.KEY, dtype=np.int64)
  roles[xa != xb] = Role.J3_TEST
  if variant == Variant.B:
    roles[(xa == xb) & (i % m == 0)] = Role.S_TEST
  return roles


def sift(records, variant, m=None):
  if not isinstance(records, Transcript):
    records = Transcript.from_records(records)
  if variant == Variant.B and (m is None or m < 2):
    raise InputDomainError("variant B needs a sacrifice period m >= 2")

  tagged = records.with_roles(assign_roles(records.i, records.xa, records.xb, variant, m))
  return Partition(
    key=tagged.of_role(Role.KEY),
    j3_test=tagged.of_role(Role.J3_TEST),
    s_test=tagged.of_role(Role.S_TEST),
  )


def sample_block(config, device, block):
  """ rounds block * BLOCK_ROUNDS + 1 .. of the run, with roles assigned """
  start = block * BLOCK_ROUNDS
  count = min(BLOCK_ROUNDS, config.n - start)
  rng = block_rng(config.seed, block)

  xa = rng.choice(len(INPUTS), size=count, p=config.input_distribution)
  xb = rng.choice(len(INPUTS), size=count, p=config.input_distribution)
  ya, yb = device.sample(xa, xb, rng.random(count))

  i = np.arange(start + 1, start + count + 1, dtype=np.int64)
  return Transcript(i, xa, xb, ya, yb, assign_roles(i, xa, xb, config.variant, config.m))

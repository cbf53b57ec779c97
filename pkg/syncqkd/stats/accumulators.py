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
Accumulators that build outcome counts per input pair from sampled rounds.
Counts are integers added cell by cell, so the totals do not depend on the
order in which blocks of rounds arrive.
'''

from collections import OrderedDict
import itertools

import numpy as np

from syncqkd.base.util import INPUTS, OUTPUTS


class RoundCountsAccumulator(object):
  """ counts[x_A, x_B, y_A, y_B] """

  SHAPE = (len(INPUTS), len(INPUTS), len(OUTPUTS), len(OUTPUTS))

  def __init__(self):
    self.counts = np.zeros(self.SHAPE, dtype=np.int64)

  @classmethod
  def from_rounds(cls, rounds):
    """ anything with xa, xb, ya, yb columns (a Transcript) or an iterable of records """
    acc = cls()
    if isinstance(getattr(rounds, "xa", None), np.ndarray):
      acc.update_round_stats(rounds.xa, rounds.xb, rounds.ya, rounds.yb)
    else:
      for record in rounds:
        acc.counts[record.xa, record.xb, record.ya, record.yb] += 1
    return acc

  def update_round_stats(self, xa, xb, ya, yb):
    np.add.at(self.counts, (np.asarray(xa), np.asarray(xb), np.asarray(ya), np.asarray(yb)), 1)

  def merge(self, other):
    self.counts += other.counts
    return self

  def total(self, xa, xb):
    return int(self.counts[xa, xb].sum())

  def count(self, xa, xb, ya, yb):
    return int(self.counts[xa, xb, ya, yb])

  def mismatches(self, xa, xb):
    return int(self.counts[xa, xb, 0, 1] + self.counts[xa, xb, 1, 0])

  def pair_totals(self):
    """ 3x3 nested list of rounds per input pair """
    return self.counts.sum(axis=(2, 3)).tolist()

  def cell_counts(self, pairs):
    return OrderedDict(("%d%d" % pair, self.total(*pair)) for pair in pairs)

  def __len__(self):
    return int(self.counts.sum())


CROSS_PAIRS = tuple(itertools.permutations(INPUTS, 2))
EQUAL_PAIRS = tuple((x, x) for x in INPUTS)

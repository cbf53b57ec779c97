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
Runs a full protocol: sampling, sifting, estimation and the accept/abort
decision.
'''

from collections import OrderedDict

import numpy as np

from syncqkd.base.process import run_parallel
from syncqkd.stats.accumulators import CROSS_PAIRS, EQUAL_PAIRS, RoundCountsAccumulator

from .config import Role, Variant
from .estimators import Verdict, accept, estimate_j3, estimate_s
from .privacy import bits_to_hex, privacy_amplify
from .rounds import Partition, Transcript, block_count, sample_block

from twitter.common import log


class ProtocolOutcome(object):
  def __init__(self, config, transcript, partition, j3_hat, s_hat, verdict):
    self.config = config
    self.transcript = transcript
    self.partition = partition
    self.j3_hat = j3_hat
    self.s_hat = s_hat
    self.verdict = verdict

    key = partition.key
    self.raw_key = key.ya.astype(np.uint8)
    self.key_mismatches = int(np.count_nonzero(key.ya != key.yb))

    self.pair_counts = RoundCountsAccumulator.from_rounds(transcript).pair_totals()
    self.j3_cell_counts = RoundCountsAccumulator.from_rounds(partition.j3_test).cell_counts(CROSS_PAIRS)
    self.s_cell_counts = RoundCountsAccumulator.from_rounds(partition.s_test).cell_counts(EQUAL_PAIRS)

  @property
  def accepted(self):
    return self.verdict == Verdict.ACCEPTED

  @property
  def key_length(self):
    return len(self.raw_key)

  def key_hex(self):
    return bits_to_hex(self.raw_key)

  def amplified_key(self, out_len, seed):
    return privacy_amplify(self.raw_key, out_len, seed)

  def to_dict(self):
    return OrderedDict([
      ("config", self.config.to_dict()),
      ("verdict", self.verdict),
      ("j3_hat", self.j3_hat),
      ("s_hat", self.s_hat),
      ("rounds", len(self.transcript)),
      ("pair_counts", self.pair_counts),
      ("j3_cell_counts", self.j3_cell_counts),
      ("s_cell_counts", self.s_cell_counts),
      ("key_length", self.key_length),
      ("key_mismatches", self.key_mismatches),
      ("key", self.key_hex()),
    ])


def run_protocol(config, device, threads=None):
  config.validate()
  blocks = block_count(config.n)
  log.info("running protocol %s: n=%d seed=%d device=%s (%d blocks)" % (
    config.variant, config.n, config.seed, device.name, blocks))

  parts = run_parallel(lambda block: sample_block(config, device, block), range(blocks), threads)
  transcript = Transcript.concatenate(parts)
  partition = Partition(
    key=transcript.of_role(Role.KEY),
    j3_test=transcript.of_role(Role.J3_TEST),
    s_test=transcript.of_role(Role.S_TEST),
  )

  j3_hat = estimate_j3(partition.j3_test)
  s_hat = estimate_s(partition.s_test) if config.variant == Variant.B else None
  verdict = accept(j3_hat, s_hat, config)

  outcome = ProtocolOutcome(config, transcript, partition, j3_hat, s_hat, verdict)
  if outcome.key_mismatches:
    log.warn("%d key rounds with y_A != y_B" % outcome.key_mismatches)
    if config.abort_on_mismatch:
      outcome.verdict = Verdict.ABORTED

  log.info("protocol %s %s: J3=%.6f S=%s key=%d bits" % (
    config.variant, outcome.verdict, j3_hat, "-" if s_hat is None else "%.6f" % s_hat,
    outcome.key_length))
  return outcome

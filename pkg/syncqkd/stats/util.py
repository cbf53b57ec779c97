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

from collections import OrderedDict


def percentile(values, percent, key=lambda k: k):
  """
  get percentile for sorted values (https://en.wikipedia.org/wiki/Percentile)
  (roughly Linear Interpolation Between Closest Ranks)
  """

  assert isinstance(values, (list, tuple))
  assert 0 <= percent <= 1

  idx = (len(values) - 1) * percent
  floor = math.floor(idx)
  ceil = math.ceil(idx)
  if floor == ceil:
    return key(values[int(idx)])

  a = key(values[int(floor)]) * (ceil - idx)
  b = key(values[int(ceil)]) * (idx - floor)

  return a + b


def summarize(values):
  """ min / median / p95 / max of a non-empty sample """
  values = sorted(values)
  return OrderedDict([
    ("min", values[0]),
    ("median", percentile(values, 0.5)),
    ("p95", percentile(values, 0.95)),
    ("max", values[-1]),
  ])

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
Devices stand in for the parties' shared entangled pairs: given both bases
they emit a pair of output bits distributed according to a correlation table.
'''

from abc import ABCMeta, abstractmethod
import json

import numpy as np
import six

from syncqkd.base.util import DeviceParseError, Error, InputDomainError
from syncqkd.game.correlations import Correlation, ideal_correlation, uniform_correlation

from twitter.common import log


@six.add_metaclass(ABCMeta)
class Device(object):
  def __init__(self, name):
    self.name = name

  @abstractmethod
  def sample(self, xa, xb, uniforms):  # pragma: no cover
    """
    Outputs for a batch of rounds
    :param xa, xb: int arrays of bases
    :param uniforms: one uniform draw in [0, 1) per round
    :return: (ya, yb) int arrays
    """
    pass


class TableDevice(Device):
  """ inverse-CDF sampling over the outcomes (0,0), (0,1), (1,0), (1,1) """

  def __init__(self, correlation, name="table"):
    super(TableDevice, self).__init__(name)
    self.correlation = correlation
    outcomes = correlation.table.reshape(4, 3, 3).transpose(1, 2, 0)  # [x_A, x_B, outcome]
    self._cdf = np.cumsum(outcomes, axis=2)[:, :, :3]
    # last outcome with p > 0 per basis pair
    self._last = 3 - np.argmax(outcomes[:, :, ::-1] > 0, axis=2)

  def sample(self, xa, xb, uniforms):
    # outcome k covers [cdf[k-1], cdf[k]), empty when p = 0; draws past the
    # rounded total of the leading cells fall to the last nonzero outcome
    outcome = (uniforms[:, np.newaxis] >= self._cdf[xa, xb]).sum(axis=1)
    outcome = np.minimum(outcome, self._last[xa, xb])
    return outcome // 2, outcome % 2

  def __repr__(self):
    return "TableDevice(%s)" % self.name


BUILTIN = {
  "ideal": ideal_correlation,
  "uniform": uniform_correlation,
}


def _line_of(text, token):
  for lineno, line in enumerate(text.splitlines(), 1):
    if token in line:
      return lineno
  return 1


def parse_device_table(text, path="<string>"):
  """ a JSON object {"p": [36 numbers]} or a bare array of 36 numbers """
  try:
    doc = json.loads(text)
  except ValueError as ex:
    raise DeviceParseError(path, getattr(ex, "lineno", 1), getattr(ex, "msg", str(ex)))

  if isinstance(doc, dict):
    if "p" not in doc:
      raise DeviceParseError(path, 1, 'missing field "p"')
    values, line = doc["p"], _line_of(text, '"p"')
  else:
    values, line = doc, 1

  if not isinstance(values, list) or not all(
      isinstance(v, (int, float)) and not isinstance(v, bool) for v in values):
    raise DeviceParseError(path, line, "expected an array of numbers")

  try:
    return Correlation.from_flat(values)
  except Error as ex:
    raise DeviceParseError(path, line, str(ex))


def load_device(source):
  """
  Loads a device from a built-in name (ideal, uniform) or a JSON table file
  """
  if source in BUILTIN:
    return TableDevice(BUILTIN[source](), source)

  try:
    with open(source) as fp:
      text = fp.read()
  except (IOError, OSError) as ex:
    raise InputDomainError("cannot read device table %s: %s" % (source, ex))

  correlation = parse_device_table(text, source)
  log.info("loaded device table from %s" % source)
  return TableDevice(correlation, source)

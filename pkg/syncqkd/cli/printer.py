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
Output for the command-line tools: JSON documents (stable key order, floats at
17 significant digits), tabulated summaries, JSON-lines transcripts and
two-column curve data.
'''

from collections import OrderedDict
import json
import sys

from syncqkd import __version__

from tabulate import tabulate

import colors


def float_text(value):
  """ 17 significant digits; exact on re-parse and always a JSON float """
  if value != value:
    return "NaN"
  if value in (float("inf"), float("-inf")):
    return "Infinity" if value > 0 else "-Infinity"
  text = "%.17g" % value
  if not any(c in text for c in ".en"):
    text += ".0"
  return text


class FixedDigitsEncoder(json.JSONEncoder):
  """ the stdlib encoder with floats written by float_text """

  def iterencode(self, o, _one_shot=False):
    indent = self.indent
    if isinstance(indent, int):
      indent = " " * indent
    encoder = json.encoder.encode_basestring_ascii if self.ensure_ascii else json.encoder.encode_basestring
    return json.encoder._make_iterencode(
      {} if self.check_circular else None, self.default, encoder, indent, float_text,
      self.key_separator, self.item_separator, self.sort_keys, self.skipkeys, _one_shot)(o, 0)


def to_json(payload):
  return json.dumps(payload, indent=2, cls=FixedDigitsEncoder) + "\n"


class RunManifest(object):
  """ everything needed to reproduce a command's output """

  def __init__(self, command, parameters, seed=None, outputs=()):
    self.command = command
    self.parameters = parameters
    self.seed = seed
    self.version = __version__
    self.outputs = list(outputs)

  @classmethod
  def from_options(cls, command, option_table, options):
    parameters = OrderedDict()
    for _, kwargs in option_table:
      dest = kwargs["dest"]
      if dest in ("version", "colors", "format"):
        continue
      parameters[dest] = getattr(options, dest)
    outputs = [getattr(options, name) for name in ("out", "transcript") if getattr(options, name, None)]
    return cls(command, parameters, parameters.get("seed"), outputs)

  def to_dict(self):
    return OrderedDict([
      ("command", self.command),
      ("parameters", self.parameters),
      ("seed", self.seed),
      ("version", self.version),
      ("outputs", self.outputs),
    ])


class Printer(object):
  """ writes one command's results as JSON or as tables """

  def __init__(self, fmt="json", colors=False, output=sys.stdout):
    self.fmt = fmt
    self._colors = colors
    self._output = output

  @property
  def wants_json(self):
    return self.fmt == "json"

  def json(self, payload):
    self._output.write(to_json(payload))
    self._output.flush()

  def table(self, rows, headers, title=None):
    if title:
      self._output.write("%s\n" % title)
    self._output.write("%s\n\n" % tabulate(rows, headers=headers, floatfmt=".9g"))

  def line(self, text):
    self._output.write("%s\n" % text)

  def verdict(self, good, text):
    if self._colors:
      text = colors.green(text) if good else colors.red(text)
    self.line(text)
    self._output.flush()


def write_transcript(transcript, fp):
  """ one RoundRecord per line: i, xA, xB, yA, yB, role """
  for record in transcript.records():
    fp.write(json.dumps(record.to_dict(), separators=(",", ":")) + "\n")


def write_curve(curve, fp):
  fp.write(curve.to_data())


def write_file(path, writer, *args):
  with open(path, "w") as fp:
    writer(*(args + (fp,)))

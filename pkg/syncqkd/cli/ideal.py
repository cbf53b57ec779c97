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
Prints the exact statistics of the ideal measurements: the correlation table,
its bias form, the four Bell functionals and the asynchronicity.
'''

from collections import OrderedDict
import itertools
import sys

from syncqkd import __version__
from syncqkd.base.hilbert import ideal_pvms
from syncqkd.base.util import INPUTS, OUTPUTS
from syncqkd.game.bell import classify
from syncqkd.game.correlations import (
  asynchronicity,
  ideal_correlation,
  to_bias_form,
  tracial_correlation,
)

from .printer import Printer, RunManifest, to_json, write_file

from twitter.common.log.options import LogOptions


OPTIONS = [
  (('--format',), dict(dest='format', default='json', type=str, metavar='<fmt>',
                       help='Output format: json or table')),
  (('-c', '--colors'), dict(dest='colors', default=False, action='store_true',
                            help='Color the table output')),
  (('--out',), dict(dest='out', default=None, type=str, metavar='<path>',
                    help='Write the JSON document to this file instead of stdout')),
  (('--version',), dict(dest='version', default=False, action='store_true')),
]


def setup():
  from twitter.common import app

  LogOptions.set_stderr_log_level('NONE')

  for args, kwargs in OPTIONS:
    app.add_option(*args, **kwargs)


def validate_format(fmt):
  if fmt not in ("json", "table"):
    sys.stderr.write("Unknown value for --format, use 'json' or 'table'.\n")
    sys.exit(1)


def ideal_payload(options):
  correlation = ideal_correlation()
  tracial = tracial_correlation(ideal_pvms())
  s, per_input = asynchronicity(correlation)

  return OrderedDict([
    ("manifest", RunManifest.from_options("ideal", OPTIONS, options).to_dict()),
    ("p", correlation.flat()),
    ("bias_form", to_bias_form(correlation).to_dict()),
    ("bell", classify(correlation).to_dict()),
    ("S", s),
    ("S_x", list(per_input)),
    ("tracial_max_deviation", max(abs(a - b) for a, b in zip(correlation.flat(), tracial.flat()))),
  ])


def print_tables(payload, printer):
  pairs = list(itertools.product(INPUTS, INPUTS))
  correlation = ideal_correlation()
  rows = [["%d%d" % (ya, yb)] + [correlation.prob(ya, yb, xa, xb) for xa, xb in pairs]
          for ya, yb in itertools.product(OUTPUTS, OUTPUTS)]
  printer.table(rows, ["y\\x"] + ["%d%d" % pair for pair in pairs], "p(yA, yB | xA, xB)")

  bell = payload["bell"]
  printer.table([["J_%d" % i, v] for i, v in enumerate(bell["J"])], ["functional", "value"], "Bell functionals")
  printer.line("S = %s" % payload["S"])
  printer.verdict(not bell["classical"], "classical: %s" % str(bell["classical"]).lower())


def main(_, options):

  if options.version:
    sys.stdout.write("%s\n" % __version__)
    sys.exit(0)

  sys.exit(run(options))


def run(options, output=sys.stdout):
  validate_format(options.format)
  payload = ideal_payload(options)

  if options.out:
    write_file(options.out, lambda fp: fp.write(to_json(payload)))

  printer = Printer(options.format, options.colors, output)
  if printer.wants_json:
    if not options.out:
      printer.json(payload)
  else:
    print_tables(payload, printer)

  return 0


if __name__ == '__main__':
  from twitter.common import app
  setup()
  app.main()

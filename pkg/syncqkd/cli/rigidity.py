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
Checks the rigidity bounds on one two-projections form or on a randomized
sweep. Exit code: 0 when every bound holds, 2 when a margin is negative, 1 on
usage errors.
'''

from collections import OrderedDict
import sys

from syncqkd import __version__
from syncqkd.base.util import InputDomainError, check_seed
from syncqkd.rigidity.two_projections import TwoProjectionForm, sweep, verify_main_bound

from .printer import Printer, RunManifest, to_json, write_file

from twitter.common.log.options import LogOptions


EXIT_PASSED = 0
EXIT_ERROR = 1
EXIT_VIOLATED = 2


OPTIONS = [
  (('--angles',), dict(dest='angles', default='', type=str, metavar='<t1,t2,..>',
                       help='Block angles in radians, each within pi/6 of 2pi/3')),
  (('--l00',), dict(dest='l00', default=0, type=int, metavar='<dim>', help='Dimension of L_00')),
  (('--l01',), dict(dest='l01', default=0, type=int, metavar='<dim>', help='Dimension of L_01')),
  (('--l10',), dict(dest='l10', default=0, type=int, metavar='<dim>', help='Dimension of L_10')),
  (('--l11',), dict(dest='l11', default=0, type=int, metavar='<dim>', help='Dimension of L_11')),
  (('--m2-angles',), dict(dest='m2_angles', default='', type=str, metavar='<a1,a2,..>',
                          help='Reflection angle of M_2 on each block (default: the ideal -4pi/3)')),
  (('--sweep',), dict(dest='sweep', default=0, type=int, metavar='<count>',
                      help='Verify this many random forms instead of a single one')),
  (('--seed',), dict(dest='seed', default=0, type=int, metavar='<seed>',
                     help='Seed for the random forms (sweep mode)')),
  (('--max-blocks',), dict(dest='max_blocks', default=50, type=int, metavar='<k>',
                           help='Largest number of blocks in a random form (sweep mode)')),
  (('--mixtures',), dict(dest='mixtures', default=0, type=int, metavar='<count>',
                         help='Also verify this many random convex mixtures of the swept forms')),
  (('--threads',), dict(dest='threads', default=0, type=int, metavar='<n>',
                        help='Worker threads (default: $SYNCQKD_THREADS or the cpu count)')),
  (('--format',), dict(dest='format', default='json', type=str, metavar='<fmt>',
                       help='Output format: json or table')),
  (('-c', '--colors'), dict(dest='colors', default=False, action='store_true',
                            help='Color the verdict')),
  (('--out',), dict(dest='out', default=None, type=str, metavar='<path>',
                    help='Write the JSON document to this file instead of stdout')),
  (('--version',), dict(dest='version', default=False, action='store_true')),
]


def setup():
  from twitter.common import app

  LogOptions.set_stderr_log_level('NONE')

  for args, kwargs in OPTIONS:
    app.add_option(*args, **kwargs)


def usage_error(message):
  sys.stderr.write("%s\n" % message)
  sys.exit(EXIT_ERROR)


def validate_format(fmt):
  if fmt not in ("json", "table"):
    usage_error("Unknown value for --format, use 'json' or 'table'.")


def parse_angles(text, flag):
  if not text:
    return []
  try:
    return [float(a) for a in text.split(",")]
  except ValueError:
    usage_error("%s takes comma-separated radians, got %r." % (flag, text))


def build_form(options):
  m2_angles = parse_angles(options.m2_angles, "--m2-angles") or None
  try:
    return TwoProjectionForm(
      parse_angles(options.angles, "--angles"),
      options.l00, options.l01, options.l10, options.l11,
      m2_angles=m2_angles)
  except InputDomainError as ex:
    usage_error("%s." % ex)


def print_report(report, printer):
  printer.table([
    ["d", report.d],
    ["J3", report.j3],
    ["lambda", report.lam],
    ["identity residual", report.identity_residual],
  ], ["", "value"])
  printer.table(
    [[name, getattr(report, name), report.limits[name], report.margins[name]] for name in report.BOUNDS],
    ["quantity", "value", "bound", "margin"])
  printer.verdict(report.passed, "all bounds hold" if report.passed else "violated: %s" % ", ".join(report.failures))


def print_summary(summary, printer):
  printer.table(
    [[name, margin] for name, margin in summary.worst_margins.items()],
    ["bound", "worst margin"], "%d forms (seed %d)" % (summary.forms, summary.seed))
  if summary.mixtures:
    printer.table(
      [[name, margin] for name, margin in summary.worst_mixture_margins.items()],
      ["bound", "worst margin"], "%d mixtures" % summary.mixtures)
  printer.verdict(summary.passed, "%d violations" % (summary.violations + summary.mixture_violations))


def main(_, options):

  if options.version:
    sys.stdout.write("%s\n" % __version__)
    sys.exit(0)

  sys.exit(run(options))


def run(options, output=sys.stdout):
  validate_format(options.format)
  if options.sweep < 0 or options.max_blocks < 1 or options.mixtures < 0:
    usage_error("--sweep and --mixtures must be >= 0 and --max-blocks >= 1.")
  if options.mixtures and not options.sweep:
    usage_error("--mixtures needs --sweep.")
  try:
    check_seed(options.seed)
  except InputDomainError as ex:
    usage_error("--seed: %s." % ex)

  if options.sweep:
    result = sweep(options.sweep, options.seed, options.max_blocks, options.threads, options.mixtures)
  else:
    result = verify_main_bound(build_form(options))

  payload = OrderedDict([("manifest", RunManifest.from_options("rigidity", OPTIONS, options).to_dict())])
  payload.update(result.to_dict())

  if options.out:
    write_file(options.out, lambda fp: fp.write(to_json(payload)))

  printer = Printer(options.format, options.colors, output)
  if printer.wants_json:
    if not options.out:
      printer.json(payload)
  elif options.sweep:
    print_summary(result, printer)
  else:
    print_report(result, printer)

  return EXIT_PASSED if result.passed else EXIT_VIOLATED


if __name__ == '__main__':
  from twitter.common import app
  setup()
  app.main()

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
Adversary analysis. Point mode prints the strategy statistics Eve needs at a
given uncertainty together with both thresholds; curve mode tabulates the
threshold over a grid of mu as two-column plot data.
'''

from collections import OrderedDict
import sys

from syncqkd import __version__
from syncqkd.adversary.eve import (
  EPSILON_LIMIT,
  EPSILON_TOL,
  epsilon_threshold_bisect,
  feasibility_curve,
  invert_stats,
  thresholds,
)
from syncqkd.base.util import InputDomainError, NoThreshold

from .printer import Printer, RunManifest, to_json, write_curve, write_file

from twitter.common import log
from twitter.common.log.options import LogOptions


OPTIONS = [
  (('--epsilon',), dict(dest='epsilon', default=None, type=float, metavar='<epsilon>',
                        help="Eve's basis uncertainty, in [0, 2/3]")),
  (('--lambda',), dict(dest='lam', default=0.125, type=float, metavar='<lambda>',
                       help='Observed J3 = -1/8 + lambda, lambda in [0, 1/8]')),
  (('--mu',), dict(dest='mu', default=0.05, type=float, metavar='<mu>',
                   help='Observed asynchronicity')),
  (('--delta',), dict(dest='delta', default=0.0, type=float, metavar='<delta>',
                      help='Asynchronicity Eve must keep in her own strategy')),
  (('--curve',), dict(dest='curve', default=False, action='store_true',
                      help='Tabulate the threshold over mu in [0, --mu-max]')),
  (('--mu-max',), dict(dest='mu_max', default=0.05, type=float, metavar='<mu>',
                       help='Upper end of the mu grid (curve mode)')),
  (('--step',), dict(dest='step', default=0.005, type=float, metavar='<step>',
                     help='Spacing of the mu grid (curve mode)')),
  (('--out',), dict(dest='out', default=None, type=str, metavar='<path>',
                    help='Write the result (JSON, or curve data) to this file')),
  (('--version',), dict(dest='version', default=False, action='store_true')),
]


def setup():
  from twitter.common import app

  LogOptions.set_stderr_log_level('NONE')

  for args, kwargs in OPTIONS:
    app.add_option(*args, **kwargs)


def usage_error(message):
  sys.stderr.write("%s\n" % message)
  sys.exit(1)


def validate_epsilon(epsilon):
  if epsilon is not None and not 0 <= epsilon <= EPSILON_LIMIT + EPSILON_TOL:
    usage_error("--epsilon must lie in [0, 2/3].")


def point_payload(options):
  result = thresholds(options.lam, options.mu, options.delta)

  strategy = None
  if options.epsilon is not None:
    try:
      strategy = invert_stats(options.lam, options.mu, options.epsilon).to_dict()
    except NoThreshold as ex:
      log.warn("%s" % ex)

  try:
    bisected = epsilon_threshold_bisect(options.delta, options.lam, options.mu)
  except NoThreshold:
    bisected = None

  payload = OrderedDict([("manifest", RunManifest.from_options("eve", OPTIONS, options).to_dict())])
  payload["epsilon"] = options.epsilon
  payload["eve_stats"] = strategy
  payload.update(result.to_dict())
  payload["epsilon_bisect"] = bisected
  payload["certainty"] = None if result.eps_max is None else 1 - result.eps_max
  return payload


def main(_, options):

  if options.version:
    sys.stdout.write("%s\n" % __version__)
    sys.exit(0)

  sys.exit(run(options))


def run(options, output=sys.stdout):
  validate_epsilon(options.epsilon)

  try:
    if options.curve:
      curve = feasibility_curve(options.lam, options.mu_max, options.step, options.delta)
    else:
      payload = point_payload(options)
  except (InputDomainError, NoThreshold) as ex:
    usage_error("%s." % ex)

  printer = Printer("json", False, output)

  if options.curve:
    if options.out:
      write_file(options.out, write_curve, curve)
      manifest = RunManifest.from_options("eve", OPTIONS, options).to_dict()
      printer.json(OrderedDict([("manifest", manifest), ("points", len(curve)), ("monotone", curve.monotone)]))
    else:
      write_curve(curve, output)
  elif options.out:
    write_file(options.out, lambda fp: fp.write(to_json(payload)))
  else:
    printer.json(payload)

  return 0


if __name__ == '__main__':
  from twitter.common import app
  setup()
  app.main()

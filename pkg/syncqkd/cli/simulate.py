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
Runs protocol A or B against a simulated device and reports the estimates,
the verdict and the sifted key. Exit code: 0 accepted, 2 aborted, 1 on
usage or estimation errors.
'''

from collections import OrderedDict
import sys

from syncqkd import __version__
from syncqkd.base.util import DeviceParseError, EstimationUndefined, InputDomainError
from syncqkd.protocol.config import ProtocolConfig, Variant
from syncqkd.protocol.device import load_device
from syncqkd.protocol.privacy import bits_to_hex
from syncqkd.protocol.runner import run_protocol

from .printer import Printer, RunManifest, to_json, write_file, write_transcript

from twitter.common import log
from twitter.common.log.options import LogOptions


EXIT_ACCEPTED = 0
EXIT_ERROR = 1
EXIT_ABORTED = 2


OPTIONS = [
  (('--protocol',), dict(dest='protocol', default='A', type=str, metavar='<A|B>',
                         help='Protocol variant: A (J3 test) or B (J3 and asynchronicity tests)')),
  (('--n',), dict(dest='n', default=100000, type=int, metavar='<rounds>',
                  help='Number of rounds')),
  (('--m',), dict(dest='m', default=10, type=int, metavar='<period>',
                  help='Sacrifice period for protocol B (>= 2)')),
  (('--lambda',), dict(dest='lam', default=0.01, type=float, metavar='<lambda>',
                       help='Tolerance on |J3 + 1/8|, in [0, 1/8]')),
  (('--mu',), dict(dest='mu', default=0.01, type=float, metavar='<mu>',
                   help='Tolerance on the asynchronicity (protocol B)')),
  (('--seed',), dict(dest='seed', default=0, type=int, metavar='<seed>',
                     help='64-bit seed for the round generator')),
  (('--device',), dict(dest='device', default='ideal', type=str, metavar='<ideal|uniform|path>',
                       help='Built-in device or a JSON table file {"p": [36 numbers]}')),
  (('--input-distribution',), dict(dest='input_distribution', default=None, type=str, metavar='<p0,p1,p2>',
                                   help='Basis distribution (default: uniform)')),
  (('--abort-on-mismatch',), dict(dest='abort_on_mismatch', default=False, action='store_true',
                                  help='Abort when any key round has y_A != y_B')),
  (('--privacy-length',), dict(dest='privacy_length', default=0, type=int, metavar='<bits>',
                               help='Also hash the raw key down to this many bits')),
  (('--threads',), dict(dest='threads', default=0, type=int, metavar='<n>',
                        help='Worker threads (default: $SYNCQKD_THREADS or the cpu count)')),
  (('--transcript',), dict(dest='transcript', default=None, type=str, metavar='<path>',
                           help='Write every round as JSON lines to this file')),
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


def parse_distribution(text):
  if text is None:
    return None
  try:
    return tuple(float(p) for p in text.split(","))
  except ValueError:
    usage_error("--input-distribution takes three comma-separated probabilities, got %r." % text)


def build_config(options):
  config = ProtocolConfig(options.protocol, options.n, options.lam, options.seed)
  config.m = options.m
  config.mu = options.mu
  config.abort_on_mismatch = options.abort_on_mismatch

  distribution = parse_distribution(options.input_distribution)
  if distribution is not None:
    config.input_distribution = distribution

  try:
    return config.validate()
  except InputDomainError as ex:
    usage_error("Invalid configuration: %s." % ex)


def print_tables(outcome, printer):
  printer.table([
    ["protocol", outcome.config.variant],
    ["rounds", len(outcome.transcript)],
    ["J3 estimate", outcome.j3_hat],
    ["S estimate", "-" if outcome.s_hat is None else outcome.s_hat],
    ["key bits", outcome.key_length],
    ["key mismatches", outcome.key_mismatches],
  ], ["", "value"])
  printer.table(
    [[pair, count] for pair, count in outcome.j3_cell_counts.items()],
    ["bases", "j3_test rounds"])
  printer.verdict(outcome.accepted, outcome.verdict)


def main(_, options):

  if options.version:
    sys.stdout.write("%s\n" % __version__)
    sys.exit(0)

  sys.exit(run(options))


def run(options, output=sys.stdout):
  validate_format(options.format)
  if Variant.invalid(options.protocol):
    usage_error("Unknown value for --protocol, use 'A' or 'B'.")
  config = build_config(options)

  try:
    device = load_device(options.device)
  except (DeviceParseError, InputDomainError) as ex:
    sys.stderr.write("%s\n" % ex)
    return EXIT_ERROR

  try:
    outcome = run_protocol(config, device, options.threads)
  except EstimationUndefined as ex:
    sys.stderr.write("%s\n" % ex)
    return EXIT_ERROR

  payload = OrderedDict([("manifest", RunManifest.from_options("simulate", OPTIONS, options).to_dict())])
  payload.update(outcome.to_dict())

  if options.privacy_length:
    try:
      amplified = outcome.amplified_key(options.privacy_length, options.seed)
    except InputDomainError as ex:
      sys.stderr.write("--privacy-length: %s\n" % ex)
      return EXIT_ERROR
    payload["amplified_key_length"] = len(amplified)
    payload["amplified_key"] = bits_to_hex(amplified)

  if options.transcript:
    write_file(options.transcript, write_transcript, outcome.transcript)
    log.info("wrote %d rounds to %s" % (len(outcome.transcript), options.transcript))

  if options.out:
    write_file(options.out, lambda fp: fp.write(to_json(payload)))

  printer = Printer(options.format, options.colors, output)
  if printer.wants_json:
    if not options.out:
      printer.json(payload)
  else:
    print_tables(outcome, printer)

  return EXIT_ACCEPTED if outcome.accepted else EXIT_ABORTED


if __name__ == '__main__':
  from twitter.common import app
  setup()
  app.main()

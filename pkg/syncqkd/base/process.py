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


""" Process helpers: worker-count resolution and deterministic thread fan-out """

import os
from threading import Lock

from .util import InputDomainError

from twitter.common import log
from twitter.common.exceptions import ExceptionalThread

try:
  import psutil
  HAS_PSUTIL = True
except ImportError:
  HAS_PSUTIL = False


THREADS_ENV = "SYNCQKD_THREADS"


class PsUtilProcessOptions(object):

  def __init__(self):
    self.process = psutil.Process()

  @property
  def cpu_count(self):
    """
    Number of CPUs this process may run on
    :return: an int() >= 1
    """
    try:
      return len(self.process.cpu_affinity()) or 1
    except AttributeError:
      # no affinity support on this platform (e.g.: OS X)
      return psutil.cpu_count() or 1


class DummyProcessOptions(object):
  @property
  def cpu_count(self):  # pragma: no cover
    return 1


ProcessOptions = PsUtilProcessOptions if HAS_PSUTIL else DummyProcessOptions  # pragma: nocover


def default_threads(environ=None):
  """ SYNCQKD_THREADS if set to a positive int, else the usable cpu count """
  environ = os.environ if environ is None else environ
  value = environ.get(THREADS_ENV)
  if value:
    try:
      threads = int(value)
      if threads >= 1:
        return threads
    except ValueError:
      pass
    log.warn("ignoring %s=%r, expected a positive integer" % (THREADS_ENV, value))

  return ProcessOptions().cpu_count


def resolve_threads(threads):
  if threads is None or threads == 0:
    return default_threads()
  if threads < 0:
    raise InputDomainError("thread count must be positive, got %d" % threads)
  return threads


class TaskWorker(ExceptionalThread):
  """ pulls task indices off a shared counter; results land in their own slot """

  def __init__(self, func, items, results, errors, cursor):
    super(TaskWorker, self).__init__()
    self.setDaemon(True)
    self._func = func
    self._items = items
    self._results = results
    self._errors = errors
    self._cursor = cursor

  def run(self):
    while True:
      index = self._cursor.next()
      if index is None:
        break
      try:
        self._results[index] = self._func(self._items[index])
      except Exception as ex:
        log.error("task %d failed: %s" % (index, ex))
        self._errors[index] = ex


class _Cursor(object):
  def __init__(self, size):
    self._lock = Lock()
    self._next = 0
    self._size = size

  def next(self):
    with self._lock:
      if self._next >= self._size:
        return None
      index = self._next
      self._next += 1
      return index


def run_parallel(func, items, threads=None):
  """
  Applies func to every item using up to `threads` workers and returns the
  results in item order, so the output never depends on scheduling. The
  first failure (by item index) is re-raised.
  """
  items = list(items)
  threads = min(resolve_threads(threads), max(len(items), 1))

  if threads == 1:
    return [func(item) for item in items]

  results = [None] * len(items)
  errors = {}
  cursor = _Cursor(len(items))
  workers = [TaskWorker(func, items, results, errors, cursor) for _ in range(threads)]
  for worker in workers:
    worker.start()
  for worker in workers:
    worker.join()

  if errors:
    raise errors[min(errors)]

  return results

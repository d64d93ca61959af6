"""Named thread pools for evaluating independent relation instances.

Pools are created lazily per name and live until ``stop_pool`` or
``stop_pools``. A thread count of 0 means "no pool": callers pass the
``None`` they get back to ``pool_exec`` and the jobs run inline.
"""
import queue
import sys
import time

from threading import Lock
from multiprocessing.pool import ThreadPool

_init_lock = Lock()
_pools = {}


class PoolTimeoutError(Exception):
  pass


class Job(object):
  """A unit of verification work.

  Calling ``run`` evaluates ``func(*args, **kwargs)`` and stores the value in
  ``result``; an exception is captured in ``exception`` instead of being
  raised. ``index`` is the position of the job in its suite and is used to
  put results back in enumeration order.
  """
  __slots__ = (
    'func', 'description', 'index',
    'args', 'kwargs', 'result',
    'exception', 'exception_info',
  )

  def __init__(self, func, description, *args, **kwargs):
    self.func = func
    self.description = description
    self.index = kwargs.pop('index', None)
    self.args = args
    self.kwargs = kwargs
    self.result = None
    self.exception = None
    self.exception_info = None

  def __str__(self):
    return self.description

  def run(self):
    try:
      self.result = self.func(*self.args, **self.kwargs)
    except Exception as e:
      self.exception_info = sys.exc_info()
      self.exception = e
    return self


def get_pool(name='default', thread_count=1):
  "The pool registered under name, created on first use; None for 0 threads"
  if not thread_count:
    return None
  with _init_lock:
    if name not in _pools:
      _pools[name] = ThreadPool(thread_count)
    return _pools[name]


def stop_pool(name='default'):
  with _init_lock:
    _pools.pop(name).close()


def stop_pools():
  with _init_lock:
    while _pools:
      _pools.popitem()[1].close()


def _timed_out(start):
  return PoolTimeoutError('Timed out after %fs' % (time.time() - start))


def pool_exec(pool, jobs, timeout):
  """Run jobs and yield each one once it has finished.

  On a pool the jobs are yielded in completion order; inline they run and
  are yielded in list order. PoolTimeoutError is raised as soon as
  ``timeout`` seconds have passed with jobs still outstanding.
  """
  start = time.time()
  deadline = start + timeout

  if pool is None:
    for job in jobs:
      if time.time() > deadline:
        raise _timed_out(start)
      yield job.run()
    return

  finished = queue.Queue()
  for job in jobs:
    pool.apply_async(Job.run, (job,), callback=finished.put)

  for _ in range(len(jobs)):
    try:
      yield finished.get(True, max(0, deadline - time.time()))
    except queue.Empty:
      raise _timed_out(start)


def ordered_results(pool, jobs, timeout):
  """Run jobs and return their results in job order.

  The first captured exception (in job order) is re-raised once every job
  has finished.
  """
  for i, job in enumerate(jobs):
    job.index = i
  finished = [None] * len(jobs)
  for job in pool_exec(pool, jobs, timeout):
    finished[job.index] = job
  for job in finished:
    if job.exception is not None:
      raise job.exception
  return [job.result for job in finished]

import json
import time

from functools import wraps

from django.http import HttpResponse, HttpResponseNotAllowed

from parafock.logger import log


def jsonEncoder(obj):
  if hasattr(obj, 'toJSON'):
    return obj.toJSON()
  return obj.__dict__


def canonical_dumps(data):
  "Serialize with a stable key order so reruns produce identical bodies"
  return json.dumps(data, sort_keys=True, indent=2, default=jsonEncoder) + '\n'


class Timer(object):
  """Wall-clock timer for a named step; ``stop`` logs the elapsed time."""
  __slots__ = ('msg', 'name', 'start_time')

  def __init__(self, name):
    self.name = name
    self.msg = 'completed in'
    self.start_time = time.time()

  def set_msg(self, msg):
    self.msg = msg

  def elapsed(self):
    return time.time() - self.start_time

  def stop(self):
    log.info('%s :: %s %.6fs' % (self.name, self.msg, self.elapsed()))


class HttpError(Exception):
  def __init__(self, message, status=500):
    super(HttpError, self).__init__(message)
    self.status = status


def jsonResponse(f):
  """Decorate a GET view ``f(request, queryParams)`` returning a document.

  The return value is serialized with ``jsonEncoder`` unless it already is
  an HttpResponse. ValueError (and so every ParafockError) answers 400,
  HttpError its own status, anything else 500 after logging the traceback.
  """
  @wraps(f)
  def wrapped_f(request, *args, **kwargs):
    if request.method != 'GET':
      return HttpResponseNotAllowed(['GET'])
    queryParams = request.GET.copy()
    pretty = bool(queryParams.get('pretty'))
    try:
      data = f(request, queryParams, *args, **kwargs)
    except HttpError as err:
      return _jsonError(str(err), err.status, pretty)
    except ValueError as err:
      return _jsonError(str(err), 400, pretty)
    except Exception as err:
      log.exception('Unhandled error in %s' % f.__name__)
      return _jsonError(str(err), 500, pretty)
    if isinstance(data, HttpResponse):
      return data
    return _jsonBody(data, 200, pretty)

  return wrapped_f


def _jsonBody(data, status, pretty):
  body = json.dumps(data, indent=(2 if pretty else None), sort_keys=True, default=jsonEncoder)
  return HttpResponse(body, content_type='application/json', status=status)


def _jsonError(message, status, pretty):
  return _jsonBody({'error': message}, status, pretty)

from django.conf import settings
from django.http import HttpResponse

from parafock.grammar import parse_orders, parse_state
from parafock.oscillator.config import OscillatorConfig
from parafock.report import documents
from parafock.util import HttpError, jsonResponse


def _int(queryParams, name, default=None):
  value = queryParams.get(name)
  if value is None:
    if default is None:
      raise HttpError('missing parameter: %s' % name, status=400)
    return default
  return int(value)


def _float(queryParams, name, default=1.0):
  return float(queryParams.get(name, default))


def _config(queryParams):
  return OscillatorConfig(
    _int(queryParams, 'p'),
    _float(queryParams, 'hbar'),
    _float(queryParams, 'mass'),
    _float(queryParams, 'omega'),
  )


def _respond(document, queryParams):
  "The JSON document, or one of its tables as CSV with format=csv"
  if queryParams.get('format') != 'csv':
    return document
  name = queryParams.get('table')
  try:
    table = document.table(name) if name else document.tables[0]
  except KeyError:
    raise HttpError('no table named %s' % name, status=404)
  return HttpResponse(table.to_csv(), content_type='text/csv')


@jsonResponse
def verifyView(request, queryParams):
  family = queryParams.get('family')
  if not family:
    raise HttpError('missing parameter: family', status=400)
  document = documents.verify_document(
    family,
    _int(queryParams, 'n'),
    _int(queryParams, 'p', 1),
    queryParams.get('phase', settings.DEFAULT_PHASE_CONVENTION),
  )
  return _respond(document, queryParams)


@jsonResponse
def spectrumView(request, queryParams):
  return _respond(documents.spectrum_document(_config(queryParams)), queryParams)


@jsonResponse
def uncertaintyView(request, queryParams):
  state = parse_state(queryParams.get('state', ''))
  return _respond(documents.uncertainty_document(_config(queryParams), state), queryParams)


@jsonResponse
def measureView(request, queryParams):
  state = parse_state(queryParams.get('state', ''))
  return _respond(documents.measure_document(_config(queryParams), state), queryParams)


@jsonResponse
def limitView(request, queryParams):
  document = documents.limit_document(
    _int(queryParams, 'n'),
    parse_orders(queryParams.get('p', '')),
    _int(queryParams, 'cutoff'),
  )
  return _respond(document, queryParams)

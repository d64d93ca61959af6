from fractions import Fraction

from pyparsing import (
    Group, Literal, Optional, ParseException, Regex, StringEnd, Suppress,
    Word, ZeroOrMore, delimitedList, nums, oneOf
)

from parafock.algebra.scalar import RadicalScalar, ZERO
from parafock.errors import ParafockError


# Literals

sign = oneOf('+ -')

rational = Regex(r'\d+(?:/\d+)?')

number = Regex(r'-?\d+(?:\.\d*)?(?:[eE]-?\d+)?')

## Symbols
leftParen = Literal('(').suppress()
rightParen = Literal(')').suppress()
imagUnit = Literal('i').suppress()
colon = Literal(':').suppress()

# Exact scalars, as rendered by RadicalScalar.__str__:
#   3/2 + 1/2i√5 - √2 + (1-i)√7

complexCoef = Group(
  leftParen + Optional(sign)('reSign') + rational('re') +
  sign('imSign') + Optional(rational)('im') + imagUnit + rightParen
)('complex')

imagCoef = Group(Optional(rational)('im') + imagUnit)('imag')

realCoef = Group(rational('re'))('real')

root = Suppress(Literal('√') | Literal('sqrt')) + Word(nums)('radicand')

coefficient = complexCoef | imagCoef | realCoef

body = (coefficient + Optional(root)) | root

firstTerm = Group(Optional(sign)('sign') + body)('terms*')
signedTerm = Group(sign('sign') + body)('terms*')

scalarExpression = firstTerm + ZeroOrMore(signedTerm) + StringEnd()

# Occupation vectors: 1,1,0
stateExpression = delimitedList(Word(nums)) + StringEnd()

# Time grids: start:stop:step
timeGridExpression = number('start') + colon + number('stop') + colon + number('step') + StringEnd()


def _fraction(text):
  return Fraction(text) if text else Fraction(1)


def _term_value(term):
  negate = term.get('sign') == '-'
  if 'complex' in term:
    c = term['complex']
    re = Fraction(c['re'])
    if c.get('reSign') == '-':
      re = -re
    im = _fraction(c.get('im'))
    if c['imSign'] == '-':
      im = -im
  elif 'imag' in term:
    re, im = Fraction(0), _fraction(term['imag'].get('im'))
  elif 'real' in term:
    re, im = Fraction(term['real']['re']), Fraction(0)
  else:
    re, im = Fraction(1), Fraction(0)
  if negate:
    re, im = -re, -im
  radicand = int(term.get('radicand', 1))
  if radicand == 0:
    return ZERO
  return RadicalScalar({radicand: (re, im)})


def parse_scalar(text):
  try:
    parsed = scalarExpression.parseString(text.strip())
  except ParseException as err:
    raise ParafockError('invalid scalar %r: %s' % (text, err))
  total = ZERO
  for term in parsed['terms']:
    total = total + _term_value(term)
  return total


def parse_state(text):
  try:
    parsed = stateExpression.parseString(text.strip())
  except ParseException as err:
    raise ParafockError('invalid state %r, expected comma-separated occupations: %s' % (text, err))
  return tuple(int(v) for v in parsed)


def parse_time_grid(text):
  """Expand start:stop:step into a list of times, stop included when hit."""
  try:
    parsed = timeGridExpression.parseString(text.strip())
  except ParseException as err:
    raise ParafockError('invalid time grid %r, expected start:stop:step: %s' % (text, err))
  start, stop, step = float(parsed['start']), float(parsed['stop']), float(parsed['step'])
  if step <= 0:
    raise ParafockError('time step must be positive, got %s' % step)
  if stop < start:
    raise ParafockError('time grid stop %s is before start %s' % (stop, start))
  count = int((stop - start) / step + 1e-9) + 1
  return [start + k * step for k in range(count)]


def parse_orders(text):
  "Comma-separated orders of statistics, e.g. 8,16,32,64"
  try:
    parsed = stateExpression.parseString(text.strip())
  except ParseException as err:
    raise ParafockError('invalid order list %r: %s' % (text, err))
  return [int(v) for v in parsed]

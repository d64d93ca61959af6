"""Exact numbers of the form sum(c_r * sqrt(r)).

Each coefficient c_r is a Gaussian rational (a pair of Fractions) and each
radicand r is a square-free positive integer, r = 1 holding the rational
part. Square roots of distinct square-free integers are linearly
independent over Q(i), so the canonical term map is unique and equality is
a plain dictionary comparison.
"""
import math
import numbers

from fractions import Fraction
from functools import lru_cache


_ZERO = Fraction(0)


@lru_cache(maxsize=4096)
def squarefree_split(n):
  """Return (core, root) with n == core * root**2 and core square-free."""
  if n <= 0:
    raise ValueError('radicand must be positive, got %r' % (n,))
  core, root = n, 1
  d = 2
  while d * d <= core:
    while core % (d * d) == 0:
      core //= d * d
      root *= d
    d += 1
  return core, root


@lru_cache(maxsize=4096)
def prime_factors(n):
  factors = []
  d = 2
  while d * d <= n:
    if n % d == 0:
      factors.append(d)
      while n % d == 0:
        n //= d
    d += 1
  if n > 1:
    factors.append(n)
  return tuple(factors)


def _gauss_mul(a, b):
  return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])


def _is_zero_coefficient(c):
  return c[0] == 0 and c[1] == 0


class RadicalScalar(object):
  __slots__ = ('_terms', '_hash')

  def __init__(self, terms=None):
    """Build from a map radicand -> value.

    Values may be ints, Fractions, complex numbers with integral parts or
    (re, im) pairs. Radicands need not be square-free, their square factors
    are moved into the coefficient.
    """
    canonical = {}
    for radicand, value in (terms or {}).items():
      re, im = _coerce_coefficient(value)
      core, root = squarefree_split(int(radicand))
      old = canonical.get(core, (_ZERO, _ZERO))
      canonical[core] = (old[0] + re * root, old[1] + im * root)
    self._terms = dict((r, c) for r, c in canonical.items() if not _is_zero_coefficient(c))
    self._hash = None

  @classmethod
  def _from_canonical(cls, terms):
    obj = cls.__new__(cls)
    obj._terms = terms
    obj._hash = None
    return obj

  @classmethod
  def rational(cls, re, im=0):
    return cls({1: (Fraction(re), Fraction(im))})

  @classmethod
  def sqrt(cls, value):
    """Exact square root of a non-negative rational: sqrt(a/b) = sqrt(ab)/b."""
    value = Fraction(value)
    if value < 0:
      raise ValueError('square root of negative value %s' % value)
    if value == 0:
      return cls._from_canonical({})
    return cls({value.numerator * value.denominator: (Fraction(1, value.denominator), _ZERO)})

  @classmethod
  def coerce(cls, value):
    if isinstance(value, RadicalScalar):
      return value
    if isinstance(value, (numbers.Rational, complex)):
      return cls({1: value})
    raise TypeError('cannot convert %r to RadicalScalar' % (value,))

  @property
  def terms(self):
    return dict(self._terms)

  def radicands(self):
    return sorted(self._terms)

  def coefficient(self, radicand=1):
    return self._terms.get(radicand, (_ZERO, _ZERO))

  def is_zero(self):
    return not self._terms

  def __bool__(self):
    return bool(self._terms)

  def is_rational(self):
    "True when the value is a real rational number"
    if not self._terms:
      return True
    return list(self._terms) == [1] and self._terms[1][1] == 0

  def as_fraction(self):
    if not self.is_rational():
      raise ValueError('%s is not rational' % self)
    return self._terms.get(1, (_ZERO, _ZERO))[0]

  # ring operations

  def add(self, other):
    other = RadicalScalar.coerce(other)
    terms = dict(self._terms)
    for r, c in other._terms.items():
      old = terms.get(r)
      if old is None:
        terms[r] = c
        continue
      new = (old[0] + c[0], old[1] + c[1])
      if _is_zero_coefficient(new):
        del terms[r]
      else:
        terms[r] = new
    return RadicalScalar._from_canonical(terms)

  def neg(self):
    return RadicalScalar._from_canonical(dict((r, (-c[0], -c[1])) for r, c in self._terms.items()))

  def sub(self, other):
    return self.add(RadicalScalar.coerce(other).neg())

  def mul(self, other):
    other = RadicalScalar.coerce(other)
    terms = {}
    for r1, c1 in self._terms.items():
      for r2, c2 in other._terms.items():
        # r1, r2 square-free: sqrt(r1 r2) = g sqrt(r1/g * r2/g)
        g = math.gcd(r1, r2)
        core = (r1 // g) * (r2 // g)
        product = _gauss_mul(c1, c2)
        old = terms.get(core, (_ZERO, _ZERO))
        terms[core] = (old[0] + product[0] * g, old[1] + product[1] * g)
    return RadicalScalar._from_canonical(
      dict((r, c) for r, c in terms.items() if not _is_zero_coefficient(c)))

  def conjugate(self):
    return RadicalScalar._from_canonical(dict((r, (c[0], -c[1])) for r, c in self._terms.items()))

  def _flip(self, prime):
    "Galois conjugate sending sqrt(prime) to -sqrt(prime)"
    return RadicalScalar._from_canonical(dict(
      (r, (-c[0], -c[1]) if r % prime == 0 else c) for r, c in self._terms.items()))

  def inverse(self):
    if not self._terms:
      raise ZeroDivisionError('inverse of exact zero')
    numerator = ONE
    denominator = self
    primes = set()
    for r in self._terms:
      primes.update(prime_factors(r))
    for prime in sorted(primes):
      # (A + B sqrt(P)) (A - B sqrt(P)) = A^2 - P B^2 has no sqrt(P)
      conj = denominator._flip(prime)
      numerator = numerator.mul(conj)
      denominator = denominator.mul(conj)
    re, im = denominator._terms[1]
    norm = re * re + im * im
    return numerator.mul(RadicalScalar._from_canonical({1: (re / norm, -im / norm)}))

  def div(self, other):
    return self.mul(RadicalScalar.coerce(other).inverse())

  def _binary(method):
    def operator(self, other):
      try:
        other = RadicalScalar.coerce(other)
      except TypeError:
        return NotImplemented
      return method(self, other)
    operator.__name__ = method.__name__
    return operator

  __add__ = _binary(add)
  __sub__ = _binary(sub)
  __mul__ = _binary(mul)
  __truediv__ = _binary(div)
  __neg__ = neg
  del _binary

  def __radd__(self, other):
    return RadicalScalar.coerce(other).add(self)

  def __rsub__(self, other):
    return RadicalScalar.coerce(other).sub(self)

  def __rmul__(self, other):
    return RadicalScalar.coerce(other).mul(self)

  def __rtruediv__(self, other):
    return RadicalScalar.coerce(other).div(self)

  def __pos__(self):
    return self

  def __pow__(self, exponent):
    if not isinstance(exponent, numbers.Integral):
      return NotImplemented
    if exponent < 0:
      return self.inverse() ** -exponent
    result = ONE
    base = self
    while exponent:
      if exponent & 1:
        result = result.mul(base)
      base = base.mul(base)
      exponent >>= 1
    return result

  # comparison and hashing

  def __eq__(self, other):
    try:
      other = RadicalScalar.coerce(other)
    except TypeError:
      return NotImplemented
    return self._terms == other._terms

  def __ne__(self, other):
    result = self.__eq__(other)
    if result is NotImplemented:
      return result
    return not result

  def __hash__(self):
    if self._hash is None:
      if self.is_rational():
        # agree with hash(Fraction) and hash(int) for equal values
        self._hash = hash(self.as_fraction())
      else:
        self._hash = hash(frozenset(self._terms.items()))
    return self._hash

  # floating point views, for reports only

  def __complex__(self):
    total = 0j
    for r, (re, im) in sorted(self._terms.items()):
      total += complex(float(re), float(im)) * math.sqrt(r)
    return total

  def to_complex(self):
    return complex(self)

  def __abs__(self):
    return abs(complex(self))

  # serialization

  def to_tuples(self):
    return [
      [r, re.numerator, re.denominator, im.numerator, im.denominator]
      for r, (re, im) in sorted(self._terms.items())
    ]

  toJSON = to_tuples

  @classmethod
  def from_tuples(cls, tuples):
    return cls(dict(
      (int(r), (Fraction(int(rn), int(rd)), Fraction(int(imn), int(imd))))
      for r, rn, rd, imn, imd in tuples
    ))

  def __str__(self):
    if not self._terms:
      return '0'
    parts = []
    for r, (re, im) in sorted(self._terms.items()):
      sign, text = _format_coefficient(re, im, r != 1)
      if r != 1:
        text += '√%d' % r
      parts.append((sign, text))
    first_sign, first = parts[0]
    out = ('-' if first_sign == '-' else '') + first
    for sign, text in parts[1:]:
      out += ' %s %s' % (sign, text)
    return out

  def __repr__(self):
    return 'RadicalScalar(%r)' % str(self)


def _coerce_coefficient(value):
  if isinstance(value, tuple):
    return Fraction(value[0]), Fraction(value[1])
  if isinstance(value, numbers.Rational):
    return Fraction(value), _ZERO
  if isinstance(value, complex):
    if value.real != int(value.real) or value.imag != int(value.imag):
      raise TypeError('only integral complex literals are exact: %r' % (value,))
    return Fraction(int(value.real)), Fraction(int(value.imag))
  raise TypeError('cannot use %r as a Gaussian rational' % (value,))


def _format_coefficient(re, im, has_root):
  """Return (sign, text) for one coefficient; the sign is '+' or '-'."""
  if im == 0:
    magnitude = abs(re)
    text = '' if (magnitude == 1 and has_root) else str(magnitude)
    return ('-' if re < 0 else '+'), text
  if re == 0:
    magnitude = abs(im)
    text = ('' if magnitude == 1 else str(magnitude)) + 'i'
    return ('-' if im < 0 else '+'), text
  im_text = '' if abs(im) == 1 else str(abs(im))
  return '+', '(%s%s%si)' % (re, '-' if im < 0 else '+', im_text)


ZERO = RadicalScalar._from_canonical({})
ONE = RadicalScalar._from_canonical({1: (Fraction(1), _ZERO)})
I = RadicalScalar._from_canonical({1: (_ZERO, Fraction(1))})


def sqrt(value):
  return RadicalScalar.sqrt(value)

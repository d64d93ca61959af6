from collections import defaultdict

import numpy as np

from parafock.algebra.scalar import ONE, ZERO, RadicalScalar
from parafock.errors import ModuleMismatchError


EVEN = 0
ODD = 1


class Operator(object):
  """Sparse exact matrix over a FockModule.

  ``entries`` maps (row, col) to a nonzero RadicalScalar. Operators are
  treated as immutable values: every operation returns a new one.
  ``grade`` is EVEN or ODD, or None for a sum of mixed parity.
  """
  __slots__ = ('module', 'entries', 'grade')

  def __init__(self, module, entries=None, grade=EVEN):
    self.module = module
    self.entries = dict((k, v) for k, v in (entries or {}).items() if v)
    self.grade = grade

  @classmethod
  def _wrap(cls, module, entries, grade):
    obj = cls.__new__(cls)
    obj.module = module
    obj.entries = entries
    obj.grade = grade
    return obj

  def _check_same_module(self, other):
    if self.module != other.module:
      raise ModuleMismatchError('operators act on different modules: %r and %r' % (self.module, other.module))

  @property
  def dim(self):
    return self.module.dim

  def is_zero(self):
    return not self.entries

  def compose(self, other):
    "Matrix product self * other"
    self._check_same_module(other)
    rows_of_other = defaultdict(list)
    for (k, c), w in other.entries.items():
      rows_of_other[k].append((c, w))
    acc = {}
    for (r, k), v in self.entries.items():
      for c, w in rows_of_other.get(k, ()):
        key = (r, c)
        acc[key] = acc.get(key, ZERO) + v * w
    grade = _product_grade(self.grade, other.grade)
    return Operator._wrap(self.module, dict((k, v) for k, v in acc.items() if v), grade)

  def add(self, other):
    self._check_same_module(other)
    acc = dict(self.entries)
    for key, value in other.entries.items():
      new = acc.get(key, ZERO) + value
      if new:
        acc[key] = new
      else:
        acc.pop(key, None)
    return Operator._wrap(self.module, acc, _sum_grade(self, other))

  def scale(self, c):
    c = RadicalScalar.coerce(c)
    if not c:
      return Operator._wrap(self.module, {}, self.grade)
    return Operator._wrap(self.module, dict((k, c * v) for k, v in self.entries.items()), self.grade)

  def neg(self):
    return self.scale(-1)

  def sub(self, other):
    return self.add(other.neg())

  def adjoint(self):
    return Operator._wrap(
      self.module, dict(((c, r), v.conjugate()) for (r, c), v in self.entries.items()), self.grade)

  def apply(self, vector):
    "Act on a sparse vector index -> RadicalScalar"
    out = {}
    for (r, c), v in self.entries.items():
      x = vector.get(c)
      if x is None:
        continue
      new = out.get(r, ZERO) + v * x
      if new:
        out[r] = new
      else:
        out.pop(r, None)
    return out

  def entry(self, row, col):
    return self.entries.get((row, col), ZERO)

  def diagonal(self):
    return [self.entries.get((i, i), ZERO) for i in range(self.dim)]

  def is_diagonal(self):
    return all(r == c for r, c in self.entries)

  def is_hermitian(self):
    return self == self.adjoint()

  def restrict(self, rows, cols=None):
    "Keep only entries inside the rows x cols block"
    rows = set(rows)
    cols = rows if cols is None else set(cols)
    return Operator._wrap(
      self.module, dict(((r, c), v) for (r, c), v in self.entries.items() if r in rows and c in cols), self.grade)

  def restrict_columns(self, cols):
    cols = set(cols)
    return Operator._wrap(
      self.module, dict(((r, c), v) for (r, c), v in self.entries.items() if c in cols), self.grade)

  def max_abs(self):
    if not self.entries:
      return 0.0
    return max(abs(v) for v in self.entries.values())

  def to_dense(self):
    "Complex float matrix, for reports and time evolution only"
    m = np.zeros((self.dim, self.dim), dtype=complex)
    for (r, c), v in self.entries.items():
      m[r, c] = complex(v)
    return m

  __matmul__ = compose
  __add__ = add
  __sub__ = sub
  __neg__ = neg

  def __mul__(self, c):
    if isinstance(c, Operator):
      return self.compose(c)
    return self.scale(c)

  __rmul__ = scale

  def __eq__(self, other):
    if not isinstance(other, Operator):
      return NotImplemented
    return self.module == other.module and self.entries == other.entries

  def __ne__(self, other):
    result = self.__eq__(other)
    if result is NotImplemented:
      return result
    return not result

  __hash__ = None

  def __repr__(self):
    return '<Operator %s dim=%d nnz=%d grade=%s>' % (
      self.module.family.tag, self.dim, len(self.entries), {EVEN: 'even', ODD: 'odd'}.get(self.grade, 'mixed'))


def _product_grade(a, b):
  if a is None or b is None:
    return None
  return (a + b) % 2


def _sum_grade(x, y):
  if x.grade == y.grade:
    return x.grade
  if x.is_zero():
    return y.grade
  if y.is_zero():
    return x.grade
  return None


def identity(module):
  return Operator._wrap(module, dict(((i, i), ONE) for i in range(module.dim)), EVEN)


def zero(module, grade=EVEN):
  return Operator._wrap(module, {}, grade)


def diagonal(module, values, grade=EVEN):
  return Operator(module, dict(((i, i), RadicalScalar.coerce(v)) for i, v in enumerate(values)), grade)


def compose(x, y):
  return x.compose(y)


def add(x, y):
  return x.add(y)


def scale(c, x):
  return x.scale(c)


def adjoint(x):
  return x.adjoint()

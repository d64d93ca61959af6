"""Exact Gaussian elimination over RadicalScalar vectors.

Vectors are sparse mappings key -> RadicalScalar with no stored zeros. The
elimination is incremental: each spanning vector is reduced against the
pivots found so far, so membership queries against a fixed spanning set
cost one reduction each.
"""
from parafock.algebra.scalar import ONE, ZERO


def _axpy(y, a, x):
  "y - a*x as a new sparse vector"
  out = dict(y)
  for key, value in x.items():
    new = out.get(key, ZERO) - a * value
    if new:
      out[key] = new
    else:
      out.pop(key, None)
  return out


def _leading_key(vector):
  return min(vector)


class SpanSolver(object):
  __slots__ = ('size', 'pivots', 'rank')

  def __init__(self, spanning):
    spanning = [dict(v) for v in spanning]
    self.size = len(spanning)
    # each pivot: (key, reduced vector with 1 at key, combination of inputs)
    self.pivots = []
    for position, vector in enumerate(spanning):
      combination = {position: ONE}
      vector, combination = self._reduce(vector, combination)
      if not vector:
        continue
      key = _leading_key(vector)
      scale = vector[key].inverse()
      vector = dict((k, v * scale) for k, v in vector.items())
      combination = dict((k, v * scale) for k, v in combination.items())
      self.pivots.append((key, vector, combination))
    self.rank = len(self.pivots)

  def _reduce(self, vector, combination):
    for key, pivot_vector, pivot_combination in self.pivots:
      factor = vector.get(key)
      if factor is None:
        continue
      vector = _axpy(vector, factor, pivot_vector)
      combination = _axpy(combination, factor, pivot_combination)
    return vector, combination

  def solve(self, target):
    """Coefficients c with sum(c[j] * spanning[j]) == target, or None.

    A minus sign is folded in because the reduction subtracts pivots from the
    target; free coefficients are left at zero.
    """
    residual, combination = self._reduce(dict(target), {})
    if residual:
      return None
    return [-combination.get(j, ZERO) for j in range(self.size)]

  def contains(self, target):
    return self.solve(target) is not None

  def remainder(self, target):
    "The part of target left after eliminating every pivot; empty inside the span"
    return self._reduce(dict(target), {})[0]


def solve_in_span(spanning, target):
  return SpanSolver(spanning).solve(target)


def combine(vectors, coefficients):
  total = {}
  for vector, coefficient in zip(vectors, coefficients):
    if coefficient:
      total = _axpy(total, -coefficient, vector)
  return total

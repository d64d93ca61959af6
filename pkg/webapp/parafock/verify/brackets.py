from parafock.fock.operators import ODD


def commutator(x, y):
  return x.compose(y).sub(y.compose(x))


def anticommutator(x, y):
  return x.compose(y).add(y.compose(x))


def bracket(x, y):
  """Supercommutator: {x, y} when both are odd, [x, y] otherwise."""
  if x.grade == ODD and y.grade == ODD:
    return anticommutator(x, y)
  return commutator(x, y)

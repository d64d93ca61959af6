from parafock.algebra.scalar import I, ONE, ZERO, sqrt
from parafock.errors import InvalidStateError
from parafock.fock.cao import number_operator
from parafock.fock.module import A, ASUPER, build_module
from parafock.fock.states import (
  basis_vector, expectation, gram_matrix, inner, monomial_state, normalization, normalized_basis_state,
  vacuum_vector)

from .base import TestCase


class StatesTest(TestCase):

  def test_vacuum(self):
    module = build_module(A, 3, 2)
    self.assertEqual(vacuum_vector(module), {0: ONE})

  def test_monomial(self):
    module = build_module(A, 2, 2)
    # a_1^+ a_2^+ |0>: sqrt(1*2) then sqrt(1*1)
    self.assertEqual(monomial_state(module, (1, 1)), {module.position((1, 1)): sqrt(2)})
    self.assertEqual(normalization(module, (1, 1)), sqrt(2) / 2)

  def test_monomial_arity(self):
    with self.assertRaises(InvalidStateError):
      monomial_state(build_module(A, 2, 2), (1,))

  def test_normalized_basis_states(self):
    module = build_module(ASUPER, 3, 3)
    for position, state in enumerate(module.basis):
      self.assertEqual(normalized_basis_state(module, state), {position: ONE})

  def test_gram_matrix(self):
    module = build_module(A, 2, 2)
    vectors = [normalized_basis_state(module, state) for state in module.basis]
    gram = gram_matrix(vectors)
    for i, row in enumerate(gram):
      self.assertEqual(row, [ONE if i == j else ZERO for j in range(module.dim)])

  def test_inner_is_antilinear(self):
    self.assertEqual(inner({0: I}, {0: I}), ONE)
    self.assertEqual(inner({0: ONE}, {1: ONE}), ZERO)

  def test_expectation(self):
    module = build_module(A, 2, 3)
    vector = basis_vector(module, (2, 1))
    self.assertEqual(expectation(number_operator(module, 1), vector), 2)
    self.assertEqual(expectation(number_operator(module, 2), vector), 1)

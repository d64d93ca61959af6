from fractions import Fraction

import numpy as np

from django.conf import settings
from django.test import override_settings

from parafock.algebra.scalar import I, ONE, ZERO, sqrt
from parafock.errors import (
  DimensionLimitError, InvalidFamilyError, InvalidStateError, ModeIndexError, ModuleMismatchError)
from parafock.fock.cao import (
  AS_PRINTED, _cao_set, annihilation, cao_set, creation, gl_generator, number_operator, position_momentum)
from parafock.fock.module import A, ASUPER, BOSE, FERMI, OccupationState, StatisticsFamily, _enumerate, build_module
from parafock.fock.operators import EVEN, ODD, Operator, identity, zero
from parafock.fock.serialize import module_to_json, operator_from_json, operator_to_json

from .base import TestCase


class FockModuleTest(TestCase):

  def test_dimensions(self):
    self.assertEqual(build_module(A, 2, 2).dim, 6)
    self.assertEqual(build_module(A, 3, 6).dim, 84)
    self.assertEqual(build_module(ASUPER, 3, 1).dim, 4)
    self.assertEqual(build_module(ASUPER, 3, 3).dim, 8)
    self.assertEqual(build_module(ASUPER, 3, 5).dim, 8)
    self.assertEqual(build_module(FERMI, 2).dim, 4)
    self.assertEqual(build_module(BOSE, 2, 3).dim, 16)

  def test_lexicographic_order(self):
    module = build_module(A, 2, 2)
    self.assertEqual(
      [state.occ for state in module.basis],
      [(0, 0), (0, 1), (0, 2), (1, 0), (1, 1), (2, 0)])
    self.assertEqual(module.vacuum_index(), 0)
    self.assertEqual(module.position((1, 1)), 4)

  def test_aliases(self):
    self.assertEqual(StatisticsFamily('asuper', 3, 2).tag, ASUPER)
    self.assertIs(build_module('a', 2, 2), build_module(A, 2, 2))

  def test_invalid_family(self):
    with self.assertRaises(InvalidFamilyError):
      StatisticsFamily(A, 0, 1)
    with self.assertRaises(InvalidFamilyError):
      StatisticsFamily(A, 2, 0)
    with self.assertRaises(InvalidFamilyError):
      StatisticsFamily(FERMI, 2, 2)
    with self.assertRaises(InvalidFamilyError):
      StatisticsFamily('B', 2, 2)

  def test_invalid_state(self):
    family = StatisticsFamily(ASUPER, 3, 3)
    with self.assertRaises(InvalidStateError):
      OccupationState((2, 0, 0), family)
    with self.assertRaises(InvalidStateError):
      build_module(A, 2, 2).position((2, 1))

  def test_interior(self):
    module = build_module(BOSE, 1, 6)
    self.assertEqual([module.basis[i].occ for i in module.interior()], [(l,) for l in range(5)])
    self.assertEqual(build_module(A, 2, 2).interior(), list(range(6)))

  def test_below(self):
    module = build_module(A, 2, 3)
    self.assertEqual(len(module.below(1)), 3)

  @override_settings(MAX_BASIS_DIMENSION=10)
  def test_dimension_limit(self):
    with self.assertRaises(DimensionLimitError):
      build_module(A, 3, 5)

  def test_caches_are_bounded(self):
    for p in range(1, settings.FOCK_CACHE_SIZE + 5):
      cao_set(build_module(A, 1, p))
    for cache in (_enumerate, _cao_set):
      self.assertEqual(cache.cache_info().maxsize, settings.FOCK_CACHE_SIZE)
      self.assertLessEqual(cache.cache_info().currsize, settings.FOCK_CACHE_SIZE)
    # p=1 was evicted; the rebuilt module is interchangeable
    module = build_module(A, 1, 1)
    self.assertEqual(module.dim, 2)
    self.assertIs(cao_set(module), cao_set(build_module(A, 1, 1)))

  def test_module_json(self):
    data = module_to_json(build_module(ASUPER, 3, 1))
    self.assertEqual(data['family'], ASUPER)
    self.assertEqual(data['dim'], 4)
    self.assertEqual(data['basis'], [[0, 0, 0], [0, 0, 1], [0, 1, 0], [1, 0, 0]])


class CaoTest(TestCase):

  def test_A_amplitudes(self):
    module = build_module(A, 2, 2)
    plus = creation(module, 1)
    # a_1^+ |2; 0,0) = sqrt(1 * 2) |2; 1,0)
    self.assertEqual(plus.entry(module.position((1, 0)), 0), sqrt(2))
    # a_1^+ |2; 1,0) = sqrt(2 * 1) |2; 2,0)
    self.assertEqual(plus.entry(module.position((2, 0)), module.position((1, 0))), sqrt(2))
    # no state above p quanta
    self.assertEqual(plus.apply({module.position((1, 1)): ONE}), {})
    self.assertEqual(plus.grade, EVEN)

  def test_ASuper_signs(self):
    module = build_module(ASUPER, 3, 3)
    plus = creation(module, 2)
    # a_2^+ |3; 1,0,0) = -sqrt(3 - 1) |3; 1,1,0)
    self.assertEqual(plus.entry(module.position((1, 1, 0)), module.position((1, 0, 0))), -sqrt(2))
    self.assertEqual(plus.entry(module.position((0, 1, 0)), 0), sqrt(3))
    self.assertEqual(plus.grade, ODD)

  def test_as_printed_negates_annihilation(self):
    module = build_module(ASUPER, 3, 2)
    for i in range(1, 4):
      self.assertEqual(annihilation(module, i, AS_PRINTED), annihilation(module, i).neg())
      self.assertEqual(creation(module, i, AS_PRINTED), creation(module, i))

  def test_fermi(self):
    module = build_module(FERMI, 2)
    caos = cao_set(module)
    self.assertEqual(caos.plus[1].entry(module.position((1, 1)), module.position((1, 0))), -1)
    self.assertTrue(caos.plus[0].compose(caos.plus[0]).is_zero())

  def test_bose_cutoff(self):
    module = build_module(BOSE, 1, 3)
    plus = creation(module, 1)
    self.assertEqual(plus.entry(3, 2), sqrt(3))
    self.assertEqual(plus.apply({3: ONE}), {})

  def test_mode_index(self):
    module = build_module(A, 2, 2)
    with self.assertRaises(ModeIndexError):
      creation(module, 0)
    with self.assertRaises(IndexError):
      annihilation(module, 3)

  def test_number_operator(self):
    module = build_module(A, 2, 2)
    n1 = number_operator(module, 1)
    self.assertTrue(n1.is_diagonal())
    self.assertEqual(n1.diagonal(), [0, 0, 0, 1, 1, 2])

  def test_gl_diagonal(self):
    module = build_module(A, 2, 3)
    e00 = gl_generator(module, 0, 0)
    e11 = gl_generator(module, 1, 1)
    # e_00 = p - L, e_11 = l_1
    self.assertEqual(e00.diagonal(), [3 - state.total for state in module.basis])
    self.assertEqual(e11.diagonal(), [state.occ[0] for state in module.basis])

  def test_gl_only_for_A(self):
    with self.assertRaises(InvalidFamilyError):
      gl_generator(build_module(ASUPER, 3, 2), 0, 1)
    with self.assertRaises(ModeIndexError):
      gl_generator(build_module(A, 2, 2), 0, 3)

  def test_position_momentum(self):
    module = build_module(BOSE, 1, 4)
    q, p = position_momentum(module)
    self.assertTrue(q[0].is_hermitian())
    self.assertTrue(p[0].is_hermitian())
    self.assertEqual(q[0].entry(1, 0), sqrt(Fraction(1, 2)))
    self.assertEqual(p[0].entry(1, 0), I * sqrt(Fraction(1, 2)))
    with self.assertRaises(InvalidFamilyError):
      position_momentum(build_module(A, 1, 2))


class OperatorTest(TestCase):

  def setUp(self):
    self.module = build_module(ASUPER, 3, 2)
    self.caos = cao_set(self.module)

  def test_adjoint(self):
    for plus, minus in zip(self.caos.plus, self.caos.minus):
      self.assertEqual(plus.adjoint(), minus)

  def test_grades(self):
    x, y = self.caos.plus[0], self.caos.minus[0]
    self.assertEqual(x.compose(y).grade, EVEN)
    self.assertEqual(x.compose(y).compose(x).grade, ODD)
    self.assertIsNone(x.add(x.compose(y)).grade)
    self.assertEqual(x.add(zero(self.module)).grade, ODD)

  def test_arithmetic(self):
    x = self.caos.plus[0]
    self.assertTrue((x - x).is_zero())
    self.assertEqual(x * 2, x + x)
    self.assertEqual(sqrt(2) * x, x.scale(sqrt(2)))
    self.assertEqual(x @ identity(self.module), x)
    self.assertEqual(-x, x.scale(-1))

  def test_restrict(self):
    one = identity(self.module)
    self.assertEqual(len(one.restrict([0, 1]).entries), 2)
    self.assertEqual(len(one.restrict_columns([0, 1, 2]).entries), 3)

  def test_module_mismatch(self):
    other = identity(build_module(ASUPER, 3, 3))
    with self.assertRaises(ModuleMismatchError):
      self.caos.plus[0].compose(other)

  def test_to_dense(self):
    dense = self.caos.plus[0].to_dense()
    self.assertEqual(dense.shape, (self.module.dim, self.module.dim))
    np.testing.assert_allclose(dense.conj().T, self.caos.minus[0].to_dense())

  def test_serialize(self):
    op = self.caos.plus[1].compose(self.caos.minus[2]).scale(I)
    data = operator_to_json(op)
    self.assertEqual(data['grade'], 'even')
    restored = operator_from_json(data, self.module)
    self.assertEqual(restored, op)
    self.assertEqual(restored.grade, EVEN)
    with self.assertRaises(ModuleMismatchError):
      operator_from_json(data, build_module(ASUPER, 3, 3))

  def test_operator_drops_zero_entries(self):
    op = Operator(self.module, {(0, 0): ZERO, (1, 1): ONE})
    self.assertEqual(list(op.entries), [(1, 1)])

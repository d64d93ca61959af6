"""Builders turning command parameters into report documents.

Management commands and HTTP views share these, so both surfaces return
the same JSON body for the same parameters.
"""
from parafock.fock.cao import cao_set
from parafock.fock.module import A, ASUPER, BOSE, FERMI, StatisticsFamily, build_module
from parafock.limits.boson import LimitProbe, boson_limit_table
from parafock.oscillator.checks import check_noncanonical, check_spectral, run_oscillator_checks
from parafock.oscillator.config import MODES, OscillatorConfig
from parafock.oscillator.dynamics import TRAJECTORY_COLUMNS, expectation_trajectory
from parafock.oscillator.measurement import (
  bound_tension, measurement_support, spectrum, support_unit, uncertainty_report)
from parafock.report.manifest import RunManifest
from parafock.report.tables import Table
from parafock.verify.closure import verify_closure
from parafock.verify.reports import failures, summarize
from parafock.verify.suites import (
  check_A_relations, check_ASuper_relations, verify_adjointness, verify_canonical_relations,
  verify_gl_relations, verify_orthonormality, verify_paraBose_relations, verify_paraFermi_relations,
  verify_pauli_principle, verify_vacuum_condition)


class Document(object):
  __slots__ = ('command', 'manifest', 'reports', 'tables')

  def __init__(self, command, parameters, reports=None, tables=None):
    self.command = command
    self.manifest = RunManifest(command, parameters)
    self.reports = list(reports or [])
    self.tables = list(tables or [])

  def failures(self):
    return failures(self.reports)

  def table(self, name):
    for table in self.tables:
      if table.name == name:
        return table
    raise KeyError(name)

  def summary_lines(self):
    return [summary.line() for summary in summarize(self.reports)]

  def to_text(self):
    lines = self.summary_lines()
    for report in self.failures():
      lines.append('FAIL %s %s %s residual=%g' % (
        report.suite, report.identity_name, report.index_tuple, report.residual_max_abs))
    text = '\n'.join(lines) + ('\n' if lines else '')
    for table in self.tables:
      text += table.to_text()
    return text

  def toJSON(self):
    return {
      'manifest': self.manifest,
      'reports': self.reports,
      'tables': self.tables,
    }


def _summary_table(reports):
  return Table('summary', ['suite', 'instances', 'failures'], [
    [s.suite, s.instances, s.failures] for s in summarize(reports)
  ])


def verify_document(family, n, p, phase='standard'):
  """Every relation suite that applies to the family.

  ASuper modules with three modes also get the oscillator suites.
  """
  family = StatisticsFamily(family, n, p)
  module = build_module(family)
  caos = cao_set(module, phase)
  tables = []
  if family.tag == A:
    reports = check_A_relations(caos)
    reports += verify_gl_relations(n, p)
    reports += verify_vacuum_condition(caos, p)
    reports += verify_pauli_principle(module, phase=phase)
  elif family.tag == ASUPER:
    reports = check_ASuper_relations(caos)
    reports += verify_vacuum_condition(caos, p)
    reports += verify_pauli_principle(module, phase=phase)
  elif family.tag == FERMI:
    reports = verify_paraFermi_relations(caos, 1)
    reports += verify_pauli_principle(module, phase=phase)
  else:
    reports = verify_paraBose_relations(caos)
    reports += verify_canonical_relations(module)
    reports += verify_vacuum_condition(caos, 1)
  reports += verify_adjointness(caos)
  reports += verify_orthonormality(module, phase)
  if family.tag != BOSE:
    closure = verify_closure(module, phase)
    reports += closure.reports
    tables.append(Table('closure', ['family', 'span_dimension', 'algebra_dimension', 'closed'], [
      [family.tag, closure.rank, closure.expected_rank, closure.closed]]))
  if family.tag == ASUPER and n == MODES:
    cfg = OscillatorConfig(p, phase=phase)
    reports += run_oscillator_checks(cfg)
    witness = check_noncanonical(cfg)
    tables.append(Table('noncanonical', ['j', 'k', 'canonical', 'residual_max_abs'], [
      [r.index_tuple[0], r.index_tuple[1], r.exact_pass, r.residual_max_abs] for r in witness]))
  tables.insert(0, _summary_table(reports))
  parameters = {'family': family.tag, 'n': n, 'p': p, 'phase': phase}
  return Document('verify', parameters, reports, tables)


def _physics(cfg):
  return {'p': cfg.p, 'hbar': cfg.hbar, 'mass': cfg.mass, 'omega': cfg.omega}


def spectrum_document(cfg):
  levels = spectrum(cfg)
  table = Table('spectrum', ['q', 'energy', 'multiplicity', 'energy_exact'], [
    [level.q, level.energy, level.multiplicity, '%s' % level.exact] for level in levels])
  return Document('spectrum', _physics(cfg), check_spectral(cfg), [table])


def uncertainty_document(cfg, state):
  record = uncertainty_report(cfg, state)
  physical = record.physical()
  in_window = record.in_window()
  table = Table('uncertainty', [
    'mode', 'mean_R', 'mean_P', 'dR', 'dP', 'product', 'product_exact', 'low', 'high', 'in_window'])
  for k in range(MODES):
    table.append([
      k + 1, physical['mean_R'][k], physical['mean_P'][k], physical['dR'][k], physical['dP'][k],
      physical['product'][k], record.product[k], physical['window'][0], physical['window'][1], in_window[k],
    ])
  tension = bound_tension(cfg)
  bound = Table('bound tension', ['state', 'mode', 'product'], [
    [list(occ), k, float(value) * cfg.hbar] for occ, k, value in tension.exceeding])
  parameters = _physics(cfg)
  parameters['state'] = list(record.occ)
  return Document('uncertainty', parameters, [], [table, bound])


def measure_document(cfg, state):
  points = measurement_support(cfg, state)
  unit = support_unit(cfg)
  table = Table('support', ['x', 'y', 'z', 'x_exact', 'y_exact', 'z_exact'])
  for point in points:
    table.append([complex(c).real * unit for c in point] + list(point))
  parameters = _physics(cfg)
  parameters['state'] = list(state)
  return Document('measure', parameters, [], [table])


def limit_document(n, p_list, cutoff):
  probe = LimitProbe(n, p_list, cutoff)
  table = Table('limit', ['p', 'dim', 'deviation_max', 'bound_2L_over_p', 'closed_form', 'creation_commutators_vanish'])
  for row in boson_limit_table(probe):
    table.append([row.p, row.dim, row.deviation_max, float(row.bound), '%s' % row.closed_form, row.creation_vanish])
  return Document('limit', probe.toJSON(), [], [table])


def evolve_document(cfg, state, times, literal_momentum=False):
  rows = expectation_trajectory(cfg, state, times, literal_momentum)
  table = Table('trajectory', TRAJECTORY_COLUMNS, rows)
  parameters = _physics(cfg)
  parameters.update({'state': list(state), 't': [times[0], times[-1], len(times)], 'literal_momentum': literal_momentum})
  return Document('evolve', parameters, [], [table])

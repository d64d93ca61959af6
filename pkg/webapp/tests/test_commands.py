import json
import os
import tempfile

from io import StringIO

from django.conf import settings
from django.core.management import call_command
from django.core.management.base import CommandError

from .base import TestCase


class CommandTestCase(TestCase):

  def setUp(self):
    self.out = tempfile.mkdtemp(dir=settings.REPORT_DIR)

  def call(self, *args):
    stdout = StringIO()
    call_command(*args, '--out', self.out, stdout=stdout)
    return stdout.getvalue()

  def assertExitCode(self, code, *args):
    with self.assertRaises(CommandError) as cm:
      self.call(*args)
    self.assertEqual(cm.exception.returncode, code)
    return cm.exception

  def load(self, name):
    with open(os.path.join(self.out, name)) as f:
      return json.load(f)


class VerifyCommandTest(CommandTestCase):

  def test_superstatistics_oscillator(self):
    output = self.call('verify', '--family', 'asuper', '--n', '3', '--p', '2')
    self.assertIn('A-superstatistics: 72 instances, 0 failures', output)
    self.assertIn('compatibility: 12 instances, 0 failures', output)
    self.assertIn('wrote %s' % os.path.join(self.out, 'verify.json'), output)
    data = self.load('verify.json')
    self.assertEqual(data['manifest']['parameters'], {'family': 'ASuper', 'n': 3, 'p': 2, 'phase': 'standard'})
    self.assertTrue(all(report['exact_pass'] for report in data['reports']))
    names = [table['name'] for table in data['tables']]
    self.assertEqual(names, ['summary', 'closure', 'noncanonical'])

  def test_statistics(self):
    output = self.call('verify', '--family', 'a', '--n', '2', '--p', '2')
    self.assertIn('A-statistics: 20 instances, 0 failures', output)
    self.assertIn('gl(n+1): 82 instances, 0 failures', output)

  def test_fermi_and_bose(self):
    self.call('verify', '--family', 'fermi', '--n', '2')
    self.assertIn('closure', [table['name'] for table in self.load('verify.json')['tables']])
    self.call('verify', '--family', 'bose', '--n', '2', '--p', '4')
    self.assertNotIn('closure', [table['name'] for table in self.load('verify.json')['tables']])

  def test_fermi_exclusion_is_per_mode(self):
    for n in (2, 3):
      output = self.call('verify', '--family', 'fermi', '--n', str(n))
      self.assertIn('pauli: %d instances, 0 failures' % n, output)
      self.assertIn('paraFermi: ', output)
      self.assertTrue(all(report['exact_pass'] for report in self.load('verify.json')['reports']))

  def test_as_printed_phase_fails(self):
    err = self.assertExitCode(1, 'verify', '--family', 'asuper', '--n', '3', '--p', '4', '--phase', 'as-printed')
    self.assertIn('relation instances failed', str(err))
    data = self.load('verify.json')
    self.assertFalse(all(report['exact_pass'] for report in data['reports']))

  def test_invalid_modes(self):
    self.assertExitCode(2, 'verify', '--family', 'a', '--n', '0')
    self.assertEqual(os.listdir(self.out), [])

  def test_invalid_fermi_order(self):
    self.assertExitCode(2, 'verify', '--family', 'fermi', '--n', '2', '--p', '2')

  def test_rerun_is_deterministic(self):
    bodies = []
    for _ in range(2):
      self.call('verify', '--family', 'asuper', '--n', '2', '--p', '2')
      data = self.load('verify.json')
      del data['manifest']['timestamp']
      bodies.append(data)
    self.assertEqual(bodies[0], bodies[1])

  def test_workers_override_is_restored(self):
    saved = settings.USE_WORKER_POOL, settings.POOL_MAX_WORKERS
    self.call('verify', '--family', 'a', '--n', '2', '--p', '1', '--workers', '0')
    self.assertEqual((settings.USE_WORKER_POOL, settings.POOL_MAX_WORKERS), saved)
    self.assertExitCode(2, 'verify', '--family', 'a', '--n', '2', '--workers', '-1')

  def test_csv_format(self):
    self.call('verify', '--family', 'a', '--n', '1', '--p', '2', '--format', 'csv')
    self.assertEqual(sorted(os.listdir(self.out)),
                     ['verify-closure.csv', 'verify-manifest.json', 'verify-summary.csv'])
    with open(os.path.join(self.out, 'verify-summary.csv')) as f:
      self.assertEqual(f.readline(), 'suite,instances,failures\n')


class OscillatorCommandTest(CommandTestCase):

  def test_spectrum(self):
    self.call('spectrum', '--p', '3')
    rows = self.load('spectrum.json')['tables'][0]['rows']
    self.assertEqual([row[1] for row in rows], [4.5, 3.5, 2.5, 1.5])
    self.assertEqual([row[2] for row in rows], [1, 3, 3, 1])

  def test_spectrum_text(self):
    self.call('spectrum', '--p', '2', '--format', 'text')
    with open(os.path.join(self.out, 'spectrum.txt')) as f:
      text = f.read()
    self.assertIn('spectral: 4 instances, 0 failures', text)
    self.assertIn('# spectrum', text)
    self.assertEqual(self.load('spectrum-manifest.json')['command'], 'spectrum')

  def test_spectrum_requires_order(self):
    with self.assertRaises(CommandError):
      self.call('spectrum')

  def test_invalid_constants(self):
    self.assertExitCode(2, 'spectrum', '--p', '2', '--mass', '0')

  def test_measure(self):
    self.call('measure', '--p', '3', '--state', '1,1,0')
    table = self.load('measure.json')['tables'][0]
    self.assertEqual(table['name'], 'support')
    self.assertEqual(len(table['rows']), 8)

  def test_measure_needs_order_above_two(self):
    self.assertExitCode(2, 'measure', '--p', '2', '--state', '0,0,0')

  def test_measure_invalid_state(self):
    self.assertExitCode(2, 'measure', '--p', '3', '--state', '2,0,0')
    self.assertExitCode(2, 'measure', '--p', '3', '--state', 'x')

  def test_uncertainty(self):
    self.call('uncertainty', '--p', '4', '--state', '0,1,0')
    data = self.load('uncertainty.json')
    self.assertEqual([table['name'] for table in data['tables']], ['uncertainty', 'bound tension'])
    self.assertEqual(len(data['tables'][0]['rows']), 3)
    self.assertEqual(data['manifest']['parameters']['state'], [0, 1, 0])

  def test_evolve_csv(self):
    self.call('evolve', '--p', '2', '--state', '0,0,0', '--t', '0:1:0.5', '--format', 'csv')
    with open(os.path.join(self.out, 'evolve-trajectory.csv')) as f:
      lines = f.read().splitlines()
    self.assertEqual(lines[0], 't,R1,R2,R3,P1,P2,P3,R1^2,R2^2,R3^2')
    self.assertEqual(len(lines), 4)

  def test_evolve_invalid_grid(self):
    self.assertExitCode(2, 'evolve', '--p', '2', '--state', '0,0,0', '--t', '1:0:0.5')


class LimitCommandTest(CommandTestCase):

  def test_single_mode(self):
    self.call('limit', '--n', '1', '--p', '8,16', '--cutoff', '3')
    data = self.load('limit.json')
    self.assertEqual(data['manifest']['parameters'], {'n': 1, 'p_list': [8, 16], 'cutoff': 3})
    rows = data['tables'][0]['rows']
    self.assertEqual([row[0] for row in rows], [8, 16])
    self.assertEqual([row[1] for row in rows], [9, 17])
    self.assertEqual([row[2] for row in rows], [0.75, 0.375])
    self.assertTrue(all(row[5] for row in rows))

  def test_orders_must_increase(self):
    self.assertExitCode(2, 'limit', '--n', '2', '--p', '16,8', '--cutoff', '2')

  def test_cutoff_below_smallest_order(self):
    self.assertExitCode(2, 'limit', '--n', '2', '--p', '4,8', '--cutoff', '4')

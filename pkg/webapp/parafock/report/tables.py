import csv
import io

from django.conf import settings

from parafock.algebra.scalar import RadicalScalar


def format_float(value):
  "Round to REPORT_FLOAT_DIGITS significant digits, folding -0.0 into 0.0"
  value = float('%.*g' % (settings.REPORT_FLOAT_DIGITS, value))
  return value + 0.0


def _json_cell(value):
  if isinstance(value, float):
    return format_float(value)
  if isinstance(value, (list, tuple)):
    return [_json_cell(v) for v in value]
  return value


def _csv_cell(value):
  if isinstance(value, bool):
    return 'true' if value else 'false'
  if isinstance(value, float):
    return repr(format_float(value))
  if isinstance(value, RadicalScalar):
    return str(value)
  if isinstance(value, (list, tuple)):
    return ','.join(_csv_cell(v) for v in value)
  return value


class Table(object):
  """Named rows with fixed columns, emitted as CSV or inside the JSON
  document."""
  __slots__ = ('name', 'columns', 'rows')

  def __init__(self, name, columns, rows=None):
    self.name = name
    self.columns = list(columns)
    self.rows = []
    for row in rows or ():
      self.append(row)

  def append(self, row):
    if isinstance(row, dict):
      row = [row.get(column) for column in self.columns]
    if len(row) != len(self.columns):
      raise ValueError('table %s expects %d columns, got %d' % (self.name, len(self.columns), len(row)))
    self.rows.append(list(row))

  def column(self, name):
    k = self.columns.index(name)
    return [row[k] for row in self.rows]

  def to_csv(self):
    out = io.StringIO()
    writer = csv.writer(out, dialect='excel', lineterminator='\n')
    writer.writerow(self.columns)
    for row in self.rows:
      writer.writerow([_csv_cell(v) for v in row])
    return out.getvalue()

  def to_text(self):
    lines = ['# %s' % self.name, '  '.join(self.columns)]
    for row in self.rows:
      lines.append('  '.join(str(_csv_cell(v)) for v in row))
    return '\n'.join(lines) + '\n'

  def toJSON(self):
    return {
      'name': self.name,
      'columns': self.columns,
      'rows': [[_json_cell(v) for v in row] for row in self.rows],
    }

  def __len__(self):
    return len(self.rows)

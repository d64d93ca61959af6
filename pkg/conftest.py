# Test wiring for running the Django test suite under plain pytest
# (mirrors tox.ini: PYTHONPATH=webapp, DJANGO_SETTINGS_MODULE=tests.settings).
import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(os.path.abspath(__file__)), 'webapp'))
os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'tests.settings')

import django  # noqa: E402

django.setup()

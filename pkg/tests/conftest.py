"""Shared test configuration.

Puts this directory on sys.path so test modules can import the
independent reference implementations in ``oracles.py``.
"""

import os
import sys

sys.path.insert(0, os.path.dirname(__file__))

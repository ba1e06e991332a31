"""Quantum MDS codes over qudits: constructions, verification and shortening."""

import os

# numba probes TBB first and warns when the system copy is too old
os.environ.setdefault("NUMBA_THREADING_LAYER", "workqueue")

__version__ = "0.1.0"

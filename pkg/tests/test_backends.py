import os
import subprocess
import sys

import numpy as np
import pytest

from ddirac import backend
from ddirac.clifford import build_table
from ddirac.lattice import LatticeBox, random_cochain
from ddirac.multiindex import NSLOTS

pytestmark = pytest.mark.skipif(backend._compiled is None,
                                reason="compiled extension not built")


def _random_flat(rng, box):
    return random_cochain(box, rng).data.reshape(NSLOTS, -1)


def test_compiled_matches_python(rng):
    box = LatticeBox((4, 4, 4, 4))
    table = build_table()
    args = (table.slot_a, table.slot_b, table.slot_out, table.signs)
    for _ in range(5):
        a = np.ascontiguousarray(_random_flat(rng, box))
        b = np.ascontiguousarray(_random_flat(rng, box))
        fast = backend._compiled.clifford_contract(a, b, *args)
        slow = backend.clifford_contract_python(a, b, *args)
        assert np.abs(fast - slow).max() <= 1e-13


def test_backend_name_reports_selection():
    assert backend.backend_name() in ("compiled", "python")
    assert backend.USE_COMPILED == (backend.backend_name() == "compiled")


def _import_with_env(value):
    code = "import ddirac.backend as b; print(b.backend_name())"
    env = dict(os.environ, DDIRAC_BACKEND=value)
    return subprocess.run([sys.executable, "-c", code], env=env,
                          capture_output=True, text=True)


def test_env_forces_python_backend():
    proc = _import_with_env("python")
    assert proc.returncode == 0
    assert proc.stdout.strip() == "python"


def test_env_rejects_unknown_backend():
    proc = _import_with_env("gpu")
    assert proc.returncode != 0
    assert "DDIRAC_BACKEND" in proc.stderr

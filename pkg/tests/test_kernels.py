import os
import subprocess
import sys

from interquant import _kernels_py, kernels
from interquant.models import FIGURES


def backend_in_subprocess(env_value):
    env = dict(os.environ, INTERQUANT_PURE_PYTHON=env_value)
    out = subprocess.run([sys.executable, "-c", "from interquant import kernels; print(kernels.BACKEND)"],
                         env=env, capture_output=True, text=True, check=True)
    return out.stdout.strip()


def test_env_forces_python():
    assert backend_in_subprocess("1") == "python"


def test_default_prefers_compiled():
    expected = "compiled" if "compiled" in kernels.backends() else "python"
    assert backend_in_subprocess("") == expected


def test_mood_tables_agree():
    for figure, pairs in FIGURES.items():
        expected = _kernels_py.mood_table(pairs, 4, 3, 4)
        for mod in kernels.backends().values():
            assert mod.mood_table(pairs, 4, 3, 4) == expected


def test_enumeration_order():
    # no premises; conclusion all(0)(1) first fails at m=2 with masks (0b01, 0b10)
    for mod in kernels.backends().values():
        m, masks = mod.first_countermodel(2, [], (0, 0, 1, 0), 3, 3, 4)
        assert (m, tuple(masks)) == (2, (1, 2))

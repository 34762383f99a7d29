"""Backend selection for the model enumeration kernels.

The compiled ``_kernels`` extension is used when it imports; otherwise, or
when ``INTERQUANT_PURE_PYTHON`` is set to a non-empty value other than "0",
the pure-Python ``_kernels_py`` module is used. Both expose
``first_countermodel`` and ``mood_table`` with identical results.
"""

import os

from . import _kernels_py

_force_python = os.environ.get("INTERQUANT_PURE_PYTHON", "") not in ("", "0")

try:
    if _force_python:
        raise ImportError("pure-Python backend forced")
    from . import _kernels as _impl
    BACKEND = "compiled"
except ImportError:
    _impl = _kernels_py
    BACKEND = "python"

first_countermodel = _impl.first_countermodel
mood_table = _impl.mood_table


def backends():
    """Available backend modules by name, compiled first when present."""
    out = {}
    try:
        from . import _kernels
        out["compiled"] = _kernels
    except ImportError:
        pass
    out["python"] = _kernels_py
    return out

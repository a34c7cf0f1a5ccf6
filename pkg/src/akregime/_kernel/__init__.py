"""Kleshchev kernel selection: compiled extension if built, else pure Python.

Both implementations expose `kleshchev_verdicts(e, classes, shifts, mps)`
and `good_node(e, classes, shifts, mp, residue)` with identical semantics;
`BACKEND` records which one is active.
"""

from . import pykernel

try:
    from . import _ckernel as _impl

    BACKEND = "c"
except ImportError:
    _impl = pykernel
    BACKEND = "python"

kleshchev_verdicts = _impl.kleshchev_verdicts
good_node = _impl.good_node

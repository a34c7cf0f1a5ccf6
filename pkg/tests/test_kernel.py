"""The compiled kernel and the pure-Python fallback must be interchangeable."""

from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from akregime import _kernel
from akregime._kernel import pykernel
from akregime.combinatorics import enumerate_multipartitions

ckernel = pytest.importorskip(
    "akregime._kernel._ckernel", reason="compiled kernel not built"
)


def test_selected_backend_is_compiled_when_available():
    assert _kernel.BACKEND == "c"
    assert _kernel.kleshchev_verdicts is ckernel.kleshchev_verdicts


@pytest.mark.parametrize("m,n", [(1, 4), (2, 4), (3, 3)])
@pytest.mark.parametrize("e", [0, 2, 3, 5, 7])
def test_verdicts_agree_exhaustively(m, n, e):
    mps = enumerate_multipartitions(m, n)
    bound = e if e else 2 * n
    for classes in ((0,) * m, tuple(range(m))):
        for shifts in product(range(bound), repeat=m):
            pure = pykernel.kleshchev_verdicts(e, classes, shifts, mps)
            compiled = ckernel.kleshchev_verdicts(e, classes, shifts, mps)
            assert pure == compiled


@settings(max_examples=150, deadline=None)
@given(
    st.integers(min_value=1, max_value=3),
    st.sampled_from([0, 2, 3, 4, 5, 6, 9]),
    st.data(),
)
def test_good_node_agrees(m, e, data):
    shifts = tuple(
        data.draw(st.integers(min_value=0, max_value=(e or 8) - 1)) for _ in range(m)
    )
    classes = data.draw(st.sampled_from([(0,) * m, tuple(range(m))]))
    mps = enumerate_multipartitions(m, data.draw(st.integers(min_value=0, max_value=4)))
    mp = data.draw(st.sampled_from(list(mps)))
    for cls in set(classes):
        for exp in range(-4, 5):
            residue = (cls, exp % e if e else exp)
            assert pykernel.good_node(e, classes, shifts, mp, residue) == \
                ckernel.good_node(e, classes, shifts, mp, residue)

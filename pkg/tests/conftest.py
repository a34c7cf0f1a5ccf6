from fractions import Fraction

import pytest

from akregime.oracle import SweepGrid, regime_locus
from akregime.params import KappaInput, ParamScheme, scheme_from_kappa


@pytest.fixture(scope="session")
def default_sweep_rows():
    """The full default grid, evaluated once per test session."""
    import time

    start = time.perf_counter()
    rows = regime_locus(SweepGrid())
    return {"rows": rows, "seconds": time.perf_counter() - start}


@pytest.fixture(scope="session")
def regime_instances():
    """Almost-semisimple parameter points across m = 1, 2, 3, mixing
    infinite and finite order, both witness orientations, and kappa-derived
    schemes."""
    instances = [
        # (scheme, n, kappa or None)
        (ParamScheme(m=2, e=0, classes=(0, 0), shifts=(0, 1)), 2, None),
        (ParamScheme(m=2, e=0, classes=(0, 0), shifts=(1, 0)), 2, None),
        (ParamScheme(m=2, e=5, classes=(0, 0), shifts=(0, 2)), 3, None),
        (ParamScheme(m=3, e=0, classes=(0, 1, 1), shifts=(0, 2, 0)), 3, None),
        (ParamScheme(m=3, e=5, classes=(0, 1, 1), shifts=(0, 0, 2)), 3, None),
        (ParamScheme(m=3, e=0, classes=(0, 0, 0), shifts=(0, 3, 7)), 4, None),
    ]
    for kappa in (
        KappaInput(m=1, n=2, kappa00=Fraction(1, 2)),
        KappaInput(m=1, n=3, kappa00=Fraction(2, 3)),
        KappaInput(m=2, n=2, kappa00=Fraction(1, 3), kappa=(Fraction(1, 6),)),
        KappaInput(m=3, n=3, kappa00=Fraction(1, 5), kappa=(Fraction(11, 15), Fraction(0))),
    ):
        instances.append((scheme_from_kappa(kappa), kappa.n, kappa))
    return instances

from akregime.combinatorics import enumerate_multipartitions
from akregime.oracle import (
    ALMOST_SEMISIMPLE,
    SweepGrid,
    grid_points,
    locus_summary,
    oracle_good_node,
    oracle_kind,
    oracle_kleshchev,
    oracle_simple_count,
    regime_locus,
    verify_lemmas,
)
from akregime.params import ParamScheme
from akregime.simples import good_node, is_kleshchev, simple_count
from akregime.structure import classify_regime

REGIME_M2 = ParamScheme(m=2, e=0, classes=(0, 0), shifts=(0, 1))
REGIME_M3 = ParamScheme(m=3, e=0, classes=(0, 1, 1), shifts=(0, 2, 0))
LEMMA_NAMES = (
    "no-extra-relations",
    "contents-disjoint",
    "content-determines-part",
    "outside-content-transfers",
    "row-column-gap",
    "witness-content-transfers",
)


def test_oracle_examples():
    assert oracle_kleshchev(REGIME_M2, ((), ()))
    assert not oracle_kleshchev(REGIME_M2, ((2,), ()))
    assert oracle_simple_count(REGIME_M2, 2) == 4


def test_oracle_agrees_with_fast_path_on_schemes():
    schemes = [
        (REGIME_M2, 4),
        (REGIME_M3, 4),
        (ParamScheme(m=2, e=3, classes=(0, 0), shifts=(0, 2)), 4),
        (ParamScheme(m=3, e=4, classes=(0, 0, 0), shifts=(0, 1, 2)), 3),
        (ParamScheme(m=2, e=2, classes=(0, 1), shifts=(0, 0)), 4),
        (ParamScheme(m=1, e=3, classes=(0,), shifts=(0,)), 4),
    ]
    for scheme, n in schemes:
        for size in range(n + 1):
            for mp in enumerate_multipartitions(scheme.m, size):
                assert oracle_kleshchev(scheme, mp) == is_kleshchev(scheme, mp).is_kleshchev


def test_oracle_good_node_agrees():
    for scheme, n in [(REGIME_M2, 3), (ParamScheme(m=2, e=4, classes=(0, 0), shifts=(0, 1)), 3)]:
        for mp in enumerate_multipartitions(scheme.m, n):
            for cls in set(scheme.classes):
                exps = range(scheme.e) if scheme.e else range(-n, n + 1)
                for exp in exps:
                    mine = oracle_good_node(scheme, mp, (cls, exp))
                    fast = good_node(scheme, mp, (cls, exp))
                    assert mine == (tuple(fast) if fast else None)


def test_lemma_suite_passes_on_regime_points(regime_instances):
    for scheme, n, _ in regime_instances:
        if scheme.m == 1:
            continue  # lemma hypotheses need a witness pair
        reports = verify_lemmas(scheme, n)
        assert tuple(reports) == LEMMA_NAMES
        for report in reports.values():
            assert report.passed, report


def test_lemma_negative_control():
    # Two in-window relations: u_2 = q^2 u_1 and u_3 = q^2 u_2.
    corrupted = ParamScheme(m=3, e=0, classes=(0, 0, 0), shifts=(0, 2, 4))
    reports = verify_lemmas(corrupted, 3)
    bad = reports["no-extra-relations"]
    assert not bad.passed
    assert bad.counterexample is not None


def test_grid_contains_patterns_and_dedups_translation():
    grid = SweepGrid(m_values=(2,), n_values=(2,), e_values=(0, 3))
    points = list(grid_points(grid))
    schemes = {scheme.describe() for _, _, scheme in points}
    assert "e=0;class=0,0;shift=0,1" in schemes
    assert "e=0;class=0,1;shift=0,1" in schemes
    # translated copies are canonicalized away
    assert "e=0;class=0,0;shift=1,2" not in schemes
    assert all(min(s.shifts) == 0 or s.e > 0 for _, _, s in points)


def test_locus_small_grid_no_disagreements():
    rows = regime_locus(SweepGrid(m_values=(1, 2), n_values=(2, 3)))
    summary = locus_summary(rows)
    assert summary["disagreements"] == 0
    assert summary["prediction_mismatches"] == 0
    assert summary["regime_points"] > 0


def test_exceptional_block_matches_family_across_sweep(default_sweep_rows):
    # Content grouping and the structural prediction are independent routes;
    # on every swept regime point they must agree: the lambda family is the
    # one non-singleton block and everything else is alone in its block.
    from akregime.blocks import block_partition, lambda_family
    from akregime.combinatorics import multipartition_count
    from akregime.structure import family_orientation

    checked = 0
    for row in default_sweep_rows["rows"]:
        if row.fast_kind != ALMOST_SEMISIMPLE or row.m == 1:
            continue
        report = classify_regime(row.scheme, row.n)
        family = lambda_family(row.scheme, row.n, family_orientation(report.witness))
        partition = block_partition(row.scheme, row.n)
        assert partition.exceptional_index is not None
        exceptional = partition.blocks[partition.exceptional_index]
        assert set(exceptional) == set(family)
        assert len(partition.blocks) == multipartition_count(row.m, row.n) - row.n
        for idx, block in enumerate(partition.blocks):
            if idx != partition.exceptional_index:
                assert len(block) == 1
        checked += 1
    assert checked > 0


def test_locus_regime_rows_match_fast_classification():
    rows = regime_locus(SweepGrid(m_values=(2,), n_values=(2,)))
    for row in rows:
        assert row.oracle_kind == oracle_kind(row.scheme, row.n)
        assert row.fast_kind == classify_regime(row.scheme, row.n).kind
        if row.fast_kind == ALMOST_SEMISIMPLE:
            count, _ = simple_count(row.scheme, row.n)
            assert count == row.scheme.m**0 * len(
                enumerate_multipartitions(row.scheme.m, row.n)
            ) - 1

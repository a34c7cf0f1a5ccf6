import pytest

from akregime.combinatorics import (
    enumerate_multipartitions,
    mp_size,
    multipartition_count,
    remove_node,
)
from akregime.params import ParamScheme, Residue, residue_of
from akregime.simples import (
    ariki_semisimple,
    good_node,
    is_kleshchev,
    min_order_check,
    simple_count,
)

REGIME_M2 = ParamScheme(m=2, e=0, classes=(0, 0), shifts=(0, 1))


def test_single_row_at_order_e_has_no_good_node():
    # A row of e boxes when q has order e: the only removable node is not
    # normal (the addable node at the start of row 2 shares its residue).
    scheme = ParamScheme(m=1, e=3, classes=(0,), shifts=(0,))
    residue = residue_of(scheme, (1, 1, 3))
    assert good_node(scheme, ((3,),), residue) is None


def test_good_node_vacuously_normal():
    assert good_node(REGIME_M2, ((1,), (1,)), Residue(0, 1)) == (2, 1, 1)


def test_good_node_on_empty():
    for exp in range(-2, 3):
        assert good_node(REGIME_M2, ((), ()), Residue(0, exp)) is None


def test_good_node_rejects_q_one():
    with pytest.raises(ValueError):
        good_node(ParamScheme(m=1, e=1, classes=(0,), shifts=(0,)), ((1,),), Residue(0, 0))


def test_kleshchev_examples():
    assert not is_kleshchev(REGIME_M2, ((2,), ())).is_kleshchev
    verdict = is_kleshchev(REGIME_M2, ((1,), (1,)))
    assert verdict.is_kleshchev
    assert [node for node, _ in verdict.witness_path] == [(2, 1, 1), (1, 1, 1)]


def test_witness_path_replays_to_empty():
    for scheme, n in [
        (REGIME_M2, 2),
        (ParamScheme(m=3, e=5, classes=(0, 1, 1), shifts=(0, 0, 2)), 3),
        (ParamScheme(m=2, e=4, classes=(0, 1), shifts=(0, 2)), 4),
    ]:
        for mp in enumerate_multipartitions(scheme.m, n):
            verdict = is_kleshchev(scheme, mp)
            if not verdict.is_kleshchev:
                assert verdict.witness_path == ()
                continue
            assert len(verdict.witness_path) == n
            current = mp
            for node, residue in verdict.witness_path:
                assert residue_of(scheme, node) == residue
                assert good_node(scheme, current, residue) == node
                current = remove_node(current, node)
            assert mp_size(current) == 0


def test_simple_count_q_one_merged_pair():
    scheme = ParamScheme(m=2, e=1, classes=(0, 0), shifts=(0, 0))
    count, non_simple = simple_count(scheme, 2)
    assert count == 2
    assert set(non_simple) == {((2,), ()), ((1, 1), ()), ((1,), (1,))}


def test_simple_count_regime():
    count, non_simple = simple_count(REGIME_M2, 2)
    assert (count, non_simple) == (4, (((2,), ()),))


def test_simple_count_generic_is_full():
    scheme = ParamScheme(m=3, e=0, classes=(0, 1, 2), shifts=(0, 0, 0))
    for n in (1, 2, 3, 4):
        count, non_simple = simple_count(scheme, n)
        assert count == multipartition_count(3, n)
        assert non_simple == ()


def test_ariki_semisimple_examples():
    assert ariki_semisimple(ParamScheme(m=2, e=0, classes=(0, 1), shifts=(0, 0)), 3)
    assert not ariki_semisimple(ParamScheme(m=1, e=2, classes=(0,), shifts=(0,)), 2)
    assert not ariki_semisimple(REGIME_M2, 2)
    # q = 1 with distinct parameters is the semisimple group algebra.
    assert ariki_semisimple(ParamScheme(m=2, e=1, classes=(0, 1), shifts=(0, 0)), 4)
    assert not ariki_semisimple(ParamScheme(m=2, e=1, classes=(0, 0), shifts=(0, 0)), 2)


def test_min_order_check():
    assert min_order_check(ParamScheme(m=1, e=3, classes=(0,), shifts=(0,)), 2)
    assert not min_order_check(ParamScheme(m=1, e=2, classes=(0,), shifts=(0,)), 2)
    assert min_order_check(ParamScheme(m=1, e=0, classes=(0,), shifts=(0,)), 9)


def test_count_invariant_under_shift_translation():
    for base, n in [((0, 1), 2), ((0, 2), 3)]:
        for e in (0, 5, 6):
            reference = None
            for offset in range(4):
                scheme = ParamScheme(
                    m=2, e=e, classes=(0, 0), shifts=tuple(s + offset for s in base)
                )
                count, _ = simple_count(scheme, n)
                if reference is None:
                    reference = count
                assert count == reference

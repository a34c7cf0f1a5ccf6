from fractions import Fraction

import pytest

from akregime.bn import (
    SizeMismatchError,
    associativity_violations,
    build_bn,
    multiply,
    regular_representation,
    regular_representation_consistent,
    verify_parameter_independence,
)
from akregime.params import KappaInput, ParamScheme, scheme_from_kappa
from akregime.structure import block_structure, classify_regime


def label_index(algebra):
    return {name: idx for idx, name in enumerate(algebra.basis)}


def test_dimension_is_4n_minus_2():
    for n in list(range(1, 11)) + [20, 50]:
        assert build_bn(n).dimension == 4 * n - 2


def test_n1_is_dual_numbers():
    algebra = build_bn(1)
    assert algebra.basis == ("e_1", "xi_1")
    idx = label_index(algebra)
    assert algebra.product(idx["xi_1"], idx["xi_1"]) == ()
    assert algebra.product(idx["e_1"], idx["xi_1"]) == ((idx["xi_1"], 1),)


def test_n2_relations():
    algebra = build_bn(2)
    assert algebra.dimension == 6
    idx = label_index(algebra)
    assert algebra.product(idx["f_2_1"], idx["f_1_2"]) == ((idx["xi_1"], 1),)
    assert algebra.product(idx["f_1_2"], idx["f_2_1"]) == ((idx["xi_2"], 1),)


def test_idempotents_orthogonal_and_sum_to_identity():
    algebra = build_bn(4)
    idx = label_index(algebra)
    ids = [idx[f"e_{i}"] for i in range(1, 5)]
    for a in ids:
        for b in ids:
            expected = ((a, 1),) if a == b else ()
            assert algebra.product(a, b) == expected
    identity = tuple((a, 1) for a in sorted(ids))
    for b in range(algebra.dimension):
        assert multiply(algebra, identity, ((b, 1),)) == ((b, 1),)
        assert multiply(algebra, ((b, 1),), identity) == ((b, 1),)


def test_loop_and_arrow_relations():
    for n in (2, 3, 5):
        algebra = build_bn(n)
        idx = label_index(algebra)
        for i in range(1, n + 1):
            xi = idx[f"xi_{i}"]
            assert algebra.product(xi, xi) == ()
        arrows = [name for name in algebra.basis if name.startswith("f_")]
        loops = [name for name in algebra.basis if name.startswith("xi_")]
        for f in arrows:
            for xi in loops:
                assert algebra.product(idx[f], idx[xi]) == ()
                assert algebra.product(idx[xi], idx[f]) == ()
        # round trips produce the loop at the starting vertex
        for i in range(1, n):
            down_up = algebra.product(idx[f"f_{i}_{i + 1}"], idx[f"f_{i + 1}_{i}"])
            assert down_up == ((idx[f"xi_{i + 1}"], 1),)
            up_down = algebra.product(idx[f"f_{i + 1}_{i}"], idx[f"f_{i}_{i + 1}"])
            assert up_down == ((idx[f"xi_{i}"], 1),)
        # longer moves die in zero Hom spaces
        for i in range(1, n - 1):
            assert algebra.product(idx[f"f_{i + 1}_{i + 2}"], idx[f"f_{i}_{i + 1}"]) == ()
            assert algebra.product(idx[f"f_{i + 1}_{i}"], idx[f"f_{i + 2}_{i + 1}"]) == ()


@pytest.mark.parametrize("n", range(1, 11))
def test_associativity_all_triples(n):
    assert associativity_violations(build_bn(n)) == []


@pytest.mark.parametrize("n", range(1, 11))
def test_regular_representation_is_homomorphism(n):
    assert regular_representation_consistent(build_bn(n))


def test_regular_representation_matrices():
    algebra = build_bn(2)
    idx = label_index(algebra)
    mats = regular_representation(algebra)
    dim = algebra.dimension
    for i in (1, 2):
        mat = mats[idx[f"e_{i}"]]
        assert all(mat[r][c] in (0, 1) for r in range(dim) for c in range(dim))
        square = [
            [sum(mat[r][k] * mat[k][c] for k in range(dim)) for c in range(dim)]
            for r in range(dim)
        ]
        assert square == mat
        xi = mats[idx[f"xi_{i}"]]
        xi_sq = [
            [sum(xi[r][k] * xi[k][c] for k in range(dim)) for c in range(dim)]
            for r in range(dim)
        ]
        assert all(x == 0 for row in xi_sq for x in row)
    f12, f21 = mats[idx["f_1_2"]], mats[idx["f_2_1"]]
    product = [
        [sum(f12[r][k] * f21[k][c] for k in range(dim)) for c in range(dim)]
        for r in range(dim)
    ]
    assert product == mats[idx["xi_2"]]


def test_radical_cube_zero_and_semisimple_quotient():
    for n in (1, 2, 3, 6):
        algebra = build_bn(n)
        radical = [i for i, d in enumerate(algebra.grading) if d >= 1]
        assert len(algebra.basis) - len(radical) == n
        for a in radical:
            for b in radical:
                for idx, _ in algebra.product(a, b):
                    assert algebra.grading[idx] >= 2
                    for c in radical:
                        assert multiply(
                            algebra, algebra.product(a, b), ((c, 1),)
                        ) == ()


def test_hom_space_dimensions_match_cartan():
    for n in (1, 2, 3, 5):
        algebra = build_bn(n)
        for a in range(1, n + 1):
            for b in range(1, n + 1):
                count = sum(
                    1
                    for i in range(algebra.dimension)
                    if algebra.source[i] == a and algebra.target[i] == b
                )
                expected = 2 if a == b else (1 if abs(a - b) == 1 else 0)
                assert count == expected


def test_structure_constants_zero_or_one():
    for n in (1, 2, 4, 7):
        algebra = build_bn(n)
        for combo in algebra.mult.values():
            assert len(combo) <= 1
            for _, coeff in combo:
                assert coeff == 1


def test_parameter_independence_across_m():
    instances = []
    for scheme, n in [
        (ParamScheme(m=2, e=0, classes=(0, 0), shifts=(0, 1)), 2),
        (ParamScheme(m=3, e=5, classes=(0, 1, 1), shifts=(0, 0, 1)), 2),
    ]:
        report = classify_regime(scheme, n)
        instances.append(block_structure(report, scheme, n))
    assert verify_parameter_independence(instances[0], instances[1])


def test_parameter_independence_includes_m1():
    kappa = KappaInput(m=1, n=2, kappa00=Fraction(1, 2))
    scheme1 = scheme_from_kappa(kappa)
    report1 = classify_regime(scheme1, 2, kappa=kappa)
    bs1 = block_structure(report1, scheme1, 2)
    scheme2 = ParamScheme(m=2, e=0, classes=(0, 0), shifts=(0, 1))
    bs2 = block_structure(classify_regime(scheme2, 2), scheme2, 2)
    assert verify_parameter_independence(bs1, bs2)


def test_parameter_independence_size_mismatch():
    scheme2 = ParamScheme(m=2, e=0, classes=(0, 0), shifts=(0, 1))
    scheme3 = ParamScheme(m=2, e=0, classes=(0, 0), shifts=(0, 2))
    bs2 = block_structure(classify_regime(scheme2, 2), scheme2, 2)
    bs3 = block_structure(classify_regime(scheme3, 3), scheme3, 3)
    with pytest.raises(SizeMismatchError):
        verify_parameter_independence(bs2, bs3)


def test_table_text_deterministic():
    assert build_bn(3).table_text() == build_bn(3).table_text()
    lines = build_bn(2).table_text().splitlines()
    assert lines[0] == "basis=e_1,e_2,xi_1,xi_2,f_1_2,f_2_1"
    assert "f_2_1,f_1_2,xi_1" in lines
    assert "f_1_2,f_2_1,xi_2" in lines

import random
from fractions import Fraction
from math import factorial

import pytest

from commvar.chartab import (
    GradedClassFunction,
    NotACharacterError,
    character_table,
    decompose_graded,
    inner_product,
    mn_character,
    recombine_graded,
)
from commvar.exact_poly import ExactPoly
from commvar.partitions import partitions_of
from commvar.weyl import CartanType, weyl_data


def hook_dimension(lam):
    """Standard Young tableaux count by the hook length formula (test oracle)."""
    hooks = 1
    for i, row in enumerate(lam):
        for j in range(row):
            arm = row - j - 1
            leg = sum(1 for r in lam[i + 1 :] if r > j)
            hooks *= arm + leg + 1
    return factorial(sum(lam)) // hooks


def test_mn_values():
    assert mn_character((2, 1), (1, 1, 1)) == 2
    assert mn_character((2, 1), (3,)) == -1
    assert mn_character((1, 1, 1, 1), (2, 1, 1)) == -1


def test_mn_size_mismatch():
    with pytest.raises(ValueError, match="size mismatch"):
        mn_character((2, 1), (2, 2))


def test_table_s2():
    table = character_table(2)
    assert table.rows == ((2,), (1, 1))
    assert table.columns == ((1, 1), (2,))
    assert table.values == ((1, 1), (1, -1))


def test_table_s3():
    table = character_table(3)
    assert table.rows == ((3,), (1, 1, 1), (2, 1))
    assert table.columns == ((1, 1, 1), (2, 1), (3,))
    assert table.values == ((1, 1, 1), (1, -1, 1), (2, 0, -1))


def test_table_s4():
    table = character_table(4)
    assert table.rows == ((4,), (1, 1, 1, 1), (2, 2), (3, 1), (2, 1, 1))
    assert table.columns == ((1, 1, 1, 1), (2, 1, 1), (3, 1), (4,), (2, 2))
    assert table.values == (
        (1, 1, 1, 1, 1),
        (1, -1, 1, -1, 1),
        (2, 0, -1, 0, 2),
        (3, 1, 0, -1, -1),
        (3, -1, 0, 1, -1),
    )
    assert table.column_labels() == ("(1)", "(12)", "(123)", "(1234)", "(12)(34)")


def test_chi_numbering():
    table = character_table(4)
    assert table.chi_index((4,)) == 1
    assert table.chi_index((1, 1, 1, 1)) == 2
    assert table.chi_index((2, 2)) == 3
    assert table.chi_index((3, 1)) == 4
    assert table.chi_index((2, 1, 1)) == 5


def test_row_orthogonality():
    for m in range(1, 8):
        table = character_table(m)
        order = factorial(m)
        for i, row_i in enumerate(table.values):
            for j, row_j in enumerate(table.values):
                dot = sum(
                    size * a * b for size, a, b in zip(table.class_sizes, row_i, row_j)
                )
                assert dot == (order if i == j else 0)


def test_column_orthogonality():
    for m in range(1, 8):
        table = character_table(m)
        order = factorial(m)
        k = len(table.columns)
        for a in range(k):
            for b in range(k):
                dot = sum(row[a] * row[b] for row in table.values)
                expected = order // table.class_sizes[a] if a == b else 0
                assert dot == expected


def test_dimensions_match_hook_formula():
    for m in range(1, 8):
        identity = (1,) * m
        for lam in partitions_of(m):
            assert mn_character(lam, identity) == hook_dimension(lam)


def test_sum_of_squared_dimensions():
    for m in range(2, 8):
        table = character_table(m)
        assert sum(row[0] ** 2 for row in table.values) == factorial(m)


def test_table_cap():
    with pytest.raises(ValueError):
        character_table(11)
    with pytest.raises(ValueError):
        character_table(0)


def test_inner_product_orthonormality():
    wd = weyl_data(CartanType("A", 2))
    table = character_table(3)
    trivial = table.row((3,))
    standard = table.row((2, 1))
    sign = table.row((1, 1, 1))
    assert inner_product(trivial, trivial, wd) == 1
    assert inner_product(standard, standard, wd) == 1
    assert inner_product(trivial, sign, wd) == 0


def test_inner_product_s2():
    wd = weyl_data(CartanType("A", 1))
    assert inner_product((1, 1), (1, -1), wd) == 0
    assert inner_product((1, 1), (1, 1), wd) == 1


def test_inner_product_length_mismatch():
    wd = weyl_data(CartanType("A", 2))
    with pytest.raises(ValueError):
        inner_product((1, 1), (1, 1, 1), wd)


def test_graded_class_function_round_trip():
    wd = weyl_data(CartanType("A", 3))
    polys = [cls.det_poly for cls in wd.classes]
    gcf = GradedClassFunction.from_class_polys(wd, polys)
    assert gcf.class_polys() == polys


def test_decompose_recombine_random_characters():
    rng = random.Random(424242)
    wd = weyl_data(CartanType("A", 3))
    table = character_table(4)
    for _ in range(10):
        # random non-negative integer combination of irreducibles per degree
        polys = [ExactPoly.zero() for _ in wd.classes]
        for row in table.values:
            mult = ExactPoly({d: rng.randint(0, 3) for d in range(4)})
            for j, chi in enumerate(row):
                polys[j] = polys[j] + mult * chi
        gcf = GradedClassFunction.from_class_polys(wd, polys)
        decomposition = decompose_graded(gcf, table)
        assert recombine_graded(decomposition, table, wd) == gcf


def test_decompose_rejects_non_character():
    wd = weyl_data(CartanType("A", 1))
    table = character_table(2)
    bogus = GradedClassFunction(wd, ((0, (Fraction(1), Fraction(0))),))
    with pytest.raises(NotACharacterError):
        decompose_graded(bogus, table)


def test_decompose_rejects_wrong_group():
    wd = weyl_data(CartanType("B", 2))
    gcf = GradedClassFunction.from_class_polys(wd, [c.det_poly for c in wd.classes])
    with pytest.raises(ValueError):
        decompose_graded(gcf, character_table(3))

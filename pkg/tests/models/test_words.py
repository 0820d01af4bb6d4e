"""
Модульные тесты для слов в образующих и таблицы соотношений
"""
import sys
import os

import pytest
from hypothesis import given

# Добавляем путь к src в PYTHONPATH
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', '..', 'src'))
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))

from algebra_models.errors import AlgebraError, IndexRangeError, ParseError
from algebra_models.words import GeneratorWord, expand_xi, expand_yi, parse_word, relation_table, sigma, x, y
from strategies import words


class TestParseWord:
    """Разбор и печать слов"""

    def test_letters_in_order(self):
        word = parse_word("s1 * y1^-1 * x2", 2)
        assert word.letters == (sigma(1), y(1, -1), x(2))

    def test_empty_is_identity(self):
        assert parse_word("", 3) == GeneratorWord.identity(3)
        assert len(parse_word("   ", 3)) == 0

    def test_power_expands(self):
        assert parse_word("s1^2*y1^-2", 2).letters == (sigma(1), sigma(1), y(1, -1), y(1, -1))
        assert len(parse_word("s1^0", 2)) == 0

    def test_index_out_of_range(self):
        with pytest.raises(IndexRangeError):
            parse_word("x3", 2)
        with pytest.raises(IndexRangeError):
            parse_word("s2", 2)

    @pytest.mark.parametrize("text", ["s1 *", "s1 s1", "* s1", "q1", "s1 ** x1"])
    def test_syntax_errors(self, text):
        with pytest.raises(ParseError):
            parse_word(text, 2)

    def test_print_compresses_runs(self):
        assert str(parse_word("s1*s1*y1^-1", 2)) == "s1^2 * y1^-1"

    def test_inverse(self):
        assert parse_word("s1*y1", 2).inverse() == parse_word("y1^-1*s1^-1", 2)

    def test_product_checks_kappa(self):
        with pytest.raises(AlgebraError):
            parse_word("x1", 2) * parse_word("x1", 3)

    @given(words(3, max_length=6))
    def test_parse_inverts_print(self, word):
        assert parse_word(str(word), 3) == word


class TestExpansion:
    """x_i и y_i через x_1, y_1 и sigma_j"""

    def test_first_index(self):
        assert expand_xi(1, 2).letters == (x(1),)
        assert expand_yi(1, 2).letters == (y(1),)

    def test_second_index(self):
        assert expand_xi(2, 2).letters == (sigma(1), x(1), sigma(1))
        assert expand_yi(2, 2).letters == (sigma(1), y(1), sigma(1))

    def test_third_index(self):
        assert expand_xi(3, 3).letters == (sigma(2), sigma(1), x(1), sigma(1), sigma(2))
        assert expand_yi(3, 4).letters == (sigma(2), sigma(1), y(1), sigma(1), sigma(2))

    def test_out_of_range(self):
        with pytest.raises(IndexRangeError):
            expand_yi(3, 2)


class TestRelationTable:
    """Экземпляры соотношений (1)-(9)"""

    @pytest.mark.parametrize("kappa, count", [(1, 1), (2, 5), (3, 8), (4, 12)])
    def test_instance_counts(self, kappa, count):
        assert len(relation_table(kappa)) == count

    def test_rank_one_keeps_only_the_last_relation(self):
        (relation,) = relation_table(1)
        assert relation.label == 9
        assert str(relation.rhs) == "c^2"

    def test_braid_instance(self):
        braid = [r for r in relation_table(3) if r.label == 2]
        assert [(str(r.lhs), str(r.rhs)) for r in braid] == [("s1 * s2 * s1", "s2 * s1 * s2")]

    def test_far_commutation_instances(self):
        far = [r for r in relation_table(4) if r.label == 1]
        assert [str(r) for r in far] == ["(1) s1 * s3 = s3 * s1"]

    def test_quadratic_relation(self):
        (quadratic,) = [r for r in relation_table(2) if r.label == 8]
        assert str(quadratic) == "(8) s1^2 = (s - s^-1)*s1 + 1"

    def test_last_relation(self):
        (last,) = [r for r in relation_table(2) if r.label == 9]
        assert str(last.lhs) == "x1^-1 * y1 * x1 * y1^-1"
        assert str(last.rhs) == "c^2*s1^2"

    def test_labels_sorted(self):
        labels = [r.label for r in relation_table(4)]
        assert labels == sorted(labels)

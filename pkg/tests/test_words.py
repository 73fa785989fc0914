import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from digitwitness import words
from digitwitness.words import (
    AllZerosWordError,
    Word,
    concat_power,
    count_in_integer,
    expansion,
    gamma,
    occurrences,
    parse_word,
    split_leading_zeros,
    word_value,
)


def scan_count(pattern, text):
    """Quadratic-time position-by-position oracle."""
    l = len(pattern)
    return sum(
        text[i:i + l] == pattern for i in range(len(text) - l + 1)
    )


def test_expansion_worked_example():
    assert expansion(20202, 10).text() == "20202"


def test_expansion_zero():
    assert expansion(0, 7).text() == "0"


def test_expansion_power_of_base():
    for q in (2, 3, 10, 16):
        assert expansion(q ** 5, q).digits == (1, 0, 0, 0, 0, 0)


def test_expansion_rejects_bad_base():
    with pytest.raises(ValueError):
        expansion(5, 1)


@given(st.integers(min_value=0, max_value=10 ** 40),
       st.integers(min_value=2, max_value=64))
def test_expansion_round_trip(n, q):
    e = expansion(n, q)
    assert word_value(Word(q, e.digits), q) == n
    if n >= 1:
        assert e.digits[0] != 0


def test_occurrences_worked_example():
    assert occurrences(parse_word("202", 10), parse_word("20202", 10)) == 2


def test_word_occurs_once_in_itself():
    w = parse_word("1305", 10)
    assert occurrences(w, w) == 1


def test_occurrences_overlapping():
    assert occurrences(parse_word("11", 10), parse_word("111111", 10)) == 5


def test_occurrences_base_mismatch():
    with pytest.raises(ValueError):
        occurrences(parse_word("1", 2), parse_word("11", 3))


def test_occurrences_empty_word():
    with pytest.raises(ValueError):
        occurrences(Word(10, ()), parse_word("11", 10))


@given(st.integers(min_value=2, max_value=6), st.data())
def test_occurrences_matches_scan_oracle(q, data):
    v = data.draw(st.lists(st.integers(0, q - 1), min_size=1, max_size=1000))
    w = data.draw(st.lists(st.integers(0, q - 1), min_size=1, max_size=5))
    got = occurrences(Word(q, tuple(w)), Word(q, tuple(v)))
    assert got == scan_count("".join(map(str, w)), "".join(map(str, v)))


def test_count_in_integer_examples():
    assert count_in_integer(parse_word("202", 10), 20202, 10) == 2
    assert count_in_integer(parse_word("5", 10), 0, 10) == 0
    # independent expansion + scan oracle
    digits = expansion(3 ** 7, 3).text()
    assert count_in_integer(parse_word("12", 3), 3 ** 7, 3) == \
        scan_count("12", digits)


@given(st.integers(min_value=0, max_value=10 ** 30),
       st.integers(min_value=2, max_value=10), st.data())
def test_count_in_integer_agrees_with_expansion_scan(n, q, data):
    w = data.draw(st.lists(st.integers(0, q - 1), min_size=1, max_size=4))
    word = Word(q, tuple(w))
    assert count_in_integer(word, n, q) == occurrences(word, expansion(n, q))


@given(st.integers(min_value=0, max_value=10 ** 20),
       st.integers(min_value=0, max_value=6),
       st.integers(min_value=2, max_value=10), st.data())
def test_zero_suffix_monotonicity(n, s, q, data):
    w = data.draw(st.lists(st.integers(0, q - 1), min_size=1, max_size=3))
    word = Word(q, tuple(w))
    assert count_in_integer(word, n * q ** s, q) >= count_in_integer(word, n, q)


def test_concat_power_worked_example():
    assert concat_power(parse_word("20", 10), 3).text() == "202020"


def test_concat_power_identity_and_empty():
    w = parse_word("413", 10)
    assert concat_power(w, 1) == w
    assert concat_power(w, 0).is_empty


def test_gamma_worked_examples():
    assert gamma(parse_word("2020", 10)) == 2
    for q in (2, 3, 10):
        for l in range(1, 9):
            assert gamma(Word(q, (0,) * l)) == l
            assert gamma(Word(q, (q - 1,) * l)) == l
    assert gamma(parse_word("12", 3)) == 1


@given(st.integers(min_value=2, max_value=10), st.data())
def test_gamma_bounds(q, data):
    w = Word(q, tuple(
        data.draw(st.lists(st.integers(0, q - 1), min_size=1, max_size=8))
    ))
    assert 1 <= gamma(w) <= w.length
    assert gamma(Word(q, (w.digits[0],))) == 1


@settings(max_examples=60)
@given(st.integers(min_value=2, max_value=6),
       st.integers(min_value=0, max_value=8), st.data())
def test_shift_count_identity(q, k, data):
    w = Word(q, tuple(
        data.draw(st.lists(st.integers(0, q - 1), min_size=1, max_size=5))
    ))
    assert occurrences(w, concat_power(w, k + 1)) == 1 + k * gamma(w)


def test_split_leading_zeros():
    k, tail = split_leading_zeros(parse_word("0012", 10))
    assert (k, tail.text()) == (2, "12")
    k, tail = split_leading_zeros(parse_word("500", 10))
    assert (k, tail.text()) == (0, "500")
    with pytest.raises(AllZerosWordError):
        split_leading_zeros(parse_word("000", 10))


def test_word_value():
    assert word_value(parse_word("12", 3), 3) == 5
    assert word_value(Word(5, (0, 0, 0, 1)), 5) == 1


def test_word_value_horner_oracle():
    # w^L 0^c 1 target built from pieces matches a direct Horner pass
    w = parse_word("21", 3)
    digits = w.digits * 4 + (0,) * 2 + (1,)
    acc = 0
    for d in digits:
        acc = acc * 3 + d
    assert word_value(Word(3, digits), 3) == acc


def test_text_format_large_base():
    w = parse_word("19,3,0", 20)
    assert w.digits == (19, 3, 0)
    assert w.text() == "19,3,0"
    with pytest.raises(ValueError):
        parse_word("1930", 20)


def test_word_rejects_digit_out_of_range():
    with pytest.raises(ValueError):
        Word(3, (0, 3))

import pytest

from cogbasic.rules import analyze_fact, normalize_value


def test_negated_copula_sentence():
    fa = analyze_fact("The sky is not clear.")
    assert fa.polarity == "negative"
    assert fa.subject_key == ("sky", "is", "clear")
    assert fa.value_slot is None


def test_positive_counterpart_shares_subject_key():
    pos = analyze_fact("The sky is clear.")
    neg = analyze_fact("The sky is not clear.")
    assert pos.polarity == "positive"
    assert pos.subject_key == neg.subject_key


def test_absolute_quantifier():
    fa = analyze_fact("The alarm always rings.")
    assert fa.quantifier == "absolute-always"
    assert fa.subject_key == ("alarm", "rings")


def test_never_is_both_negation_and_absolute():
    fa = analyze_fact("The alarm never rings.")
    assert fa.quantifier == "absolute-never"
    assert fa.polarity == "negative"
    assert fa.subject_key == ("alarm", "rings")


def test_qualified_quantifier():
    assert analyze_fact("The alarm sometimes rings.").quantifier == "qualified"
    assert analyze_fact("The office usually opens early.").quantifier == "qualified"


def test_numeric_value_slot():
    fa = analyze_fact("The shop opens at 9.")
    assert fa.value_slot == "9"
    assert fa.subject_key == ("shop", "opens", "at")


def test_time_suffix_value_slot():
    fa = analyze_fact("The train departs at 10am.")
    assert fa.value_slot == "10am"
    assert fa.subject_key == ("train", "departs", "at")


def test_last_numeric_token_wins():
    fa = analyze_fact("The tower has 300 steps.")
    assert fa.value_slot == "300"
    assert fa.subject_key == ("tower", "has", "steps")


def test_category_value_after_copula():
    fa = analyze_fact("The door is red.")
    assert fa.value_slot == "red"
    assert fa.subject_key == ("door", "is")


def test_plain_adjective_stays_in_subject_key():
    fa = analyze_fact("The museum is open.")
    assert fa.value_slot is None
    assert fa.subject_key == ("museum", "is", "open")


def test_contraction_expansion():
    fa = analyze_fact("The heater isn't working.")
    assert fa.polarity == "negative"
    assert fa.subject_key == ("heater", "is", "working")


@pytest.mark.parametrize(
    "a,b,equal",
    [
        ("9", "9am", True),
        ("9", "09:00", True),
        ("9am", "09:00", True),
        ("9", "10", False),
        ("12am", "0:00", True),
        ("12pm", "12:00", True),
        ("300", "300", True),
        ("300", "320", False),
        ("red", "green", False),
        ("red", "red", True),
    ],
)
def test_value_normalization(a, b, equal):
    assert (normalize_value(a) == normalize_value(b)) is equal


def test_large_numbers_are_not_times():
    assert normalize_value("300").startswith("num:")
    assert normalize_value("23") == "t:1380"
    assert normalize_value("24").startswith("num:")

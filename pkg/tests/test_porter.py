"""Unit coverage for the stemmer; full reference-pair conformance runs in
the acceptance suite."""

from importlib import resources

import pytest

from threatlens.text.porter import porter_stem

# Per-rule behavior from the published table, checked on the step that
# introduces it plus the full cascade where the later steps do not fire.
STEP_CASES = [
    ("caresses", "caress"),
    ("ponies", "poni"),
    ("ties", "ti"),
    ("caress", "caress"),
    ("cats", "cat"),
    ("feed", "feed"),
    ("plastered", "plaster"),
    ("bled", "bled"),
    ("motoring", "motor"),
    ("sing", "sing"),
    ("sized", "size"),
    ("hopping", "hop"),
    ("tanned", "tan"),
    ("falling", "fall"),
    ("hissing", "hiss"),
    ("fizzed", "fizz"),
    ("failing", "fail"),
    ("filing", "file"),
    ("happy", "happi"),
    ("sky", "sky"),
    ("relational", "relat"),
    ("digitizer", "digit"),
    ("operator", "oper"),
    ("feudalism", "feudal"),
    ("decisiveness", "decis"),
    ("hopefulness", "hope"),
    ("callousness", "callous"),
    ("formaliti", "formal"),
    ("sensitiviti", "sensit"),
    ("sensibiliti", "sensibl"),
    ("triplicate", "triplic"),
    ("formative", "form"),
    ("formalize", "formal"),
    ("electriciti", "electr"),
    ("electrical", "electr"),
    ("hopeful", "hope"),
    ("goodness", "good"),
    ("revival", "reviv"),
    ("allowance", "allow"),
    ("inference", "infer"),
    ("airliner", "airlin"),
    ("gyroscopic", "gyroscop"),
    ("adjustable", "adjust"),
    ("defensible", "defens"),
    ("irritant", "irrit"),
    ("replacement", "replac"),
    ("adjustment", "adjust"),
    ("dependent", "depend"),
    ("adoption", "adopt"),
    ("homologou", "homolog"),
    ("communism", "commun"),
    ("activate", "activ"),
    ("angulariti", "angular"),
    ("homologous", "homolog"),
    ("effective", "effect"),
    ("bowdlerize", "bowdler"),
    ("probate", "probat"),
    ("rate", "rate"),
    ("cease", "ceas"),
    ("controll", "control"),
    ("roll", "roll"),
]


@pytest.mark.parametrize("word,expected", STEP_CASES)
def test_published_rule_examples(word, expected):
    assert porter_stem(word) == expected


def test_non_alphabetic_tokens_pass_through():
    assert porter_stem("1000") == "1000"
    assert porter_stem("win24") == "win24"
    assert porter_stem("") == ""


def test_short_words_still_follow_the_rules():
    # the published cascade has no length bypass
    assert porter_stem("as") == "a"
    assert porter_stem("is") == "i"
    assert porter_stem("by") == "by"


def test_output_never_longer_than_input_plus_one():
    words = resources.files("threatlens.text").joinpath(
        "data", "stemmer_vocabulary.txt").read_text("utf-8").split()
    for word in words[:2000]:
        assert len(porter_stem(word)) <= len(word) + 1


def test_restemming_is_stable_on_the_bundled_list():
    data = resources.files("threatlens.text")
    stems = data.joinpath("data", "stemmer_stems.txt").read_text("utf-8").split()
    for stem in stems[:2000]:
        assert porter_stem(stem) == stem

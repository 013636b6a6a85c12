import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from threatlens.urls.lexical import LEXICAL_FEATURE_NAMES, extract_lexical_features
from threatlens.urls.parsing import MalformedUrl, parse_url


def features(raw):
    return extract_lexical_features(raw, parse_url(raw))


def test_dot_count():
    assert features("http://a.b.c.com")["nb_dots"] == 3


def test_url_length():
    assert features("http://example.com")["length_url"] == 18


def test_ratio_digits_url_against_character_count_oracle():
    raw = "http://abc123.com"
    expected = sum(ch.isdigit() for ch in raw) / len(raw)  # 3/17
    assert features(raw)["ratio_digits_url"] == pytest.approx(expected, abs=1e-12)
    assert features(raw)["ratio_digits_url"] == pytest.approx(3 / 17, abs=1e-12)


def test_counts_are_over_the_raw_string_not_the_prefixed_one():
    # scheme-less paste: the added http:// must not inflate counts
    f = features("example.com/a//b")
    assert f["length_url"] == len("example.com/a//b")
    assert f["nb_slash"] == 3
    assert f["nb_dslash"] == 1


def test_percent_encoding_counted_verbatim():
    f = features("http://x.com/a%2Fb%2Fc")
    assert f["nb_percent"] == 2
    assert f["nb_slash"] == 3  # encoded slashes are not decoded


def test_ip_and_punycode_and_port_flags():
    assert features("http://192.168.1.1/x")["ip"] == 1
    assert features("http://example.com/x")["ip"] == 0
    assert features("http://xn--pypal-4ve.com/")["punycode"] == 1
    assert features("http://example.com:8080/")["port"] == 1
    assert features("http://example.com/")["port"] == 0


def test_shortener_membership_is_exact_host_match():
    assert features("http://bit.ly/abc")["shortening_service"] == 1
    assert features("http://notbit.ly.evil.com/abc")["shortening_service"] == 0


def test_tld_and_subdomain_features():
    f = features("http://com.evil.example.com/download.com.html")
    assert f["tld_in_subdomain"] == 1
    assert f["tld_in_path"] == 1
    assert f["nb_subdomains"] == 2  # com.evil
    assert features("http://pay-pal.com/")["prefix_suffix"] == 1
    assert features("http://paypal.com/")["prefix_suffix"] == 0


def test_http_token_in_path():
    assert features("http://x.com/redir?u=http://evil")["http_in_path"] == 0
    assert features("http://x.com/http/evil")["http_in_path"] == 1


def test_dslash_counted_after_scheme_only():
    assert features("http://x.com/a//b")["nb_dslash"] == 1
    assert features("http://x.com/ab")["nb_dslash"] == 0


def test_all_registered_features_present_and_finite():
    f = features("https://sub.pay-pal.co.uk:8080/login%20now?a=1&b=2#frag")
    assert set(f) == set(LEXICAL_FEATURE_NAMES)
    for name, value in f.items():
        assert isinstance(value, (int, float)), name
        assert math.isfinite(value), name


def test_determinism():
    raw = "http://sub.example.com/a?b=1"
    assert features(raw) == features(raw)


_URL_CHARS = "abcdefghijklmnopqrstuvwxyz0123456789._~%-/?&=@:$*,;|"


@given(host_labels=st.lists(
    st.text(alphabet="abcdefghijklmnopqrstuvwxyz0123456789-", min_size=1, max_size=6),
    min_size=1, max_size=3),
    tail=st.text(alphabet=_URL_CHARS, max_size=24))
def test_count_features_are_nonnegative_integers(host_labels, tail):
    raw = "http://" + ".".join(host_labels) + "/" + tail
    try:
        f = features(raw)
    except MalformedUrl:
        return
    for name, value in f.items():
        assert math.isfinite(value)
        if name.startswith(("nb_", "length_", "char_", "phish_")):
            assert isinstance(value, int) and value >= 0, name


@given(tail=st.text(alphabet="abcdefghijklmnopqrstuvwxyz0123456789._/-", max_size=20),
       query=st.text(alphabet="abcdefghijklmnopqrstuvwxyz0123456789=&?", min_size=1, max_size=16))
def test_removing_query_never_increases_query_scoped_counts(tail, query):
    with_query = f"http://example.com/{tail}?{query}"
    without = f"http://example.com/{tail}"
    try:
        f_with = features(with_query)
        f_without = features(without)
    except MalformedUrl:
        return
    for name in ("nb_qm", "nb_and", "nb_eq"):
        assert f_without[name] <= f_with[name]

import io

import pytest
from hypothesis import given
from hypothesis import strategies as st

from sentimarket.errors import DataError
from sentimarket.textpipe import (
    DEFAULT_KEYWORDS,
    KeywordSet,
    clean_text,
    load_keyword_file,
    match_keywords,
    parse_tweet_file,
    parse_tweet_rows,
    split_cjk,
)


class TestCleanText:
    def test_url_and_emoji_removed(self):
        assert clean_text("Masks work! https://t.co/abc \U0001f637") == "Masks work!"

    def test_empty_fixed_point(self):
        assert clean_text("") == ""

    def test_entity_decode_and_collapse(self):
        assert clean_text("stay  home &amp; stay safe") == "stay home & stay safe"

    def test_mentions_removed(self):
        assert clean_text("hey @someone_123 what now") == "hey what now"

    def test_case_preserved(self):
        assert clean_text("Mixed CASE Stays") == "Mixed CASE Stays"

    def test_control_characters_removed(self):
        cleaned = clean_text("a\tb\nc\x00d​e")
        assert cleaned == "a b c d e"
        assert not any(ch for ch in cleaned if ord(ch) < 32)

    def test_other_languages_kept(self):
        assert clean_text("el virus se propaga rápido") == "el virus se propaga rápido"

    @given(st.text(max_size=200))
    def test_idempotent(self, text):
        once = clean_text(text)
        assert clean_text(once) == once

    @given(
        st.text(
            alphabet=st.characters(blacklist_categories=("Cs",), blacklist_characters="&"),
            max_size=200,
        )
    )
    def test_never_longer_without_entities(self, text):
        assert len(clean_text(text).encode()) <= len(text.encode())


class TestSplitCjk:
    def test_chinese_split(self):
        assert split_cjk("新冠病毒 test") == "新 冠 病 毒 test"

    def test_no_cjk_untouched(self):
        assert split_cjk("hello world") == "hello world"

    def test_hangul_with_latin_boundary(self):
        assert split_cjk("테스트ok") == "테 스 트 ok"

    def test_katakana(self):
        assert split_cjk("コロナ") == "コ ロ ナ"

    @given(st.text(max_size=200))
    def test_idempotent(self, text):
        once = split_cjk(text)
        assert split_cjk(once) == once


class TestMatchKeywords:
    def test_table_phrases(self):
        got = match_keywords("Stay home and wear a mask", DEFAULT_KEYWORDS)
        assert got == ["mask", "stay home"]

    def test_no_keywords(self):
        assert match_keywords("nice weather today", DEFAULT_KEYWORDS) == []

    def test_word_boundary_blocks_lockdown(self):
        got = match_keywords("Wuhan lockdown, no toilet paper anywhere", DEFAULT_KEYWORDS)
        assert got == ["wuhan", "toilet paper"]

    def test_substring_not_matched(self):
        assert match_keywords("the unmasked crowd", DEFAULT_KEYWORDS) == []

    def test_case_insensitive(self):
        lower = match_keywords("pandemic panic buying", DEFAULT_KEYWORDS)
        upper = match_keywords("PANDEMIC PANIC BUYING", DEFAULT_KEYWORDS)
        assert lower == upper == ["pandemic", "panic buying"]

    def test_hyphenated_phrase(self):
        assert "covid-19" in match_keywords("tested covid-19 positive", DEFAULT_KEYWORDS)

    def test_misspelled_table_entry_kept_with_correction(self):
        assert "asymptonmatic" in DEFAULT_KEYWORDS.epidemic
        assert "asymptomatic" in DEFAULT_KEYWORDS.epidemic

    def test_section_restriction(self):
        text = "pandemic hoarding of pasta"
        assert match_keywords(text, DEFAULT_KEYWORDS, ("epidemic",)) == ["pandemic"]
        assert match_keywords(text, DEFAULT_KEYWORDS, ("panic-buying",)) == ["pasta", "hoarding"]

    def test_output_subset_of_keywordset(self):
        got = match_keywords("mask virus flour rice corona", DEFAULT_KEYWORDS)
        allowed = set(DEFAULT_KEYWORDS.phrases())
        assert set(got) <= allowed

    def test_empty_keywordset_rejected(self):
        with pytest.raises(DataError):
            KeywordSet((), ())

    def test_unnormalized_phrase_rejected(self):
        with pytest.raises(DataError):
            KeywordSet(("Mask",), ())


class TestParseTweets:
    def test_two_rows_sorted(self, tmp_path):
        path = tmp_path / "tweets.csv"
        path.write_text(
            "timestamp,text\n"
            "2020-03-12T15:00:00Z,later tweet about the virus\n"
            "2020-03-12T14:00:00Z,earlier tweet\n"
        )
        records = parse_tweet_file(path)
        assert len(records) == 2
        assert records[0].text == "earlier tweet"
        assert records[0].timestamp < records[1].timestamp

    def test_keyword_matching_applied(self):
        fh = io.StringIO(
            'timestamp,text\n2020-03-12T14:00:00Z,"markets crashing, pandemic panic"\n'
        )
        records = parse_tweet_rows(fh)
        assert records[0].matched_keywords == ["pandemic"]

    def test_bad_timestamp_cites_line(self):
        fh = io.StringIO("timestamp,text\nnot-a-date,hello\n")
        with pytest.raises(DataError, match=r"line 2.*not-a-date"):
            parse_tweet_rows(fh)

    def test_short_row_cites_line(self):
        fh = io.StringIO("timestamp,text\n2020-01-01T00:00:00Z,ok\nlonely-field\n")
        with pytest.raises(DataError, match="line 3"):
            parse_tweet_rows(fh)

    def test_empty_file_is_empty_sequence(self):
        assert parse_tweet_rows(io.StringIO("")) == []
        assert parse_tweet_rows(io.StringIO("timestamp,text\n")) == []

    def test_wrong_header_rejected(self):
        with pytest.raises(DataError, match="header"):
            parse_tweet_rows(io.StringIO("time,message\n"))

    def test_invalid_utf8_rejected(self, tmp_path):
        path = tmp_path / "bad.csv"
        path.write_bytes(b"timestamp,text\n2020-01-01T00:00:00Z,\xff\xfe broken\n")
        with pytest.raises(DataError, match="UTF-8"):
            parse_tweet_file(path)


class TestKeywordFile:
    def test_round_trip(self, tmp_path):
        path = tmp_path / "kw.txt"
        path.write_text(
            "# custom keywords\n[epidemic]\nvirus\nnew variant\n\n[panic-buying]\ncanned food\n"
        )
        ks = load_keyword_file(path)
        assert ks.epidemic == ("virus", "new variant")
        assert ks.panic_buying == ("canned food",)

    def test_phrase_before_section_rejected(self, tmp_path):
        path = tmp_path / "kw.txt"
        path.write_text("virus\n[epidemic]\n")
        with pytest.raises(DataError, match="before any section"):
            load_keyword_file(path)

    def test_unknown_section_rejected(self, tmp_path):
        path = tmp_path / "kw.txt"
        path.write_text("[weather]\nrain\n")
        with pytest.raises(DataError, match="unknown section"):
            load_keyword_file(path)

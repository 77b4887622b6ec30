"""Code block extraction and class-name island parsing."""

from collections import Counter

from hypothesis import given
from hypothesis import strategies as st

from rack.codeextract import (
    JAVA_RESERVED,
    CodeBlock,
    count_api_tokens,
    extract_answer_apis,
    extract_code_blocks,
    load_whitelist,
    parse_api_tokens,
)

FIG1_ANSWER = (
    "<p>Have a look at the <b>MessageDigest API</b>:</p>"
    "<pre><code>MessageDigest md = MessageDigest.getInstance(\"MD5\");\n"
    "md.update(text.getBytes());\nbyte[] digest = md.digest();</code></pre>"
    "<p>upvoted 305 times</p>"
)


class TestExtractCodeBlocks:
    def test_single_block(self):
        blocks = extract_code_blocks("<p>use</p><code>MessageDigest md = ...;</code>")
        assert [b.text for b in blocks] == ["MessageDigest md = ...;"]

    def test_no_code(self):
        assert extract_code_blocks("<p>no code here</p>") == []

    def test_two_blocks_in_order(self):
        html = "<code>first()</code><p>then</p><code>second()</code>"
        assert [b.text for b in extract_code_blocks(html)] == ["first()", "second()"]

    def test_nested_markup_flattened(self):
        blocks = extract_code_blocks("<code>a<b>bold</b>c</code>")
        assert [b.text for b in blocks] == ["aboldc"]

    def test_entities_decoded(self):
        blocks = extract_code_blocks("<code>List&lt;String&gt; xs;</code>")
        assert blocks[0].text == "List<String> xs;"

    def test_unclosed_code_still_captured(self):
        blocks = extract_code_blocks("<p>x</p><code>Dangling foo(")
        assert [b.text for b in blocks] == ["Dangling foo("]

    def test_answer_id_attached(self):
        blocks = extract_code_blocks("<code>x</code>", answer_id="42")
        assert blocks[0].answer_id == "42"

    @given(st.text(max_size=200))
    def test_never_raises(self, html):
        extract_code_blocks(html)


class TestParseApiTokens:
    def test_message_digest(self):
        text = 'MessageDigest md = MessageDigest.getInstance("MD5")'
        assert parse_api_tokens(text) == {"MessageDigest"}

    def test_no_camel_case(self):
        assert parse_api_tokens("int x = 5;") == set()

    def test_qualified_and_plain_names(self):
        assert parse_api_tokens("Document doc = Jsoup.parse(html);") == {"Document", "Jsoup"}

    def test_single_hump_names_accepted(self):
        assert parse_api_tokens("File f; List l; Map m;") == {"File", "List", "Map"}

    def test_all_caps_rejected(self):
        assert parse_api_tokens('getInstance("MD5") URL HTTP') == set()

    def test_fully_qualified_final_segment(self):
        assert parse_api_tokens("java.util.ArrayList xs;") == {"ArrayList"}

    def test_digits_allowed_inside(self):
        assert parse_api_tokens("Sha256Digest d;") == {"Sha256Digest"}

    def test_accepts_code_block(self):
        assert parse_api_tokens(CodeBlock(text="HashSet s;")) == {"HashSet"}

    @given(st.text(max_size=120))
    def test_output_invariants(self, text):
        for name in parse_api_tokens(text):
            assert name[0].isupper()
            assert any(ch.islower() for ch in name)
            assert all(ch.isalnum() and ch.isascii() for ch in name)
            assert name not in JAVA_RESERVED


class TestCountApiTokens:
    def test_occurrence_counts(self):
        counts = count_api_tokens("MessageDigest a; MessageDigest b; Jsoup c;")
        assert counts == Counter({"MessageDigest": 2, "Jsoup": 1})


class TestExtractAnswerApis:
    def test_no_code_answer(self):
        assert extract_answer_apis("<p>plain prose</p>") == set()

    def test_showcase_answer(self):
        apis = extract_answer_apis(FIG1_ANSWER)
        assert "MessageDigest" in apis
        # the bolded prose mention is water, not land
        assert apis == {"MessageDigest"}

    def test_empty_whitelist_blocks_everything(self):
        assert extract_answer_apis(FIG1_ANSWER, whitelist=set()) == set()

    def test_whitelist_restricts(self):
        html = "<code>Jsoup Document File</code>"
        assert extract_answer_apis(html, whitelist={"Document", "Element"}) == {"Document"}

    @given(st.text(max_size=100), st.text(max_size=100))
    def test_insensitive_to_non_code_content(self, before, after):
        core = "<code>HashSet set = new HashSet();</code>"
        baseline = extract_answer_apis(core)
        mutated = extract_answer_apis(
            f"<p>{before.replace('<', ' ').replace('>', ' ')}</p>{core}"
            f"<div>{after.replace('<', ' ').replace('>', ' ')}</div>"
        )
        assert mutated == baseline

    @given(
        st.sets(st.sampled_from(["Alpha", "Bravo", "Charlie", "Delta", "Echo"])),
        st.sets(st.sampled_from(["Alpha", "Bravo", "Charlie", "Delta", "Echo"])),
    )
    def test_whitelisted_subset_of_unrestricted(self, names, allowed):
        html = "<code>" + " ".join(sorted(names)) + "</code>"
        assert extract_answer_apis(html, whitelist=allowed) <= extract_answer_apis(html)


def test_load_whitelist(tmp_path):
    path = tmp_path / "classes.txt"
    path.write_text("# classes\nFile\nList # builtin\n\nJsoup\n", encoding="utf-8")
    assert load_whitelist(path) == {"File", "List", "Jsoup"}

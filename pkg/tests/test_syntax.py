import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lct.grammar import LANGUAGES, Category, load_grammar
from lct.syntax import (
    extract_identifiers,
    identifier_sites,
    iter_nodes,
    node_kinds,
    parse,
    unique_names,
)

ADD = "def add_two_numbers(first_value):\n    return first_value\n"


def test_empty_input_spans_nothing():
    root = parse("", "python").root_node
    assert (root.start_byte, root.end_byte) == (0, 0)


def test_python_root_kind():
    assert parse("def f():\n    return 1\n", "python").root_node.type == "module"


def test_malformed_c_has_error_node():
    tree = parse("int main( {", "c")
    assert tree.root_node.has_error
    assert any(n.is_error or n.is_missing for n in iter_nodes(tree))


def test_add_two_numbers_captures():
    caps = extract_identifiers(ADD, "python")
    assert [(c.text, c.category) for c in caps] == [
        ("add_two_numbers", Category.FUNCTION),
        ("first_value", Category.PARAMETER),
    ]
    # The parameter capture is the declaration, not the use in the return.
    assert caps[1].start_byte == ADD.index("first_value")


def test_self_gives_no_capture():
    code = "class Box:\n    def grow(self, amount):\n        self.size = amount\n"
    names = {c.text for c in extract_identifiers(code, "python")}
    assert "self" not in names
    assert {"Box", "grow", "amount"} <= names


def test_unique_names_first_occurrence():
    assert unique_names(extract_identifiers(ADD, "python")) == [
        ("add_two_numbers", Category.FUNCTION),
        ("first_value", Category.PARAMETER),
    ]


def test_sites_for_first_value():
    sites = identifier_sites(parse(ADD, "python"), ADD, {"first_value"})
    assert len(sites) == 2
    assert all(ADD.encode()[s:e].decode() == n == "first_value" for s, e, n in sites)


def test_sites_need_names():
    with pytest.raises(ValueError):
        identifier_sites(parse(ADD, "python"), ADD, set())


def test_string_and_comment_are_not_sites():
    code = 'int count_items = 1; /* count_items */ char *s = "count_items";\n'
    sites = identifier_sites(parse(code, "c"), code, {"count_items"})
    assert [s for s, _, _ in sites] == [code.index("count_items")]


def test_captures_inside_error_region_are_skipped():
    code = "int main( { int long_variable_name = 3;"
    for cap in extract_identifiers(code, "c"):
        assert code.encode()[cap.start_byte:cap.end_byte].decode() == cap.text


def test_multibyte_offsets_are_bytes():
    code = 's = "ünïcödé"\nlong_counter_name = 1\n'
    (cap,) = [c for c in extract_identifiers(code, "python") if c.text == "long_counter_name"]
    assert code.encode()[cap.start_byte:cap.end_byte] == b"long_counter_name"


def test_capture_to_dict():
    d = extract_identifiers(ADD, "python")[0].to_dict()
    assert d["category"] == "F" and d["parent_kind"] == "function_definition"


def test_captures_respect_rules(corpus_records):
    for rec in corpus_records:
        rules = load_grammar(rec.language)
        for cap in extract_identifiers(rec.source_code, rec.language, rules):
            assert rules.parent_kinds[cap.parent_kind] is cap.category
            assert cap.text not in rules.reserved


def test_extraction_subset_of_sites(corpus_records):
    for rec in corpus_records:
        caps = extract_identifiers(rec.source_code, rec.language)
        names = {c.text for c in caps}
        sites = identifier_sites(parse(rec.source_code, rec.language), rec.source_code, names)
        assert {(c.start_byte, c.end_byte, c.text) for c in caps} <= set(sites)


def test_extraction_is_deterministic(corpus_records):
    for rec in corpus_records[:10]:
        assert extract_identifiers(rec.source_code, rec.language) == extract_identifiers(rec.source_code, rec.language)


def test_node_kinds_nonempty():
    assert node_kinds(parse("x = 1\n", "python"))[0] == "module"


_names = st.from_regex(r"[a-z][a-z0-9_]{0,20}", fullmatch=True)


@settings(max_examples=60, deadline=None)
@given(st.lists(_names, min_size=1, max_size=6), st.sampled_from(LANGUAGES))
def test_sites_slice_to_name(names, language):
    code = "\n".join(f"{n} = {n} + 1" for n in names) + "\n"
    sites = identifier_sites(parse(code, language), code, set(names))
    raw = code.encode()
    assert all(raw[s:e].decode() == n for s, e, n in sites)
    assert sites == sorted(sites)

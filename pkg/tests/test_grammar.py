import keyword
import re

import pytest

from lct.grammar import (
    LANGUAGES,
    Category,
    MalformedRules,
    UnsupportedLanguage,
    classify_parent,
    is_reserved,
    load_grammar,
    parse_rules,
)
from lct.syntax import get_language

# Reference parent kinds per category, across all five grammars.
CATEGORY_KINDS = {
    Category.FUNCTION: [
        "compact_constructor_declaration",
        "constructor_declaration",
        "method_declaration",
        "function_declaration",
        "function_definition",
        "function_declarator",
    ],
    Category.DECLARATION: [
        "variable_declarator",
        "declaration",
        "array_declarator",
        "var_spec",
        "initializer_pair",
        "pointer_declarator",
    ],
    Category.CLASS: [
        "class_definition",
        "class_declaration",
        "interface_declaration",
        "enum_declaration",
        "annotation_type_declaration",
    ],
    Category.EXPRESSION: [
        "assignment_expression",
        "initializer_list",
        "assignment",
        "parenthesized_expression",
        "array_initializer",
    ],
    Category.PARAMETER: [
        "optional_parameter_declaration",
        "typed_parameter",
        "parameter_declaration",
        "receiver_parameter",
        "formal_parameter",
        "lambda_parameters",
        "default_parameter",
    ],
}


def named_kinds(language):
    lang = get_language(language)
    return {
        lang.node_kind_for_id(i)
        for i in range(lang.node_kind_count)
        if lang.node_kind_is_named(i) and lang.node_kind_is_visible(i)
    }


def test_exactly_five_categories():
    assert [c.value for c in Category] == ["F", "D", "C", "E", "P"]


@pytest.mark.parametrize("tag", ["X", "f", "", "FD", "Function"])
def test_category_parse_rejects_unknown(tag):
    with pytest.raises(ValueError):
        Category.parse(tag)


@pytest.mark.parametrize(
    "spec, expected",
    [("F,D,C,E,P", set(Category)), ("FP", {Category.FUNCTION, Category.PARAMETER}), ("-", set()), ("", set())],
)
def test_category_parse_set(spec, expected):
    assert Category.parse_set(spec) == expected


def test_load_java_method_declaration_is_function():
    assert load_grammar("java").parent_kinds["method_declaration"] is Category.FUNCTION


def test_load_python_reserves_print():
    assert "print" in load_grammar("python").reserved


def test_unsupported_language():
    with pytest.raises(UnsupportedLanguage):
        load_grammar("haskell")


@pytest.mark.parametrize(
    "language, kind, expected",
    [
        ("java", "class_declaration", Category.CLASS),
        ("java", "formal_parameter", Category.PARAMETER),
        ("java", "binary_expression", None),
        ("c", "pointer_declarator", Category.DECLARATION),
        ("go", "var_spec", Category.DECLARATION),
        ("python", "default_parameter", Category.PARAMETER),
    ],
)
def test_classify_parent(language, kind, expected):
    assert classify_parent(load_grammar(language), kind) is expected


@pytest.mark.parametrize(
    "language, name, expected",
    [
        ("python", "self", True),
        ("java", "return", True),
        ("java", "this", True),
        ("java", "static", True),
        ("cpp", "cout", True),
        ("c", "my_helper_function", False),
        ("python", "Self", False),
    ],
)
def test_is_reserved(language, name, expected):
    assert is_reserved(load_grammar(language), name) is expected


@pytest.mark.parametrize("language", LANGUAGES)
def test_table_kinds_present_in_every_grammar(language):
    rules = load_grammar(language)
    inventory = named_kinds(language)
    assert rules.parent_kinds
    for category, kinds in CATEGORY_KINDS.items():
        for kind in kinds:
            if kind in inventory:
                assert rules.parent_kinds.get(kind) is category, (language, kind)


@pytest.mark.parametrize("language", LANGUAGES)
def test_parent_kinds_exist_in_grammar(language):
    # Every configured kind is a real node kind of that grammar.
    assert set(load_grammar(language).parent_kinds) <= named_kinds(language)


@pytest.mark.parametrize("language", LANGUAGES)
def test_reserved_never_placeholder_shaped(language):
    assert not any(re.fullmatch(r"id_[0-9]+", n) for n in load_grammar(language).reserved)


@pytest.mark.parametrize("language", LANGUAGES)
def test_reserved_contains_common_examples(language):
    reserved = load_grammar(language).reserved
    assert {"this", "self", "super", "null", "true", "false", "return", "class", "static"} <= reserved


def test_python_reserves_all_keywords():
    assert set(keyword.kwlist) <= load_grammar("python").reserved


@pytest.mark.parametrize(
    "language, words",
    [
        ("java", "abstract boolean extends implements instanceof interface synchronized throws System out println"),
        ("go", "chan defer fallthrough func go range select nil iota append make fmt"),
        ("c", "auto extern register sizeof struct typedef union volatile printf scanf NULL"),
        ("cpp", "namespace template typename virtual nullptr std cout cin endl vector"),
    ],
)
def test_keyword_sets(language, words):
    assert set(words.split()) <= load_grammar(language).reserved


def test_classify_parent_is_pure():
    rules = load_grammar("cpp")
    assert [classify_parent(rules, "declaration") for _ in range(5)] == [Category.DECLARATION] * 5


def test_load_is_deterministic():
    a = load_grammar("go")
    b = load_grammar("go", None)
    assert a == b


@pytest.mark.parametrize(
    "text",
    [
        "",
        "# only comments\nNOT foo\n",
        "PARENT declaration D\nPARENT declaration E\n",
        "PARENT declaration X\n",
        "PARENT declaration\n",
        "NOT a b\n",
        "NOT id_3\n",
        "BOGUS line\n",
    ],
)
def test_malformed_rules(text):
    with pytest.raises(MalformedRules):
        parse_rules(text, "c")


def test_rules_comment_and_duplicate_same_category():
    rules = parse_rules("PARENT declaration D  # trailing\nPARENT declaration D\nNOT keep_me\n", "c")
    assert dict(rules.parent_kinds) == {"declaration": Category.DECLARATION}
    assert rules.reserved == {"keep_me"}


def test_override_file_and_directory(tmp_path):
    (tmp_path / "c.rules").write_text("PARENT function_declarator F\nNOT blocked_name\n", encoding="utf-8")
    from_dir = load_grammar("c", tmp_path)
    from_file = load_grammar("c", tmp_path / "c.rules")
    assert from_dir == from_file
    assert dict(from_dir.parent_kinds) == {"function_declarator": Category.FUNCTION}


def test_override_missing_file(tmp_path):
    with pytest.raises(MalformedRules):
        load_grammar("c", tmp_path / "nope.rules")

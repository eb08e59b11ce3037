"""Parsing and identifier extraction on tree-sitter concrete syntax trees."""

from __future__ import annotations

import functools
import importlib
from dataclasses import asdict, dataclass
from typing import Iterable, Iterator

import tree_sitter

from lct.errors import LctError
from lct.grammar import Category, GrammarRules, classify_parent, is_reserved, load_grammar, normalize_language

SyntaxTree = tree_sitter.Tree

_GRAMMAR_MODULES = {
    "c": "tree_sitter_c",
    "cpp": "tree_sitter_cpp",
    "java": "tree_sitter_java",
    "go": "tree_sitter_go",
    "python": "tree_sitter_python",
}


class ParserUnavailable(LctError):
    pass


@dataclass(frozen=True)
class IdentifierCapture:
    text: str
    start_byte: int
    end_byte: int
    parent_kind: str
    category: Category

    def to_dict(self) -> dict:
        d = asdict(self)
        d["category"] = self.category.value
        return d


@functools.lru_cache(maxsize=None)
def get_language(language: str) -> tree_sitter.Language:
    lang = normalize_language(language)
    try:
        module = importlib.import_module(_GRAMMAR_MODULES[lang])
    except ImportError as exc:
        raise ParserUnavailable(f"grammar package {_GRAMMAR_MODULES[lang]!r} is not installed") from exc
    return tree_sitter.Language(module.language())


def parse(code: str, language: str) -> SyntaxTree:
    """Parse ``code``; malformed input yields ERROR nodes instead of raising."""
    # Parser objects are not shared so concurrent callers stay independent.
    parser = tree_sitter.Parser(get_language(language))
    return parser.parse(code.encode("utf-8"))


def iter_nodes(tree: SyntaxTree) -> Iterator[tree_sitter.Node]:
    """Pre-order (document order) walk over every node, named or not."""
    cursor = tree.walk()
    while True:
        yield cursor.node
        if cursor.goto_first_child():
            continue
        while not cursor.goto_next_sibling():
            if not cursor.goto_parent():
                return


def node_kinds(tree: SyntaxTree) -> list[str]:
    return [n.type for n in iter_nodes(tree)]


def _in_error(node: tree_sitter.Node) -> bool:
    if node.is_missing:
        return True
    n = node.parent
    while n is not None:
        if n.is_error:
            return True
        n = n.parent
    return False


def extract_identifiers(
    code: str,
    language: str,
    rules: GrammarRules | None = None,
    tree: SyntaxTree | None = None,
) -> list[IdentifierCapture]:
    """Identifier occurrences whose parent kind is acceptable and whose name is not reserved."""
    rules = rules or load_grammar(language)
    tree = tree or parse(code, language)
    src = code.encode("utf-8")
    out = []
    for node in iter_nodes(tree):
        if node.type != rules.identifier_kind or node.parent is None:
            continue
        category = classify_parent(rules, node.parent.type)
        if category is None:
            continue
        text = src[node.start_byte:node.end_byte].decode("utf-8")
        if is_reserved(rules, text) or _in_error(node):
            continue
        out.append(IdentifierCapture(text, node.start_byte, node.end_byte, node.parent.type, category))
    return out


def unique_names(captures: Iterable[IdentifierCapture]) -> list[tuple[str, Category]]:
    seen: dict[str, Category] = {}
    for cap in captures:
        seen.setdefault(cap.text, cap.category)
    return list(seen.items())


def identifier_sites(
    tree: SyntaxTree,
    code: str,
    names: set[str] | frozenset[str],
    identifier_kind: str = "identifier",
) -> list[tuple[int, int, str]]:
    """Byte ranges ``(start, end, name)`` of every identifier-kind node named in ``names``.

    Parent kind is ignored here; string literals and comments never contain
    identifier nodes, so they are left alone.
    """
    if not names:
        raise ValueError("identifier_sites needs at least one name")
    src = code.encode("utf-8")
    sites = []
    for node in iter_nodes(tree):
        if node.type != identifier_kind:
            continue
        text = src[node.start_byte:node.end_byte].decode("utf-8", errors="replace")
        if text in names:
            sites.append((node.start_byte, node.end_byte, text))
    return sites

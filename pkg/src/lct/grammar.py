"""Per-language replacement rules.

A rule file is line oriented::

    # comment
    PARENT <node_kind> <F|D|C|E|P>
    NOT <identifier_text>

``PARENT`` lines name the syntax-node kinds under which an identifier
occurrence makes its name eligible for replacement, and the category that
kind implies. ``NOT`` lines list reserved names that are never replaced.
"""

from __future__ import annotations

import functools
import re
from dataclasses import dataclass, field
from enum import Enum
from importlib import resources
from pathlib import Path
from types import MappingProxyType
from typing import Mapping

from lct.errors import LctError

LANGUAGES = ("c", "cpp", "java", "go", "python")

_PLACEHOLDER_SHAPE = re.compile(r"id_[0-9]+")


class UnsupportedLanguage(LctError):
    pass


class MalformedRules(LctError):
    pass


class Category(str, Enum):
    FUNCTION = "F"
    DECLARATION = "D"
    CLASS = "C"
    EXPRESSION = "E"
    PARAMETER = "P"

    @classmethod
    def parse(cls, tag: str) -> "Category":
        try:
            return cls(tag)
        except ValueError:
            raise ValueError(f"unknown category tag {tag!r}; expected one of F, D, C, E, P") from None

    @classmethod
    def parse_set(cls, spec: str) -> frozenset["Category"]:
        """Parse ``"F,D,P"`` (commas or no separator). ``""`` and ``"-"`` mean the empty set."""
        spec = spec.strip()
        if spec in ("", "-"):
            return frozenset()
        tags = [t for t in re.split(r"[,\s]+", spec) if t]
        if len(tags) == 1 and len(tags[0]) > 1:
            tags = list(tags[0])
        return frozenset(cls.parse(t) for t in tags)

    def __str__(self) -> str:
        return self.value


ALL_CATEGORIES = frozenset(Category)


@dataclass(frozen=True)
class GrammarRules:
    language: str
    parent_kinds: Mapping[str, Category]
    reserved: frozenset[str]
    identifier_kind: str = "identifier"
    source: str = field(default="<bundled>", compare=False)


def normalize_language(language: str) -> str:
    lang = language.strip().lower()
    aliases = {"c++": "cpp", "cxx": "cpp", "golang": "go", "py": "python", "python3": "python"}
    lang = aliases.get(lang, lang)
    if lang not in LANGUAGES:
        raise UnsupportedLanguage(f"unsupported language {language!r}; expected one of {', '.join(LANGUAGES)}")
    return lang


def parse_rules(text: str, language: str, source: str = "<string>") -> GrammarRules:
    parents: dict[str, Category] = {}
    reserved: set[str] = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        where = f"{source}:{lineno}"
        if parts[0] == "PARENT":
            if len(parts) != 3:
                raise MalformedRules(f"{where}: expected 'PARENT <node_kind> <category>'")
            kind = parts[1]
            try:
                category = Category.parse(parts[2])
            except ValueError as exc:
                raise MalformedRules(f"{where}: {exc}") from None
            if parents.get(kind, category) is not category:
                raise MalformedRules(
                    f"{where}: node kind {kind!r} mapped to both {parents[kind]} and {category}"
                )
            parents[kind] = category
        elif parts[0] == "NOT":
            if len(parts) != 2:
                raise MalformedRules(f"{where}: expected 'NOT <identifier>'")
            name = parts[1]
            if _PLACEHOLDER_SHAPE.fullmatch(name):
                raise MalformedRules(f"{where}: reserved name {name!r} has placeholder shape")
            reserved.add(name)
        else:
            raise MalformedRules(f"{where}: unknown directive {parts[0]!r}")
    if not parents:
        raise MalformedRules(f"{source}: no PARENT rules")
    return GrammarRules(
        language=language,
        parent_kinds=MappingProxyType(parents),
        reserved=frozenset(reserved),
        source=source,
    )


@functools.lru_cache(maxsize=None)
def _bundled(language: str) -> GrammarRules:
    res = resources.files("lct") / "rules" / f"{language}.rules"
    return parse_rules(res.read_text(encoding="utf-8"), language, source=f"{language}.rules")


def load_grammar(language: str, path: str | Path | None = None) -> GrammarRules:
    """Load the rules for ``language``.

    ``path`` may point at a replacement rule file, or at a directory holding
    ``<language>.rules``.
    """
    lang = normalize_language(language)
    if path is None:
        return _bundled(lang)
    p = Path(path)
    if p.is_dir():
        p = p / f"{lang}.rules"
    try:
        text = p.read_text(encoding="utf-8")
    except OSError as exc:
        raise MalformedRules(f"cannot read rule file {p}: {exc}") from exc
    return parse_rules(text, lang, source=str(p))


def classify_parent(rules: GrammarRules, parent_kind: str | None) -> Category | None:
    if parent_kind is None:
        return None
    return rules.parent_kinds.get(parent_kind)


def is_reserved(rules: GrammarRules, name: str) -> bool:
    return name in rules.reserved

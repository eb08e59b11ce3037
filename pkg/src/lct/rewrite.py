"""Placeholder assignment, site-based replacement, savings accounting and restoration."""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, NamedTuple, Sequence

from lct import syntax
from lct.errors import LctError
from lct.grammar import ALL_CATEGORIES, Category, GrammarRules, load_grammar
from lct.tokens import Tokenizer

SCHEMA_VERSION = 1
PLACEHOLDER_RE = re.compile(r"id_[0-9]+")

# Word-boundary class shared by collision detection and restoration.
_WORD = re.compile(r"[A-Za-z0-9_]+")
_BOUNDED_PLACEHOLDER = re.compile(r"(?<![A-Za-z0-9_])id_[0-9]+(?![A-Za-z0-9_])")


class OverlappingSites(LctError):
    pass


class MalformedMapping(LctError):
    pass


@dataclass
class MappingEntry:
    original: str
    placeholder: str
    category: Category
    tok_original: int
    tok_placeholder: int
    occurrences: int = 0

    @property
    def replaced(self) -> bool:
        return self.placeholder != self.original

    @property
    def saving(self) -> int:
        return self.tok_original - self.tok_placeholder if self.replaced else 0

    def to_dict(self) -> dict:
        return {
            "original": self.original,
            "placeholder": self.placeholder,
            "category": self.category.value,
            "tok_original": self.tok_original,
            "tok_placeholder": self.tok_placeholder,
            "occurrences": self.occurrences,
        }


@dataclass
class ReplacementMapping:
    language: str
    tokenizer_id: str
    entries: list[MappingEntry] = field(default_factory=list)
    delta_l: int = 0

    def replaced_entries(self) -> list[MappingEntry]:
        return [e for e in self.entries if e.replaced]

    def replaced_names(self) -> set[str]:
        return {e.original for e in self.entries if e.replaced}

    def forward(self) -> dict[str, str]:
        return {e.original: e.placeholder for e in self.entries if e.replaced}

    def backward(self) -> dict[str, str]:
        return {e.placeholder: e.original for e in self.entries if e.replaced}

    def to_dict(self) -> dict:
        return {
            "version": SCHEMA_VERSION,
            "language": self.language,
            "tokenizer_id": self.tokenizer_id,
            "delta_l": self.delta_l,
            "entries": [e.to_dict() for e in self.entries],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False) + "\n"

    @classmethod
    def from_dict(cls, data: dict) -> "ReplacementMapping":
        if data.get("version") != SCHEMA_VERSION:
            raise MalformedMapping(f"unsupported mapping version {data.get('version')!r}")
        try:
            entries = [
                MappingEntry(
                    original=e["original"],
                    placeholder=e["placeholder"],
                    category=Category.parse(e["category"]),
                    tok_original=int(e["tok_original"]),
                    tok_placeholder=int(e["tok_placeholder"]),
                    occurrences=int(e.get("occurrences", 0)),
                )
                for e in data["entries"]
            ]
            mapping = cls(data["language"], data["tokenizer_id"], entries, int(data["delta_l"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise MalformedMapping(f"bad mapping record: {exc}") from exc
        placeholders = [e.placeholder for e in mapping.replaced_entries()]
        if len(set(placeholders)) != len(placeholders):
            raise MalformedMapping("duplicate placeholders in mapping")
        if any(not PLACEHOLDER_RE.fullmatch(p) for p in placeholders):
            raise MalformedMapping("placeholders must look like id_<digits>")
        return mapping

    @classmethod
    def from_json(cls, text: str) -> "ReplacementMapping":
        try:
            return cls.from_dict(json.loads(text))
        except json.JSONDecodeError as exc:
            raise MalformedMapping(f"mapping is not valid JSON: {exc}") from exc

    def save(self, path: str | Path) -> None:
        Path(path).write_text(self.to_json(), encoding="utf-8")

    @classmethod
    def load(cls, path: str | Path) -> "ReplacementMapping":
        return cls.from_json(Path(path).read_text(encoding="utf-8"))


class Savings(NamedTuple):
    delta_l_unique: int
    per_sample_saved: int


def source_words(code: str) -> set[str]:
    """Every maximal ``[A-Za-z0-9_]`` run in the text, strings and comments included."""
    return set(_WORD.findall(code))


def assign_placeholders(
    names: Sequence[tuple[str, Category]],
    tok: Tokenizer,
    forbidden: Iterable[str] = (),
    language: str = "",
) -> ReplacementMapping:
    forbidden = set(forbidden)
    mapping = ReplacementMapping(language=language, tokenizer_id=tok.id)
    index = 0
    for name, category in names:
        while f"id_{index}" in forbidden:
            index += 1
        candidate = f"id_{index}"
        cost_name = tok.token_length(name)
        cost_candidate = tok.token_length(candidate)
        if cost_candidate < cost_name:
            mapping.entries.append(MappingEntry(name, candidate, category, cost_name, cost_candidate))
            mapping.delta_l += cost_name - cost_candidate
            index += 1
        else:
            mapping.entries.append(MappingEntry(name, name, category, cost_name, cost_name))
    return mapping


def apply_mapping(code: str, sites: Sequence[tuple[int, int, str]], mapping: ReplacementMapping) -> str:
    """Swap each site for its placeholder; sets ``occurrences`` on the mapping entries."""
    forward = mapping.forward()
    src = code.encode("utf-8")
    counts = dict.fromkeys(forward, 0)
    out = []
    prev_end = bound = len(src)
    for start, end, name in reversed(sites):
        if not 0 <= start <= end <= bound:
            raise OverlappingSites(f"site [{start}, {end}) overlaps or is out of order")
        bound = start
        placeholder = forward.get(name)
        if placeholder is None:
            continue
        if src[start:end] != name.encode("utf-8"):
            raise OverlappingSites(f"site [{start}, {end}) does not hold {name!r}")
        out.append(src[end:prev_end])
        out.append(placeholder.encode("utf-8"))
        prev_end = start
        counts[name] += 1
    out.append(src[:prev_end])
    for e in mapping.entries:
        e.occurrences = counts.get(e.original, 0) if e.replaced else 0
    return b"".join(reversed(out)).decode("utf-8")


def savings_report(mapping: ReplacementMapping) -> Savings:
    unique = sum(e.saving for e in mapping.entries)
    weighted = sum(e.saving * e.occurrences for e in mapping.entries)
    return Savings(unique, weighted)


def restore(translated: str, mapping: ReplacementMapping) -> tuple[str, list[str]]:
    """Put original names back wherever a replaced placeholder appears as a whole word.

    The translation is treated as raw text, so placeholders inside string
    literals are restored too. Placeholders that never appear are returned
    as unresolved.
    """
    backward = mapping.backward()
    seen: set[str] = set()

    def swap(m: re.Match) -> str:
        original = backward.get(m.group())
        if original is None:
            return m.group()
        seen.add(m.group())
        return original

    restored = _BOUNDED_PLACEHOLDER.sub(swap, translated)
    unresolved = [e.placeholder for e in mapping.replaced_entries() if e.placeholder not in seen]
    return restored, unresolved


def compact(
    code: str,
    language: str,
    tok: Tokenizer,
    categories: Iterable[Category] = ALL_CATEGORIES,
    rules: GrammarRules | None = None,
) -> tuple[str, ReplacementMapping]:
    """Extract, assign and apply in one go; returns the compacted code and its mapping."""
    rules = rules or load_grammar(language)
    allowed = frozenset(categories)
    tree = syntax.parse(code, language)
    captures = [c for c in syntax.extract_identifiers(code, language, rules, tree) if c.category in allowed]
    names = syntax.unique_names(captures)
    forbidden = source_words(code) | rules.reserved
    mapping = assign_placeholders(names, tok, forbidden, language=rules.language)
    replaced = mapping.replaced_names()
    if not replaced:
        return code, mapping
    sites = syntax.identifier_sites(tree, code, replaced, rules.identifier_kind)
    return apply_mapping(code, sites, mapping), mapping

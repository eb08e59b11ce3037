"""End-to-end orchestration: compact, translate, restore; ablation and corpus statistics."""

from __future__ import annotations

import json
import logging
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Iterable, Iterator, Sequence

from lct import rewrite, syntax
from lct.errors import LctError, StageError
from lct.grammar import (
    ALL_CATEGORIES,
    LANGUAGES,
    Category,
    GrammarRules,
    UnsupportedLanguage,
    load_grammar,
    normalize_language,
)
from lct.rewrite import ReplacementMapping
from lct.tokens import DefaultTokenizer, LengthBucket, Tokenizer, bucket_for_length
from lct.translate import Provider, ProviderConfig, TranslationRequest, get_provider

log = logging.getLogger(__name__)

EXTENSIONS = {
    ".c": "c",
    ".h": "c",
    ".cpp": "cpp",
    ".cc": "cpp",
    ".cxx": "cpp",
    ".hpp": "cpp",
    ".java": "java",
    ".go": "go",
    ".py": "python",
}


class Mode(str, Enum):
    NOREP = "norep"
    IDREP = "idrep"


class EmptyCorpus(LctError):
    pass


class IoError(LctError):
    pass


class MalformedRecord(LctError):
    pass


@dataclass
class PipelineResult:
    original: str
    compacted: str
    mapping: ReplacementMapping
    translated: str
    restored: str
    tokens_norep: int
    tokens_idrep: int
    bucket: LengthBucket
    unresolved: list[str]
    source_language: str = ""
    target_language: str = ""
    mode: Mode = Mode.IDREP
    categories: frozenset[Category] = ALL_CATEGORIES
    raw_response: str = ""

    def to_dict(self) -> dict:
        return {
            "source_language": self.source_language,
            "target_language": self.target_language,
            "mode": self.mode.value,
            "categories": category_label(self.categories),
            "tokens_norep": self.tokens_norep,
            "tokens_idrep": self.tokens_idrep,
            "bucket": self.bucket.value,
            "unresolved": list(self.unresolved),
            "mapping": self.mapping.to_dict(),
            "original": self.original,
            "compacted": self.compacted,
            "translated": self.translated,
            "restored": self.restored,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False) + "\n"


@dataclass(frozen=True)
class CorpusRecord:
    source_code: str
    language: str
    sample_id: str


def category_label(categories: Iterable[Category]) -> str:
    order = list(Category)
    return "".join(c.value for c in sorted(categories, key=order.index)) or "-"


def run(
    code: str,
    src: str,
    tgt: str,
    mode: Mode | str = Mode.IDREP,
    categories: Iterable[Category] = ALL_CATEGORIES,
    tok: Tokenizer | None = None,
    cfg: ProviderConfig | None = None,
    provider: Provider | None = None,
    rules: GrammarRules | None = None,
) -> PipelineResult:
    mode = Mode(mode)
    tok = tok or DefaultTokenizer()
    cfg = cfg or ProviderConfig()
    categories = frozenset(categories)
    src, tgt = normalize_language(src), normalize_language(tgt)

    if mode is Mode.NOREP:
        compacted, mapping = code, ReplacementMapping(language=src, tokenizer_id=tok.id)
    else:
        try:
            rules = rules or load_grammar(src)
            compacted, mapping = rewrite.compact(code, src, tok, categories, rules)
        except syntax.ParserUnavailable as exc:
            raise StageError("parse", exc) from exc
        except LctError as exc:
            raise StageError("replace", exc) from exc

    try:
        req = TranslationRequest.build(compacted, src, tgt)
        result = (provider or get_provider(cfg)).complete(req, cfg)
    except (LctError, ValueError) as exc:
        raise StageError("translate", exc) from exc

    try:
        restored, unresolved = rewrite.restore(result.code, mapping)
    except LctError as exc:  # pragma: no cover - restore is total
        raise StageError("restore", exc) from exc

    return PipelineResult(
        original=code,
        compacted=compacted,
        mapping=mapping,
        translated=result.code,
        restored=restored,
        tokens_norep=tok.token_length(code),
        tokens_idrep=tok.token_length(compacted),
        bucket=bucket_for_length(tok.token_length(code)),
        unresolved=unresolved,
        source_language=src,
        target_language=tgt,
        mode=mode,
        categories=categories if mode is Mode.IDREP else frozenset(),
        raw_response=result.raw_response,
    )


def ablate(
    code: str,
    src: str,
    tgt: str,
    category_sets: Sequence[Iterable[Category]],
    tok: Tokenizer | None = None,
    cfg: ProviderConfig | None = None,
    provider: Provider | None = None,
    rules: GrammarRules | None = None,
) -> list[PipelineResult]:
    """One IdRep run per category subset; an empty subset replaces nothing."""
    if not category_sets:
        raise ValueError("ablate needs at least one category set")
    return [run(code, src, tgt, Mode.IDREP, cats, tok, cfg, provider, rules) for cats in category_sets]


def language_from_name(name: str) -> str:
    """Map ids and judge-style labels ("GNU C++17", "Python 3", "Java 8") to a language id."""
    low = name.strip().lower()
    try:
        return normalize_language(low)
    except UnsupportedLanguage:
        pass
    if "++" in low or "cpp" in low:
        return "cpp"
    if low.startswith(("python", "pypy")):
        return "python"
    if low.startswith("java") and not low.startswith("javascript"):
        return "java"
    if low.startswith("go"):
        return "go"
    if low in ("gnu c", "ms c") or low.startswith(("gnu c1", "gnu c9", "c1", "c9")):
        return "c"
    raise UnsupportedLanguage(f"unsupported language label {name!r}")


class Corpus:
    """Iterable of :class:`CorpusRecord` read from a directory tree or a JSON-lines file.

    Unusable entries are skipped; ``malformed`` holds how many were skipped
    once iteration has finished.
    """

    def __init__(self, path: str | Path, jsonl: bool | None = None):
        self.path = Path(path)
        if not self.path.exists():
            raise IoError(f"no such corpus path: {self.path}")
        self.jsonl = self.path.is_file() if jsonl is None else jsonl
        self.malformed = 0

    def __iter__(self) -> Iterator[CorpusRecord]:
        self.malformed = 0
        if self.jsonl:
            yield from self._jsonl()
        elif self.path.is_dir():
            yield from self._directory()
        else:
            yield from self._single_file(self.path, self.path.name)

    def _single_file(self, path: Path, sample_id: str) -> Iterator[CorpusRecord]:
        lang = EXTENSIONS.get(path.suffix.lower())
        if lang is None:
            return
        try:
            code = path.read_text(encoding="utf-8")
        except (OSError, UnicodeDecodeError) as exc:
            log.warning("skipping %s: %s", path, exc)
            self.malformed += 1
            return
        yield CorpusRecord(code, lang, sample_id)

    def _directory(self) -> Iterator[CorpusRecord]:
        for path in sorted(p for p in self.path.rglob("*") if p.is_file()):
            yield from self._single_file(path, path.relative_to(self.path).as_posix())

    def _jsonl(self) -> Iterator[CorpusRecord]:
        try:
            fh = self.path.open(encoding="utf-8")
        except OSError as exc:
            raise IoError(f"cannot read {self.path}: {exc}") from exc
        with fh:
            for lineno, line in enumerate(fh, 1):
                if not line.strip():
                    continue
                try:
                    yield self._parse_line(line, lineno)
                except MalformedRecord as exc:
                    log.warning("%s:%d: %s", self.path, lineno, exc)
                    self.malformed += 1

    @staticmethod
    def _parse_line(line: str, lineno: int) -> CorpusRecord:
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as exc:
            raise MalformedRecord(f"invalid JSON: {exc}") from None
        if not isinstance(obj, dict):
            raise MalformedRecord("record is not an object")
        code, lang = obj.get("source_code"), obj.get("lang")
        if not isinstance(code, str) or not isinstance(lang, str):
            raise MalformedRecord("record needs string fields 'source_code' and 'lang'")
        try:
            language = language_from_name(lang)
        except UnsupportedLanguage as exc:
            raise MalformedRecord(str(exc)) from None
        return CorpusRecord(code, language, str(obj.get("src_uid", f"line{lineno}")))


def ingest_corpus(path: str | Path, jsonl: bool | None = None) -> Corpus:
    return Corpus(path, jsonl)


def bundled_corpus_path() -> Path:
    return Path(str(resources.files("lct") / "data" / "minicorpus"))


@dataclass
class LanguageStats:
    samples: int = 0
    tokens_saved: int = 0
    delta_l_unique: int = 0
    tokens_norep: int = 0
    tokens_idrep: int = 0
    buckets: Counter = field(default_factory=Counter)

    @property
    def avg_tokens_saved_per_sample(self) -> Fraction:
        return Fraction(self.tokens_saved, self.samples) if self.samples else Fraction(0)

    @property
    def avg_delta_l_unique(self) -> Fraction:
        return Fraction(self.delta_l_unique, self.samples) if self.samples else Fraction(0)

    def to_dict(self) -> dict:
        return {
            "samples": self.samples,
            "avg_tokens_saved_per_sample": round(float(self.avg_tokens_saved_per_sample), 2),
            "avg_delta_l_unique": round(float(self.avg_delta_l_unique), 2),
            "total_tokens_saved": self.tokens_saved,
            "total_tokens_norep": self.tokens_norep,
            "total_tokens_idrep": self.tokens_idrep,
            "buckets": {b.value: self.buckets.get(b, 0) for b in LengthBucket},
        }


@dataclass
class CorpusReport:
    tokenizer_id: str
    languages: dict[str, LanguageStats]
    failed: int = 0
    malformed: int = 0

    def to_dict(self) -> dict:
        return {
            "tokenizer_id": self.tokenizer_id,
            "languages": {lang: s.to_dict() for lang, s in self.languages.items()},
            "summary": {
                "samples": sum(s.samples for s in self.languages.values()),
                "failed": self.failed,
                "malformed": self.malformed,
            },
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"


def _measure(record: CorpusRecord, tok: Tokenizer, rules_path: str | Path | None):
    try:
        rules = load_grammar(record.language, rules_path)
        compacted, mapping = rewrite.compact(record.source_code, record.language, tok, ALL_CATEGORIES, rules)
    except LctError as exc:
        log.warning("skipping %s: %s", record.sample_id, exc)
        return record.language, None
    saved = rewrite.savings_report(mapping)
    norep = tok.token_length(record.source_code)
    return record.language, (saved, norep, tok.token_length(compacted))


def corpus_stats(
    records: Iterable[CorpusRecord],
    tok: Tokenizer | None = None,
    workers: int = 1,
    rules_path: str | Path | None = None,
) -> CorpusReport:
    """Per-language token savings over a corpus."""
    tok = tok or DefaultTokenizer()
    per_lang: dict[str, LanguageStats] = {}
    failed = 0

    def measure(rec: CorpusRecord):
        return _measure(rec, tok, rules_path)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            outcomes = list(pool.map(measure, records))
    else:
        outcomes = [measure(r) for r in records]

    for lang, outcome in outcomes:
        if outcome is None:
            failed += 1
            continue
        saved, norep, idrep = outcome
        s = per_lang.setdefault(lang, LanguageStats())
        s.samples += 1
        s.tokens_saved += saved.per_sample_saved
        s.delta_l_unique += saved.delta_l_unique
        s.tokens_norep += norep
        s.tokens_idrep += idrep
        s.buckets[bucket_for_length(norep)] += 1

    malformed = getattr(records, "malformed", 0)
    if not per_lang:
        raise EmptyCorpus(f"no usable records (failed={failed}, malformed={malformed})")
    ordered = {lang: per_lang[lang] for lang in LANGUAGES if lang in per_lang}
    return CorpusReport(tok.id, ordered, failed=failed, malformed=malformed)

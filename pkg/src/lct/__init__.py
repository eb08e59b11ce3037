"""Identifier compaction for LLM code translation.

Long user-defined identifiers are swapped for short ``id_<k>`` placeholders
before translation and restored in the translated output.
"""

from lct.grammar import ALL_CATEGORIES, LANGUAGES, Category, GrammarRules, load_grammar
from lct.pipeline import Mode, PipelineResult, ablate, corpus_stats, ingest_corpus, run
from lct.rewrite import MappingEntry, ReplacementMapping, compact, restore, savings_report
from lct.tokens import DefaultTokenizer, LengthBucket, Tokenizer, bucket, make_tokenizer

__all__ = [
    "ALL_CATEGORIES",
    "LANGUAGES",
    "Category",
    "DefaultTokenizer",
    "GrammarRules",
    "LengthBucket",
    "MappingEntry",
    "Mode",
    "PipelineResult",
    "ReplacementMapping",
    "Tokenizer",
    "ablate",
    "bucket",
    "compact",
    "corpus_stats",
    "ingest_corpus",
    "load_grammar",
    "make_tokenizer",
    "restore",
    "run",
    "savings_report",
]

__version__ = "0.1.0"

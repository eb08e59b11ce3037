"""Token-length models and length bucketing."""

from __future__ import annotations

import hashlib
import math
import re
from enum import Enum
from pathlib import Path

# Letter run | digit run | any single other character.
_RUNS = re.compile(r"(?P<run>[^\W\d_]+|\d+)|.", re.DOTALL)

# Pre-tokenization pattern used by the cl100k-family BPE encodings.
CL100K_PATTERN = (
    r"""(?i:'s|'t|'re|'ve|'m|'ll|'d)|[^\r\n\p{L}\p{N}]?\p{L}+|\p{N}{1,3}| ?[^\s\p{L}\p{N}]+[\r\n]*|\s*[\r\n]+|\s+(?!\S)|\s+"""
)


class Tokenizer:
    id: str = "abstract"

    def token_length(self, text: str) -> int:
        raise NotImplementedError

    def __repr__(self) -> str:
        return f"{type(self).__name__}(id={self.id!r})"


class DefaultTokenizer(Tokenizer):
    """Dependency-free approximation of a BPE token count.

    Letter and digit runs of length n cost ceil(n / 4); every other character
    (underscore, punctuation, whitespace) costs 1.
    """

    id = "default"

    def token_length(self, text: str) -> int:
        total = 0
        for m in _RUNS.finditer(text):
            run = m.group("run")
            if run is not None:
                total += math.ceil(len(run) / 4)
            else:
                total += 1
        return total


class BpeTokenizer(Tokenizer):
    """Exact counts from a tiktoken-format ranks file (``<base64 token> <rank>`` per line)."""

    def __init__(self, vocab_path: str | Path, pattern: str = CL100K_PATTERN):
        try:
            import tiktoken
            from tiktoken.load import load_tiktoken_bpe
        except ImportError as exc:  # pragma: no cover - depends on environment
            raise RuntimeError("BPE mode needs the 'tiktoken' package (pip install artifact[bpe])") from exc
        path = Path(vocab_path)
        digest = hashlib.sha256(path.read_bytes()).hexdigest()[:12]
        self.id = f"bpe:{digest}"
        ranks = load_tiktoken_bpe(str(path))
        self._enc = tiktoken.Encoding(name=self.id, pat_str=pattern, mergeable_ranks=ranks, special_tokens={})

    def token_length(self, text: str) -> int:
        if not text:
            return 0
        return len(self._enc.encode_ordinary(text))


def make_tokenizer(kind: str = "default", vocab: str | Path | None = None) -> Tokenizer:
    if kind == "default":
        return DefaultTokenizer()
    if kind == "bpe":
        if vocab is None:
            raise ValueError("the bpe tokenizer needs a vocabulary file (--tokenizer-vocab)")
        return BpeTokenizer(vocab)
    raise ValueError(f"unknown tokenizer {kind!r}")


def token_length(tok: Tokenizer, text: str) -> int:
    return tok.token_length(text)


class LengthBucket(str, Enum):
    BELOW_2000 = "below_2000"
    GE_2000 = "ge_2000"
    GE_4000 = "ge_4000"
    GE_8000 = "ge_8000"

    @property
    def rank(self) -> int:
        return _BUCKET_ORDER.index(self)

    def __str__(self) -> str:
        return self.value


_BUCKET_ORDER = list(LengthBucket)
BUCKET_THRESHOLDS = ((8000, LengthBucket.GE_8000), (4000, LengthBucket.GE_4000), (2000, LengthBucket.GE_2000))


def bucket_for_length(n: int) -> LengthBucket:
    for bound, b in BUCKET_THRESHOLDS:
        if n >= bound:
            return b
    return LengthBucket.BELOW_2000


def bucket(tok: Tokenizer, code: str) -> LengthBucket:
    return bucket_for_length(tok.token_length(code))

"""Zero-shot translation providers: prompt rendering, HTTP chat client, mocks."""

from __future__ import annotations

import logging
import os
import re
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Protocol, Sequence

import httpx

from lct.errors import LctError
from lct.grammar import normalize_language

log = logging.getLogger(__name__)

LANGUAGE_NAMES = {"c": "C", "cpp": "C++", "java": "Java", "go": "Go", "python": "Python"}
FENCE_TAGS = {"c": "c", "cpp": "cpp", "java": "java", "go": "go", "python": "python"}

RETRYABLE_STATUS = frozenset({408, 409, 425, 429, 500, 502, 503, 504})
_OVERFLOW_HINTS = (
    "context_length_exceeded",
    "maximum context length",
    "context length",
    "context window",
    "too many tokens",
    "prompt is too long",
    "input is too long",
)

PROMPT_TEMPLATE = """\
Translate the following {src} program into {tgt}.
Keep the program's behaviour, input handling and output format unchanged.
Identifiers of the form id_<digits> (for example id_0, id_12) are placeholders: \
keep every one of them exactly as written, as identifiers in the {tgt} code, and do not rename, merge or drop any.
Reply with a single fenced code block containing only the {tgt} code.

{block}
"""


class TranslationError(LctError):
    pass


class HttpError(TranslationError):
    def __init__(self, status: int, body: str = ""):
        self.status = status
        self.body = body
        super().__init__(f"provider returned HTTP {status}: {body[:200]}")


class Timeout(TranslationError):
    pass


class ContextOverflow(TranslationError):
    """The provider rejected the request because the input does not fit its context window."""


class EmptyResponse(TranslationError):
    pass


@dataclass(frozen=True)
class ProviderConfig:
    endpoint: str = "http://localhost:8000/v1/chat/completions"
    model: str = "gpt-4o-mini"
    temperature: float = 0.0
    max_tokens: int = 4096
    api_key_env: str = "LCT_API_KEY"
    max_attempts: int = 3
    backoff_base: float = 1.0
    timeout: float = 120.0
    max_in_flight: int = 4
    provider: str = "mock"
    mock: str = "identity"

    def __post_init__(self):
        if self.temperature < 0:
            raise ValueError("temperature must be >= 0")
        if self.max_attempts < 1:
            raise ValueError("max_attempts must be >= 1")
        if self.timeout <= 0:
            raise ValueError("timeout must be > 0")
        if self.max_in_flight < 1:
            raise ValueError("max_in_flight must be >= 1")
        if self.provider not in ("mock", "http"):
            raise ValueError(f"unknown provider {self.provider!r}")

    @property
    def api_key(self) -> str | None:
        return os.environ.get(self.api_key_env)


@dataclass(frozen=True)
class TranslationRequest:
    source_language: str
    target_language: str
    code: str
    prompt: str

    @classmethod
    def build(cls, code: str, src: str, tgt: str) -> "TranslationRequest":
        return cls(normalize_language(src), normalize_language(tgt), code, build_prompt(code, src, tgt))


@dataclass
class TranslationResult:
    raw_response: str
    code: str
    usage: dict | None = None
    attempts: int = 1
    statuses: list[int] = field(default_factory=list)


def build_prompt(code: str, src: str, tgt: str) -> str:
    src, tgt = normalize_language(src), normalize_language(tgt)
    if src == tgt:
        raise ValueError("source and target languages must differ")
    return PROMPT_TEMPLATE.format(src=LANGUAGE_NAMES[src], tgt=LANGUAGE_NAMES[tgt], block=fence(code, FENCE_TAGS[src]))


_FENCED = re.compile(r"^(?P<fence>`{3,})[^\n`]*\n(?P<body>.*?)\n(?P=fence)(?!`)", re.DOTALL | re.MULTILINE)
_FENCED_EMPTY = re.compile(r"^(?P<fence>`{3,})[^\n`]*\n(?P=fence)(?!`)", re.MULTILINE)


def extract_code_block(response: str) -> str:
    """Contents of the first fenced block, or the whole response trimmed when there is none.

    The newline right before the closing fence belongs to the fence, so
    ``"```go\\nfunc main(){}\\n```"`` yields ``"func main(){}"``.
    """
    m = _FENCED.search(response)
    empty = _FENCED_EMPTY.search(response)
    if empty is not None and (m is None or empty.start() < m.start()):
        code = ""
    elif m is not None:
        code = m.group("body")
    else:
        code = response.strip()
    if not code.strip():
        raise EmptyResponse("no code in provider response")
    return code


def fence(code: str, tag: str = "") -> str:
    """Wrap ``code`` so that :func:`extract_code_block` returns it unchanged."""
    longest = max((len(r) for r in re.findall(r"`+", code)), default=0)
    ticks = "`" * max(3, longest + 1)
    return f"{ticks}{tag}\n{code}\n{ticks}"


class Provider(Protocol):
    def complete(self, req: TranslationRequest, cfg: ProviderConfig) -> TranslationResult: ...


class IdentityProvider:
    """Echoes the request code back in a fenced block."""

    def complete(self, req: TranslationRequest, cfg: ProviderConfig) -> TranslationResult:
        raw = fence(req.code, FENCE_TAGS[req.target_language])
        return TranslationResult(raw_response=raw, code=extract_code_block(raw))


class ReorderProvider:
    """Echoes the code with its blank-line separated blocks in reverse order.

    Stands in for a model that keeps placeholders but moves definitions around.
    """

    def complete(self, req: TranslationRequest, cfg: ProviderConfig) -> TranslationResult:
        blocks = [b for b in re.split(r"\n\s*\n", req.code.strip("\n")) if b.strip()]
        body = "\n\n".join(reversed(blocks)) + "\n"
        raw = "Here is the translation:\n\n" + fence(body, FENCE_TAGS[req.target_language]) + "\n"
        return TranslationResult(raw_response=raw, code=extract_code_block(raw))


MOCKS: dict[str, Callable[[], Provider]] = {"identity": IdentityProvider, "reorder": ReorderProvider}


def _looks_like_overflow(status: int, body: str) -> bool:
    if status == 413:
        return True
    if status not in (400, 422):
        return False
    low = body.lower()
    return any(h in low for h in _OVERFLOW_HINTS)


class HttpProvider:
    """Chat-completions style JSON client with retry and exponential backoff."""

    def __init__(self, client: httpx.Client | None = None, sleep: Callable[[float], None] = time.sleep):
        self._client = client
        self._sleep = sleep

    def _payload(self, req: TranslationRequest, cfg: ProviderConfig) -> dict:
        return {
            "model": cfg.model,
            "messages": [{"role": "user", "content": req.prompt}],
            "temperature": cfg.temperature,
            "max_tokens": cfg.max_tokens,
        }

    def complete(self, req: TranslationRequest, cfg: ProviderConfig) -> TranslationResult:
        headers = {"Content-Type": "application/json"}
        if cfg.api_key:
            headers["Authorization"] = f"Bearer {cfg.api_key}"
        client = self._client or httpx.Client(timeout=cfg.timeout)
        statuses: list[int] = []
        try:
            for attempt in range(1, cfg.max_attempts + 1):
                last = attempt == cfg.max_attempts
                try:
                    resp = client.post(cfg.endpoint, json=self._payload(req, cfg), headers=headers, timeout=cfg.timeout)
                except httpx.TimeoutException as exc:
                    statuses.append(0)
                    if last:
                        raise Timeout(f"no response within {cfg.timeout}s after {attempt} attempts") from exc
                    log.warning("attempt %d timed out; retrying", attempt)
                    self._sleep(cfg.backoff_base * 2 ** (attempt - 1))
                    continue
                except httpx.TransportError as exc:
                    statuses.append(0)
                    if last:
                        raise TranslationError(f"transport error: {exc}") from exc
                    self._sleep(cfg.backoff_base * 2 ** (attempt - 1))
                    continue
                statuses.append(resp.status_code)
                if resp.status_code == 200:
                    return self._parse(resp, attempt, statuses)
                body = resp.text
                if _looks_like_overflow(resp.status_code, body):
                    raise ContextOverflow(f"provider reports context overflow (HTTP {resp.status_code}): {body[:200]}")
                if resp.status_code in RETRYABLE_STATUS and not last:
                    log.warning("attempt %d got HTTP %d; retrying", attempt, resp.status_code)
                    self._sleep(cfg.backoff_base * 2 ** (attempt - 1))
                    continue
                raise HttpError(resp.status_code, body)
        finally:
            if self._client is None:
                client.close()
        raise AssertionError("unreachable")

    def _parse(self, resp: httpx.Response, attempt: int, statuses: list[int]) -> TranslationResult:
        try:
            data = resp.json()
            choice = data["choices"][0]
            content = choice["message"]["content"]
        except (ValueError, KeyError, IndexError, TypeError) as exc:
            raise EmptyResponse(f"unexpected response shape: {exc}") from exc
        if choice.get("finish_reason") == "length" and not content:
            raise ContextOverflow("completion truncated before any output")
        if not content or not content.strip():
            raise EmptyResponse("provider returned no content")
        return TranslationResult(
            raw_response=content,
            code=extract_code_block(content),
            usage=data.get("usage"),
            attempts=attempt,
            statuses=statuses,
        )


def get_provider(cfg: ProviderConfig) -> Provider:
    if cfg.provider == "http":
        return HttpProvider()
    try:
        return MOCKS[cfg.mock]()
    except KeyError:
        raise ValueError(f"unknown mock provider {cfg.mock!r}; expected one of {', '.join(MOCKS)}") from None


def translate(req: TranslationRequest, cfg: ProviderConfig, provider: Provider | None = None) -> TranslationResult:
    provider = provider or get_provider(cfg)
    return provider.complete(req, cfg)


def translate_many(
    requests: Sequence[TranslationRequest],
    cfg: ProviderConfig,
    provider: Provider | None = None,
) -> list[TranslationResult | TranslationError]:
    """Translate concurrently, at most ``cfg.max_in_flight`` requests at a time.

    Results come back in request order; a failed request yields its exception
    in place of a result.
    """
    provider = provider or get_provider(cfg)

    def one(req: TranslationRequest) -> TranslationResult | TranslationError:
        try:
            return provider.complete(req, cfg)
        except TranslationError as exc:
            return exc

    with ThreadPoolExecutor(max_workers=cfg.max_in_flight) as pool:
        return list(pool.map(one, requests))

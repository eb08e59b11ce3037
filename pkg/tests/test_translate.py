import time

import pytest

from conftest import chat_body
from lct.rewrite import compact, restore
from lct.tokens import DefaultTokenizer
from lct.translate import (
    ContextOverflow,
    EmptyResponse,
    HttpError,
    HttpProvider,
    IdentityProvider,
    ProviderConfig,
    ReorderProvider,
    Timeout,
    TranslationRequest,
    build_prompt,
    extract_code_block,
    fence,
    get_provider,
    translate,
    translate_many,
)

CODE = "int main() { return 0; }"


def fast_cfg(url, **kw):
    return ProviderConfig(endpoint=url, provider="http", backoff_base=0.001, timeout=2.0, **kw)


def test_prompt_mentions_languages_and_placeholders():
    p = build_prompt(CODE, "c", "go")
    assert "C" in p and "Go" in p
    assert "id_<digits>" in p and "exactly as written" in p
    assert CODE in p


def test_prompt_deterministic():
    assert build_prompt(CODE, "c", "go") == build_prompt(CODE, "c", "go")


def test_prompt_requires_distinct_languages():
    with pytest.raises(ValueError):
        build_prompt(CODE, "c", "c")


@pytest.mark.parametrize(
    "response, expected",
    [
        ("```go\nfunc main(){}\n```", "func main(){}"),
        ("  func main(){}\n\n", "func main(){}"),
        ("Sure! Here it is:\n```python\nprint(1)\n```\nHope that helps.", "print(1)"),
        ("```\na\n```\n```\nb\n```", "a"),
        ("````\nx = '```'\n````", "x = '```'"),
    ],
)
def test_extract_code_block(response, expected):
    assert extract_code_block(response) == expected


@pytest.mark.parametrize("response", ["", "   \n", "```go\n```"])
def test_extract_empty(response):
    with pytest.raises(EmptyResponse):
        extract_code_block(response)


@pytest.mark.parametrize("code", ["a", "x\n", "\n\ny", "s = '```'\n", "```"])
def test_fence_roundtrip(code):
    assert extract_code_block(fence(code, "c")) == code


def test_config_validation():
    for kw in ({"temperature": -1}, {"max_attempts": 0}, {"timeout": 0}, {"provider": "grpc"}, {"max_in_flight": 0}):
        with pytest.raises(ValueError):
            ProviderConfig(**kw)
    assert ProviderConfig().temperature == 0


def test_unknown_mock():
    with pytest.raises(ValueError):
        get_provider(ProviderConfig(mock="chatty"))


def test_identity_mock():
    req = TranslationRequest.build(CODE, "c", "go")
    assert translate(req, ProviderConfig()).code == CODE


def test_reorder_mock_then_restore():
    code = (
        "def first_helper_function(alpha_value):\n    return alpha_value\n\n\n"
        "def second_helper_function(beta_value):\n    return beta_value * 2\n"
    )
    compacted, m = compact(code, "python", DefaultTokenizer())
    res = ReorderProvider().complete(TranslationRequest.build(compacted, "python", "java"), ProviderConfig())
    assert res.code.index("id_2") < res.code.index("id_0")
    restored, unresolved = restore(res.code, m)
    assert unresolved == []
    assert "second_helper_function" in restored and "id_" not in restored


def test_retry_after_429(stub_server):
    stub_server.script = [(429, {"error": "slow down"}), (429, {"error": "slow down"}), (200, chat_body("```go\nok\n```", {"prompt_tokens": 5}))]
    sleeps = []
    res = HttpProvider(sleep=sleeps.append).complete(TranslationRequest.build(CODE, "c", "go"), fast_cfg(stub_server.url))
    assert res.code == "ok"
    assert res.attempts == 3 and res.statuses == [429, 429, 200]
    assert res.usage == {"prompt_tokens": 5}
    assert sleeps == [0.001, 0.002]
    body = stub_server.requests[0]
    assert body["temperature"] == 0 and body["messages"][0]["role"] == "user"


@pytest.mark.parametrize("status", [500, 502, 503, 504])
def test_retry_server_errors(stub_server, status):
    stub_server.script = [(status, "oops"), (200, chat_body("x = 1"))]
    res = HttpProvider(sleep=lambda s: None).complete(TranslationRequest.build(CODE, "c", "python"), fast_cfg(stub_server.url))
    assert res.code == "x = 1" and res.attempts == 2


def test_retries_exhausted(stub_server):
    stub_server.script = [(503, "busy")] * 3
    with pytest.raises(HttpError) as info:
        HttpProvider(sleep=lambda s: None).complete(TranslationRequest.build(CODE, "c", "go"), fast_cfg(stub_server.url))
    assert info.value.status == 503
    assert len(stub_server.requests) == 3


@pytest.mark.parametrize(
    "status, body",
    [
        (413, "payload too large"),
        (400, {"error": {"code": "context_length_exceeded", "message": "too long"}}),
        (400, {"error": {"message": "This model's maximum context length is 4097 tokens"}}),
    ],
)
def test_context_overflow(stub_server, status, body):
    stub_server.script = [(status, body)]
    with pytest.raises(ContextOverflow):
        HttpProvider(sleep=lambda s: None).complete(TranslationRequest.build(CODE, "c", "go"), fast_cfg(stub_server.url))
    assert len(stub_server.requests) == 1


def test_non_retryable(stub_server):
    stub_server.script = [(401, {"error": "bad key"})]
    with pytest.raises(HttpError) as info:
        HttpProvider(sleep=lambda s: None).complete(TranslationRequest.build(CODE, "c", "go"), fast_cfg(stub_server.url))
    assert info.value.status == 401 and len(stub_server.requests) == 1


def test_empty_choice(stub_server):
    stub_server.script = [(200, {"choices": []})]
    with pytest.raises(EmptyResponse):
        HttpProvider().complete(TranslationRequest.build(CODE, "c", "go"), fast_cfg(stub_server.url))


def test_auth_header(stub_server, monkeypatch):
    monkeypatch.setenv("LCT_TEST_KEY", "sekret")
    stub_server.script = [(200, chat_body("ok"))]
    HttpProvider().complete(TranslationRequest.build(CODE, "c", "go"), fast_cfg(stub_server.url, api_key_env="LCT_TEST_KEY"))
    headers = {k.lower(): v for k, v in stub_server.headers[0].items()}
    assert headers["authorization"] == "Bearer sekret"


def test_timeout():
    import socket

    srv = socket.socket()
    srv.bind(("127.0.0.1", 0))
    srv.listen(1)
    url = f"http://127.0.0.1:{srv.getsockname()[1]}/v1/chat/completions"
    try:
        cfg = ProviderConfig(endpoint=url, provider="http", timeout=0.2, max_attempts=2, backoff_base=0.001)
        t0 = time.monotonic()
        with pytest.raises(Timeout):
            HttpProvider(sleep=lambda s: None).complete(TranslationRequest.build(CODE, "c", "go"), cfg)
        assert time.monotonic() - t0 < 3
    finally:
        srv.close()


def test_translate_many_order_and_errors(stub_server):
    reqs = [TranslationRequest.build(f"int v{i};", "c", "go") for i in range(4)]
    results = translate_many(reqs, ProviderConfig(max_in_flight=2), IdentityProvider())
    assert [r.code for r in results] == [r.code for r in reqs]

    stub_server.script = [(401, "no")]
    out = translate_many(reqs[:1], fast_cfg(stub_server.url), HttpProvider())
    assert isinstance(out[0], HttpError)

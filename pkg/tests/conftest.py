from __future__ import annotations

import json
import threading
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from pathlib import Path

import pytest

from lct.pipeline import bundled_corpus_path, ingest_corpus

DATA = Path(__file__).parent / "data"

_acceptance: dict[int, list[bool]] = {}

@pytest.fixture(scope="session")
def corpus_records():
    return list(ingest_corpus(bundled_corpus_path()))


@pytest.fixture(scope="session")
def data_dir():
    return DATA


class StubChatServer:
    """Local chat-completions endpoint that replays scripted (status, body) responses."""

    def __init__(self):
        self.script: list[tuple[int, dict | str]] = []
        self.requests: list[dict] = []
        self.headers: list[dict] = []
        stub = self

        class Handler(BaseHTTPRequestHandler):
            def do_POST(self):
                length = int(self.headers.get("Content-Length", 0))
                stub.requests.append(json.loads(self.rfile.read(length)))
                stub.headers.append(dict(self.headers))
                status, body = stub.script.pop(0) if stub.script else (500, {"error": "script exhausted"})
                payload = body if isinstance(body, str) else json.dumps(body)
                self.send_response(status)
                self.send_header("Content-Type", "application/json")
                self.send_header("Content-Length", str(len(payload.encode())))
                self.end_headers()
                self.wfile.write(payload.encode())

            def log_message(self, *args):
                pass

        self.server = ThreadingHTTPServer(("127.0.0.1", 0), Handler)
        self.url = f"http://127.0.0.1:{self.server.server_address[1]}/v1/chat/completions"
        self.thread = threading.Thread(target=self.server.serve_forever, kwargs={"poll_interval": 0.02}, daemon=True)
        self.thread.start()

    def close(self):
        self.server.shutdown()
        self.server.server_close()


def chat_body(content: str, usage: dict | None = None) -> dict:
    body = {"choices": [{"index": 0, "message": {"role": "assistant", "content": content}, "finish_reason": "stop"}]}
    if usage is not None:
        body["usage"] = usage
    return body


@pytest.fixture
def stub_server():
    server = StubChatServer()
    yield server
    server.close()


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when in ("setup", "teardown") and report.failed):
        return
    marker = next((k for k in report.keywords if k.startswith("AC") and k[2:].isdigit()), None)
    if marker is not None:
        _acceptance.setdefault(int(marker[2:]), []).append(report.passed)


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_acceptance):
        outcomes = _acceptance[n]
        verdict = "PASS" if all(outcomes) else "FAIL"
        terminalreporter.write_line(f"AC{n:<3} {verdict}  ({sum(outcomes)}/{len(outcomes)} checks)")

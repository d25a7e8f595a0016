"""Shared fixtures: the bundled pipeline program and a scriptable stub endpoint."""

from __future__ import annotations

import json
import threading
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer

import pytest

from cogbasic.cli import default_program_path
from cogbasic.rules import RuleBasedProvider
from cogbasic.syntax import parse_program


@pytest.fixture(scope="session")
def conflict_program_text() -> str:
    return default_program_path().read_text(encoding="utf-8")


@pytest.fixture()
def conflict_program(conflict_program_text):
    return parse_program(conflict_program_text)


@pytest.fixture(scope="session")
def rule_provider() -> RuleBasedProvider:
    return RuleBasedProvider()


class StubLlmServer:
    """Loopback chat-completions endpoint with scripted replies.

    Each POST pops the next scripted item: ("ok", text) answers 200 with a
    completion; ("status", code, body) answers that status. Requests are
    recorded for assertions. An exhausted script answers 500.
    """

    def __init__(self):
        self.replies: list[tuple] = []
        self.requests: list[dict] = []
        self.headers: list[dict] = []
        outer = self

        class Handler(BaseHTTPRequestHandler):
            def do_POST(self):
                length = int(self.headers.get("Content-Length", 0))
                body = json.loads(self.rfile.read(length) or b"{}")
                outer.requests.append({"path": self.path, "body": body})
                outer.headers.append(dict(self.headers))
                if not outer.replies:
                    self._respond(500, b"unscripted request")
                    return
                item = outer.replies.pop(0)
                if item[0] == "ok":
                    payload = json.dumps(
                        {"choices": [{"message": {"content": item[1]}}]}
                    ).encode()
                    self._respond(200, payload, "application/json")
                else:
                    self._respond(item[1], item[2].encode())

            def _respond(self, status, body, ctype="text/plain"):
                self.send_response(status)
                self.send_header("Content-Type", ctype)
                self.send_header("Content-Length", str(len(body)))
                self.end_headers()
                self.wfile.write(body)

            def log_message(self, *args):
                pass

        self._server = ThreadingHTTPServer(("127.0.0.1", 0), Handler)
        self._thread = threading.Thread(
            target=lambda: self._server.serve_forever(poll_interval=0.05), daemon=True
        )
        self._thread.start()

    @property
    def base_url(self) -> str:
        host, port = self._server.server_address
        return f"http://{host}:{port}"

    def push_completion(self, text: str) -> None:
        self.replies.append(("ok", text))

    def push_status(self, status: int, body: str = "") -> None:
        self.replies.append(("status", status, body))

    def close(self) -> None:
        self._server.shutdown()
        self._server.server_close()


@pytest.fixture()
def stub_llm():
    server = StubLlmServer()
    yield server
    server.close()

"""Minimal chat-completions client with bounded retry."""

from __future__ import annotations

import logging
import os
import time
from dataclasses import dataclass

import httpx

from ..errors import CogBasicError

logger = logging.getLogger(__name__)

ENV_URL = "COGBASIC_LLM_URL"
ENV_MODEL = "COGBASIC_LLM_MODEL"
ENV_KEY = "COGBASIC_LLM_KEY"


class LlmError(CogBasicError):
    """Base class for endpoint failures; carries the attempt count."""

    def __init__(self, message: str, attempts: int = 1):
        super().__init__(f"{message} (after {attempts} attempt(s))")
        self.attempts = attempts


class TransportError(LlmError):
    pass


class EndpointTimeoutError(LlmError):
    pass


class ApiError(LlmError):
    def __init__(self, status: int, body_excerpt: str, attempts: int = 1):
        super().__init__(f"endpoint returned HTTP {status}: {body_excerpt}", attempts)
        self.status = status
        self.body_excerpt = body_excerpt


class OutputFormatError(CogBasicError):
    """The model reply violated the demanded shape even after a retry."""

    def __init__(self, message: str, raw: str):
        super().__init__(f"{message}\n--- raw reply ---\n{raw}")
        self.raw = raw


class TraceParseError(CogBasicError):
    """A whole-program reply had no parseable final memory block."""

    def __init__(self, message: str, raw: str):
        super().__init__(message)
        self.raw = raw


@dataclass(frozen=True)
class EndpointConfig:
    base_url: str
    model: str
    api_key: str | None = None
    temperature: float = 0.0
    timeout: float = 60.0
    max_retries: int = 2
    retry_base_delay: float = 1.0

    def __post_init__(self) -> None:
        if self.temperature < 0:
            raise ValueError("temperature must be >= 0")
        if self.timeout <= 0:
            raise ValueError("timeout must be > 0")

    @classmethod
    def from_env(cls, **overrides) -> "EndpointConfig":
        base_url = overrides.pop("base_url", None) or os.environ.get(ENV_URL)
        model = overrides.pop("model", None) or os.environ.get(ENV_MODEL)
        if not base_url or not model:
            raise ValueError(
                f"an endpoint URL and model name are required "
                f"(flags or {ENV_URL}/{ENV_MODEL})"
            )
        api_key = overrides.pop("api_key", None) or os.environ.get(ENV_KEY)
        return cls(base_url=base_url, model=model, api_key=api_key, **overrides)


def build_request_body(config: EndpointConfig, system_prompt: str, user_prompt: str) -> dict:
    return {
        "model": config.model,
        "messages": [
            {"role": "system", "content": system_prompt},
            {"role": "user", "content": user_prompt},
        ],
        "temperature": config.temperature,
    }


def llm_call(config: EndpointConfig, system_prompt: str, user_prompt: str) -> str:
    """One chat completion; retries transport failures and 5xx with backoff."""
    url = config.base_url.rstrip("/") + "/chat/completions"
    body = build_request_body(config, system_prompt, user_prompt)
    headers = {"Content-Type": "application/json"}
    if config.api_key:
        headers["Authorization"] = f"Bearer {config.api_key}"

    logger.debug("llm request to %s: %.200s", url, user_prompt)
    attempts = config.max_retries + 1
    last_error: LlmError | None = None
    for attempt in range(1, attempts + 1):
        try:
            response = httpx.post(url, json=body, headers=headers, timeout=config.timeout)
        except httpx.TimeoutException as exc:
            last_error = EndpointTimeoutError(f"request timed out: {exc}", attempt)
        except httpx.HTTPError as exc:
            last_error = TransportError(f"request failed: {exc}", attempt)
        else:
            if response.status_code >= 500:
                last_error = ApiError(response.status_code, response.text[:200], attempt)
            elif response.status_code >= 400:
                raise ApiError(response.status_code, response.text[:200], attempt)
            else:
                reply = _extract_reply(response, attempt)
                logger.debug("llm reply (%d chars): %.200s", len(reply), reply)
                return reply
        if attempt < attempts:
            time.sleep(config.retry_base_delay * 2 ** (attempt - 1))
    assert last_error is not None
    raise last_error


def _extract_reply(response: httpx.Response, attempt: int) -> str:
    try:
        payload = response.json()
        content = payload["choices"][0]["message"]["content"]
    except (ValueError, KeyError, IndexError, TypeError):
        raise ApiError(response.status_code, "malformed completion body", attempt) from None
    if not isinstance(content, str):
        raise ApiError(response.status_code, "completion content is not text", attempt)
    return content

"""Model providers: live HTTP, recording wrapper, transcript replay.

Transcripts are JSON arrays of {prompt_hash, response}. Replay refuses
to answer a prompt whose hash differs from the recorded one, so a test
can only pass against the exact prompts it was recorded with.
"""
from __future__ import annotations

import json
import os
from pathlib import Path
from typing import Protocol

import httpx

from .prompts import prompt_hash


class ProviderError(Exception):
    """The provider could not produce a response."""


class TranscriptMismatch(ProviderError):
    def __init__(self, position: int, expected: str, got: str):
        super().__init__(
            f"transcript entry {position} was recorded for prompt {expected[:12]}…,"
            f" not {got[:12]}…"
        )
        self.position = position


class TranscriptExhausted(ProviderError):
    def __init__(self, length: int):
        super().__init__(f"transcript has only {length} responses")
        self.length = length


class Provider(Protocol):
    def complete(self, messages: list[dict[str, str]]) -> str: ...


class HttpProvider:
    """Chat-completion POST with bearer auth from an environment variable."""

    def __init__(
        self,
        endpoint: str,
        model: str,
        api_key_env: str,
        temperature: float = 0.0,
        timeout: float = 30.0,
        client: httpx.Client | None = None,
    ):
        self.endpoint = endpoint
        self.model = model
        self.api_key_env = api_key_env
        self.temperature = temperature
        self.timeout = timeout
        self._client = client

    def complete(self, messages: list[dict[str, str]]) -> str:
        key = os.environ.get(self.api_key_env, "")
        if not key:
            raise ProviderError(f"environment variable {self.api_key_env} holds no API key")
        payload = {"model": self.model, "temperature": self.temperature, "messages": messages}
        headers = {"Authorization": f"Bearer {key}"}
        client = self._client or httpx.Client(timeout=self.timeout)
        try:
            response = client.post(self.endpoint, json=payload, headers=headers)
        except httpx.HTTPError as exc:
            raise ProviderError(f"request failed: {exc}") from None
        finally:
            if self._client is None:
                client.close()
        if response.status_code != 200:
            raise ProviderError(f"provider returned HTTP {response.status_code}")
        try:
            body = response.json()
        except ValueError:
            raise ProviderError("provider response is not JSON") from None
        content = body.get("content")
        if content is None:
            try:
                content = body["choices"][0]["message"]["content"]
            except (KeyError, IndexError, TypeError):
                raise ProviderError("provider response carries no content") from None
        return str(content)


class RecordingProvider:
    """Wraps a live provider and captures a replayable transcript."""

    def __init__(self, inner: Provider):
        self.inner = inner
        self.transcript: list[dict[str, str]] = []

    def complete(self, messages: list[dict[str, str]]) -> str:
        response = self.inner.complete(messages)
        self.transcript.append({"prompt_hash": prompt_hash(messages), "response": response})
        return response

    def save(self, path: str | Path) -> None:
        Path(path).write_text(json.dumps(self.transcript, indent=2) + "\n", encoding="utf-8")


class ReplayProvider:
    """Answers from a transcript, verifying each prompt hash."""

    def __init__(self, transcript: list[dict[str, str]]):
        self.transcript = transcript
        self.position = 0

    @classmethod
    def from_file(cls, path: str | Path) -> "ReplayProvider":
        return cls(json.loads(Path(path).read_text(encoding="utf-8")))

    def complete(self, messages: list[dict[str, str]]) -> str:
        if self.position >= len(self.transcript):
            raise TranscriptExhausted(len(self.transcript))
        entry = self.transcript[self.position]
        got = prompt_hash(messages)
        if entry["prompt_hash"] != got:
            raise TranscriptMismatch(self.position, entry["prompt_hash"], got)
        self.position += 1
        return entry["response"]


__all__ = [
    "HttpProvider",
    "Provider",
    "ProviderError",
    "RecordingProvider",
    "ReplayProvider",
    "TranscriptExhausted",
    "TranscriptMismatch",
]

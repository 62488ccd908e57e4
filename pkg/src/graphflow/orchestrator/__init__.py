"""Turns plain-text requests into validated workflow graphs."""
from .fewshot import FEWSHOT_PAIRS
from .pipeline import (
    AttemptRecord,
    EmptyResponse,
    Exhausted,
    GenerationOutcome,
    ProviderConfig,
    build_prompt,
    extract_script,
    generate_workflow,
    retrieve_context,
)
from .prompts import SYSTEM_TEXT, BudgetExceeded, PromptBundle, assemble_prompt, prompt_hash
from .providers import (
    HttpProvider,
    Provider,
    ProviderError,
    RecordingProvider,
    ReplayProvider,
    TranscriptExhausted,
    TranscriptMismatch,
)

__all__ = [
    "AttemptRecord",
    "BudgetExceeded",
    "EmptyResponse",
    "Exhausted",
    "FEWSHOT_PAIRS",
    "GenerationOutcome",
    "HttpProvider",
    "PromptBundle",
    "Provider",
    "ProviderConfig",
    "ProviderError",
    "RecordingProvider",
    "ReplayProvider",
    "SYSTEM_TEXT",
    "TranscriptExhausted",
    "TranscriptMismatch",
    "assemble_prompt",
    "build_prompt",
    "extract_script",
    "generate_workflow",
    "prompt_hash",
    "retrieve_context",
]

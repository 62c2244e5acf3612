"""Structured-output validation and canonicalization helpers."""

from __future__ import annotations

import json
import re

import jsonschema


def validate_document(doc: object, schema: dict) -> None:
    """Raise jsonschema.ValidationError when doc does not match schema."""
    jsonschema.validate(instance=doc, schema=schema)


def check_schema(schema: dict) -> None:
    jsonschema.Draft202012Validator.check_schema(schema)


def canonical_json(doc: object) -> str:
    """Field-order-insensitive, whitespace-normalized serialized form."""
    return json.dumps(doc, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


_FENCE_RE = re.compile(r"^```[a-zA-Z0-9_-]*\s*\n(.*?)\n?```\s*$", re.DOTALL)


def extract_json(text: str) -> object:
    """Parse a model response as JSON, tolerating a markdown code fence."""
    stripped = text.strip()
    m = _FENCE_RE.match(stripped)
    if m:
        stripped = m.group(1).strip()
    return json.loads(stripped)

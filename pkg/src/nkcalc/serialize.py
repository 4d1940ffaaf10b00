"""JSON form of NK tables and Bass verdicts, with a published schema."""

from __future__ import annotations

import json

import jsonschema

from .nk import NKTable

ENTRY_SCHEMA = {
    "type": "object",
    "required": ["n", "i", "dim", "branch", "certified_to"],
    "properties": {
        "n": {"type": "integer"},
        "i": {"type": "integer", "minimum": 1},
        "dim": {"type": "integer", "minimum": 0},
        "branch": {"enum": ["HH", "exact-sequence", "cdh-vanishing"]},
        "certified_to": {"type": ["integer", "null"]},
        "per_weight": {"type": "object", "additionalProperties": {"type": "integer", "minimum": 0}},
        "witnesses": {"type": "array", "items": {"type": "string"}},
        "note": {"type": "string"},
    },
    "additionalProperties": False,
}

VERDICT_SCHEMA = {
    "type": "object",
    "required": ["ring", "n", "NK_n_zero", "NK_n-1_zero", "N2K_n_zero", "K_n_regular",
                 "biconditional_holds", "certified_to"],
    "properties": {
        "ring": {"type": "string"},
        "n": {"type": "integer"},
        "NK_n_zero": {"type": "boolean"},
        "NK_n-1_zero": {"type": "boolean"},
        "N2K_n_zero": {"type": "boolean"},
        "K_n_regular": {"type": "boolean"},
        "regular_range": {"type": "array", "items": {"type": "integer"}},
        "biconditional_holds": {"type": "boolean"},
        "certified_to": {"type": ["integer", "null"]},
        "warnings": {"type": "array", "items": {"type": "string"}},
        "tk_dims": {"type": "object", "additionalProperties": {"type": "integer", "minimum": 0}},
    },
}

TABLE_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "NKTable",
    "type": "object",
    "required": ["ring", "kind", "field", "n_range", "weight_bound", "entries", "totals"],
    "properties": {
        "ring": {"type": "string"},
        "kind": {"enum": ["artinian", "curve"]},
        "field": {"type": "string"},
        "n_range": {"type": "array", "items": {"type": "integer"}, "minItems": 2, "maxItems": 2},
        "weight_bound": {"type": ["integer", "null"]},
        "entries": {"type": "array", "items": ENTRY_SCHEMA},
        "totals": {"type": "object", "additionalProperties": {"type": "integer", "minimum": 0}},
        "verdicts": {"type": "array", "items": VERDICT_SCHEMA},
    },
}


def table_to_json(table: NKTable, verdicts=None, indent: int | None = 2) -> str:
    d = table.to_dict()
    if verdicts:
        d["verdicts"] = [v.to_dict() for v in verdicts]
    jsonschema.validate(d, TABLE_SCHEMA)
    return json.dumps(d, indent=indent, sort_keys=True)


def table_from_json(text: str) -> NKTable:
    d = json.loads(text)
    jsonschema.validate(d, TABLE_SCHEMA)
    return NKTable.from_dict(d)


def validate(document: dict) -> None:
    jsonschema.validate(document, TABLE_SCHEMA)

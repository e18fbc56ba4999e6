"""JSON schemas for the ``--format json`` outputs of the CLI."""
from .table import TABLE_SCHEMA

_INT = {"type": "integer"}
_INTS = {"type": "array", "items": _INT}
_OPT_INT = {"type": ["integer", "null"]}

MEMBER_SCHEMA = {
    "type": "object",
    "required": ["n", "status", "witness", "rejected"],
    "properties": {
        "n": _INT,
        "status": {"enum": ["Member", "NonMember"]},
        "witness": {
            "oneOf": [
                {"type": "null"},
                {"type": "object", "required": ["a", "b"], "properties": {"a": _INT, "b": _INT}},
            ]
        },
        "rejected": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["a", "b", "constraint", "detail"],
                "properties": {
                    "a": _INT,
                    "b": _INT,
                    "constraint": {"enum": ["range", "linear bound", "coprimality"]},
                    "detail": {"type": "string"},
                },
            },
        },
    },
}

CERTIFICATE_SCHEMA = {
    "oneOf": [
        {
            "type": "object",
            "required": ["n", "rule", "a", "b", "verified"],
            "properties": {"n": _INT, "rule": {"type": "string"}, "a": _INT, "b": _INT,
                           "verified": {"const": True}},
            "additionalProperties": False,
        },
        {
            "type": "object",
            "required": ["n", "rule", "verdict", "reason", "verified"],
            "properties": {"n": _INT, "rule": {"type": "string"}, "verdict": {"const": "NonMember"},
                           "reason": {"type": "string"}, "verified": {"const": True}},
            "additionalProperties": False,
        },
        {
            "type": "object",
            "required": ["n", "verdict", "reason"],
            "properties": {"n": _INT, "verdict": {"const": "Unknown"}, "reason": {"type": "string"}},
            "additionalProperties": False,
        },
    ]
}

SCAN_SCHEMA = {
    "type": "object",
    "required": ["gens", "profile", "bound", "gap_count", "max_gap", "gaps", "certified_beyond"],
    "properties": {
        "gens": {"type": "array", "items": _INT, "minItems": 2, "maxItems": 2},
        "profile": {
            "type": "object",
            "required": ["a_min", "a_max", "alpha", "beta", "require_coprime"],
            "properties": {"a_min": _INT, "a_max": _OPT_INT, "alpha": _INT, "beta": _INT,
                           "require_coprime": {"type": "boolean"}},
        },
        "bound": _INT,
        "gap_count": _INT,
        "max_gap": _OPT_INT,
        "gaps": _INTS,
        "certified_beyond": {"const": False},
    },
}

GAPS_SCHEMA = {
    "type": "object",
    "required": ["lo", "hi", "gaps"],
    "properties": {"lo": _INT, "hi": _INT, "gaps": _INTS},
}

CLASSES_SCHEMA = {
    "type": "object",
    "required": ["bound", "classes"],
    "properties": {
        "bound": _INT,
        "classes": {"type": "object", "additionalProperties": _OPT_INT},
    },
}

PROBE_SCHEMA = {
    "type": "object",
    "required": ["base", "limit", "exponents"],
    "properties": {"base": _INT, "limit": _INT, "exponents": _INTS},
}

SCHEMAS = {
    "member": MEMBER_SCHEMA,
    "certify": CERTIFICATE_SCHEMA,
    "scan": SCAN_SCHEMA,
    "gaps": GAPS_SCHEMA,
    "classes": CLASSES_SCHEMA,
    "table": TABLE_SCHEMA,
    "probe": PROBE_SCHEMA,
}

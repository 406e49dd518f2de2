"""Shipped shapes for the CLI's machine output, plus a small structural
validator (types, required keys, item shapes; no external dependency).

Schema grammar: {"type": ..., "required": {...}, "optional": {...},
"items": ..., "values": ...}; "nullable" allows null; type names are
"object", "array", "string", "int", "number", "bool".
"""

from __future__ import annotations

from typing import Any

_ROLE = {
    "type": "object",
    "required": {
        "vertex": {"type": "int"},
        "clique": {"type": "int"},
        "port_to": {"type": "int", "nullable": True},
        "slot": {"type": "int", "nullable": True},
    },
}

_CERTIFICATE = {
    "type": "object",
    "required": {
        "cliques": {"type": "array", "items": {"type": "array", "items": {"type": "int"}}},
        "f": {"type": "array", "items": {"type": "int"}},
        "quotient": {
            "type": "object",
            "required": {
                "n": {"type": "int"},
                "edges": {"type": "array", "items": {"type": "array", "items": {"type": "int"}}},
            },
        },
        "roles": {"type": "array", "items": _ROLE},
    },
}

RECOGNIZE_ACCEPT = {
    "type": "object",
    "required": {
        "accepted": {"type": "bool"},
        "components": {
            "type": "array",
            "items": {
                "type": "object",
                "required": {
                    "vertices": {"type": "array", "items": {"type": "int"}},
                    "certificate": _CERTIFICATE,
                },
            },
        },
    },
}

RECOGNIZE_REJECT = {
    "type": "object",
    "required": {
        "accepted": {"type": "bool"},
        "reason": {"type": "string"},
        "vertices": {"type": "array", "items": {"type": "int"}},
        "component": {"type": "array", "items": {"type": "int"}},
    },
}

CLASSIFY = {
    "type": "object",
    "required": {
        "patterns": {
            "type": "object",
            "values": {"type": "array", "items": {"type": "int"}, "nullable": True},
        },
        "expanded_clique": {"type": "bool"},
    },
}

DOMINATE = {
    "type": "object",
    "required": {
        "size": {"type": "int"},
        "set": {"type": "array", "items": {"type": "int"}},
        "exact": {"type": "bool"},
        "method": {"type": "string"},
    },
}

ALPHA2 = {
    "type": "object",
    "required": {
        "size": {"type": "int"},
        "set": {"type": "array", "items": {"type": "int"}},
    },
}

VERIFY_IDENTITIES = {
    "type": "object",
    "required": {
        "n": {"type": "int"},
        "checks": {"type": "array", "items": {"type": "object", "required": {"check": {"type": "string"}, "holds": {"type": "bool"}}}},
        "all_hold": {"type": "bool"},
    },
}

REDUCE = {
    "type": "object",
    "required": {
        "ell": {"type": "int"},
        "ell_prime": {"type": "int"},
        "source_n": {"type": "int"},
        "gadgets": {"type": "object", "values": {"type": "array", "items": {"type": "int"}}},
    },
    "optional": {
        "gamma_source": {"type": "int"},
        "gamma_h": {"type": "int"},
        "identity_holds": {"type": "bool"},
        "recognized": {"type": "bool"},
        "bipartite": {"type": "bool"},
        "cubic": {"type": "bool"},
    },
}

BENCH = {
    "type": "object",
    "required": {
        "rows": {"type": "int"},
        "csv": {"type": "string"},
        "plot": {"type": "string", "nullable": True},
        "fits": {
            "type": "object",
            "values": {
                "type": "object",
                "required": {
                    "slope": {"type": "number"},
                    "intercept": {"type": "number"},
                    "r_squared": {"type": "number"},
                },
            },
        },
    },
}

_TYPES = {
    "object": dict,
    "array": list,
    "string": str,
    "bool": bool,
    "int": int,
    "number": (int, float),
}


def validate(payload: Any, schema: dict, path: str = "$") -> None:
    """Raise ValueError at the first structural mismatch."""
    if payload is None:
        if schema.get("nullable"):
            return
        raise ValueError(f"{path}: null not allowed")
    expected = _TYPES[schema["type"]]
    if schema["type"] == "int" and isinstance(payload, bool):
        raise ValueError(f"{path}: expected int, got bool")
    if not isinstance(payload, expected):
        raise ValueError(f"{path}: expected {schema['type']}, got {type(payload).__name__}")
    if schema["type"] == "object":
        for key, sub in schema.get("required", {}).items():
            if key not in payload:
                raise ValueError(f"{path}: missing key {key!r}")
            validate(payload[key], sub, f"{path}.{key}")
        for key, sub in schema.get("optional", {}).items():
            if key in payload:
                validate(payload[key], sub, f"{path}.{key}")
        values_schema = schema.get("values")
        if values_schema is not None:
            for key, value in payload.items():
                validate(value, values_schema, f"{path}.{key}")
    elif schema["type"] == "array":
        item_schema = schema.get("items")
        if item_schema is not None:
            for i, item in enumerate(payload):
                validate(item, item_schema, f"{path}[{i}]")

"""JSON Schemas (draft 2020-12) for the CLI's ``--json`` outputs, version "1"."""

SCHEMA_VERSION = "1"

_version = {"const": SCHEMA_VERSION}

GAMMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "middledom gamma result",
    "type": "object",
    "required": ["schema_version", "gamma", "method", "witness"],
    "properties": {
        "schema_version": _version,
        "gamma": {"type": "integer", "minimum": 0},
        "method": {"enum": ["oracle", "branch_bound", "matching_fast_path", "formula"]},
        "witness": {
            "type": "array",
            "items": {"type": "string", "pattern": r"^(v\d+|m\d+_\d+)$"},
        },
        "middle": {"type": "boolean"},
        "input": {"type": "string"},
    },
}

_bound = {
    "type": "object",
    "required": ["bound", "holds", "tight"],
    "properties": {
        "bound": {"type": "integer"},
        "holds": {"type": "boolean"},
        "tight": {"type": "boolean"},
    },
}

NORDHAUS = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "middledom Nordhaus-Gaddum evaluation",
    "type": "object",
    "required": [
        "schema_version",
        "n",
        "gamma",
        "gamma_complement",
        "sum",
        "product",
        "bounds",
        "hypothesis",
    ],
    "properties": {
        "schema_version": _version,
        "n": {"type": "integer", "minimum": 2},
        "gamma": {"type": "integer"},
        "gamma_complement": {"type": "integer"},
        "sum": {"type": "integer"},
        "product": {"type": "integer"},
        "hypothesis": {
            "type": "object",
            "required": ["ok", "reason"],
            "properties": {"ok": {"type": "boolean"}, "reason": {"type": ["string", "null"]}},
        },
        "bounds": {
            "type": "object",
            "required": ["sum-upper", "sum-lower", "product-upper", "product-lower"],
            "additionalProperties": _bound,
        },
    },
}

_graph_entry = {
    "type": "object",
    "required": ["n", "edges"],
    "properties": {
        "n": {"type": "integer"},
        "edges": {
            "type": "array",
            "items": {"type": "array", "items": {"type": "integer"}, "minItems": 2, "maxItems": 2},
        },
    },
}

CERTIFY = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "middledom certification report",
    "type": "object",
    "required": ["schema_version", "n_max", "connected_only", "total_violations", "predicates"],
    "properties": {
        "schema_version": _version,
        "n_max": {"type": "integer"},
        "connected_only": {"type": "boolean"},
        "total_violations": {"type": "integer", "minimum": 0},
        "predicates": {
            "type": "array",
            "items": {
                "type": "object",
                "required": [
                    "predicate_id",
                    "anchor",
                    "tested",
                    "not_applicable",
                    "violations",
                    "sharpness_witnesses",
                ],
                "properties": {
                    "predicate_id": {"type": "string"},
                    "anchor": {"type": "string"},
                    "tested": {"type": "integer", "minimum": 0},
                    "not_applicable": {"type": "integer", "minimum": 0},
                    "violations": {"type": "array", "items": _graph_entry},
                    "sharpness_witnesses": {"type": "array", "items": _graph_entry},
                    "observations": {"type": "array", "items": _graph_entry},
                },
            },
        },
    },
}

BY_COMMAND = {"gamma": GAMMA, "nordhaus": NORDHAUS, "certify": CERTIFY}

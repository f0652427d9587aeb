"""JSON schemas (version 1) for everything the CLI emits with ``--json``."""

from __future__ import annotations

import jsonschema

SCHEMA_VERSION = 1

_base = {"schema": {"const": SCHEMA_VERSION}, "command": {"type": "string"}}
_str_list = {"type": "array", "items": {"type": "string"}}
_int_list = {"type": "array", "items": {"type": "integer"}}
_fraction = {"type": "string", "pattern": r"^\d+(/\d+)?$"}

BUDGET = {
    "type": "object",
    "required": ["max_factor_degree", "fresh_variables", "refine_denominator", "max_candidates"],
    "properties": {k: {"type": "integer", "minimum": 0} for k in
                   ("max_factor_degree", "fresh_variables", "refine_denominator", "max_candidates")},
}

CERTIFICATE = {
    "type": "object",
    "required": ["schema", "subject", "p", "variables", "denominator", "degree_bound",
                 "fresh_vars", "verdict", "enumerated_count"],
    "properties": {
        **_base,
        "subject": {"type": "string"},
        "p": {"type": "integer", "minimum": 2},
        "variables": _int_list,
        "denominator": {"type": "integer", "minimum": 1},
        "degree_bound": {"type": "integer", "minimum": 0},
        "fresh_vars": {"type": "integer", "minimum": 0},
        "verdict": {"enum": ["CertifiedWithinBudget", "FactorFound", "Uncertified"]},
        "factors": {**_str_list, "minItems": 2, "maxItems": 2},
        "enumerated_count": {"type": "integer", "minimum": 0},
        "search_space": {"type": "integer", "minimum": 0},
        "method": {"type": "string"},
        "replay_seed": {"type": "integer"},
        "reductions": {"type": "array", "items": {"type": "object"}},
        "reason": {"type": "string"},
    },
    "if": {"properties": {"verdict": {"const": "FactorFound"}}},
    "then": {"required": ["factors"]},
}

ATOMIZATION = {
    "type": "object",
    "required": ["schema", "input", "case", "factors", "bound", "certificates", "replay"],
    "properties": {
        **_base,
        "input": {"type": "string"},
        "case": {"enum": ["UnitCoeff", "MSplit", "MNoSplit", "AlreadyUnit", "Zero"]},
        "factors": _str_list,
        "bound": {"type": "integer", "minimum": 1},
        "length": {"type": "integer", "minimum": 1},
        "within_bound": {"type": "boolean"},
        "complete": {"type": "boolean"},
        "certificates": {"type": "array", "items": CERTIFICATE},
        "replay": {
            "type": "object",
            "required": ["seed", "spec", "budget"],
            "properties": {"seed": {"type": "integer"}, "budget": BUDGET},
        },
    },
}

NILINDEX = {
    "type": "object",
    "required": ["schema", "element", "min_potential", "N", "bound_exponent", "exact_index"],
    "properties": {
        **_base,
        "element": {"type": "string"},
        "min_potential": _fraction,
        "N": {"type": "integer", "minimum": 1},
        "bound_exponent": {"type": "integer", "minimum": 2},
        "exact_index": {"type": "integer", "minimum": 1},
    },
}

WITNESS = {
    "type": "object",
    "required": ["schema", "j", "j_prime", "z1", "z2", "monomial", "degree", "total_potential", "coefficient"],
    "properties": {
        **_base,
        "j": {"type": "integer", "minimum": 0},
        "j_prime": {"type": "integer", "minimum": 0},
        "z1": {"type": "string"},
        "z2": {"type": "string"},
        "monomial": {"type": "string"},
        "degree": {"type": "integer", "minimum": 0},
        "total_potential": _fraction,
        "coefficient": {"type": "integer", "minimum": 1},
    },
}

VALUE = {
    "type": "object",
    "required": ["schema", "result"],
    "properties": {**_base, "result": {"type": "string"}},
}

CHAIN = {
    "type": "object",
    "required": ["schema", "chain"],
    "properties": {**_base, "chain": _str_list},
}

REDUCE = {
    "type": "object",
    "required": ["schema", "image"],
    "properties": {
        **_base,
        "image": {"type": "string"},
        "factorization": {"type": ["string", "null"]},
        "killed": {"type": "string"},
    },
}

ENUMERATE = {
    "type": "object",
    "required": ["schema", "spec", "count"],
    "properties": {
        **_base,
        "spec": {"type": "object"},
        "count": {"type": "integer", "minimum": 1},
        "elements": _str_list,
    },
}

ERROR = {
    "type": "object",
    "required": ["schema", "error", "message"],
    "properties": {**_base, "error": {"type": "string"}, "message": {"type": "string"}},
}

BY_COMMAND = {
    "eval": VALUE,
    "mul": VALUE,
    "proot": VALUE,
    "nilindex": NILINDEX,
    "chain": CHAIN,
    "witness": WITNESS,
    "reduce": REDUCE,
    "atomize": ATOMIZATION,
    "certify": CERTIFICATE,
    "enumerate": ENUMERATE,
}


def validate(doc: dict) -> None:
    """Raise ``jsonschema.ValidationError`` unless ``doc`` matches its schema."""
    schema = ERROR if "error" in doc else BY_COMMAND[doc["command"]]
    jsonschema.validate(doc, schema)

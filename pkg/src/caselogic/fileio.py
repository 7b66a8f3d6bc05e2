"""JSON file formats for case bases and classifier models."""

from __future__ import annotations

import json
from typing import Optional, TextIO, Union

from caselogic.casebase import CaseBase, Precedent
from caselogic.models import ClassifierModel
from caselogic.signature import DEFENDANT, PLAINTIFF, UNKNOWN, Signature, Val


class FormatError(ValueError):
    """Structurally malformed input document."""


_OUTCOME_IN = {"plaintiff": PLAINTIFF, "defendant": DEFENDANT}
_OUTCOME_OUT = {PLAINTIFF: "plaintiff", DEFENDANT: "defendant"}

_VAL_IN = {"1": PLAINTIFF, "0": DEFENDANT, "?": UNKNOWN}
_VAL_OUT = {PLAINTIFF: "1", DEFENDANT: "0", UNKNOWN: "?"}


def _require(cond: bool, message: str):
    if not cond:
        raise FormatError(message)


def signature_from_dict(d: dict) -> Signature:
    _require(isinstance(d, dict), "signature must be an object")
    _require("plaintiff" in d and "defendant" in d, "signature needs 'plaintiff' and 'defendant' lists")
    plt, dfd = d["plaintiff"], d["defendant"]
    _require(isinstance(plt, list) and isinstance(dfd, list), "signature sides must be lists")
    try:
        return Signature(tuple(plt), tuple(dfd))
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def signature_to_dict(sig: Signature) -> dict:
    return {"plaintiff": list(sig.plt), "defendant": list(sig.dfd)}


def case_base_from_dict(d: dict) -> CaseBase:
    _require(isinstance(d, dict), "case-base document must be an object")
    _require("signature" in d, "missing 'signature'")
    _require("cases" in d and isinstance(d["cases"], list), "missing 'cases' list")
    sig = signature_from_dict(d["signature"])
    cases = []
    for i, entry in enumerate(d["cases"]):
        _require(isinstance(entry, dict), f"case #{i} must be an object")
        for field in ("id", "facts", "reason", "outcome"):
            _require(field in entry, f"case #{i} missing {field!r}")
        _require(entry["outcome"] in _OUTCOME_IN, f"case #{i}: outcome must be 'plaintiff' or 'defendant'")
        _require(
            isinstance(entry["facts"], list) and isinstance(entry["reason"], list),
            f"case #{i}: facts and reason must be lists",
        )
        cases.append(
            Precedent(
                entry["id"],
                frozenset(entry["facts"]),
                frozenset(entry["reason"]),
                _OUTCOME_IN[entry["outcome"]],
            )
        )
    return CaseBase.of(sig, cases)


def case_base_to_dict(cb: CaseBase) -> dict:
    sig = cb.signature
    return {
        "signature": signature_to_dict(sig),
        "cases": [
            {
                "id": c.id,
                "facts": sorted(c.facts, key=sig.index),
                "reason": sorted(c.reason, key=sig.index),
                "outcome": _OUTCOME_OUT[c.outcome],
            }
            for c in cb.cases
        ],
    }


def load_case_base(source: Union[str, TextIO]) -> CaseBase:
    if isinstance(source, str):
        with open(source, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    else:
        doc = json.load(source)
    return case_base_from_dict(doc)


def model_from_dict(d: dict) -> ClassifierModel:
    _require(isinstance(d, dict), "model document must be an object")
    _require("signature" in d, "missing 'signature'")
    sig = signature_from_dict(d["signature"])
    _require("decisions" in d and isinstance(d["decisions"], list), "missing 'decisions' list")
    raw_decisions = d["decisions"]
    if "states" in d and d["states"] is not None:
        _require(isinstance(d["states"], list), "'states' must be a list of factor lists")
        try:
            states = [sig.mask(names) for names in d["states"]]
        except ValueError as exc:
            raise FormatError(str(exc)) from exc
    else:
        states = list(sig.canonical_states)
    _require(
        len(states) == len(raw_decisions),
        "states and decisions must correspond positionally",
    )
    decisions = {}
    for s, v in zip(states, raw_decisions):
        _require(v in _VAL_IN, f"decision must be '1', '0' or '?', got {v!r}")
        decisions[s] = _VAL_IN[v]
    _require(len(decisions) == len(states), "duplicate states")
    try:
        return ClassifierModel.from_map(sig, decisions)
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def model_to_dict(model: ClassifierModel, omit_full_states: bool = False) -> dict:
    sig = model.signature
    out = {"signature": signature_to_dict(sig)}
    if model.is_full and omit_full_states:
        order = sig.canonical_states
        out["decisions"] = [_VAL_OUT[model.decision(s)] for s in order]
    else:
        order = sorted(model.states, key=lambda s: sig.canonical_states.index(s))
        out["states"] = [list(sig.names(s)) for s in order]
        out["decisions"] = [_VAL_OUT[model.decision(s)] for s in order]
    return out


def load_model(source: Union[str, TextIO]) -> ClassifierModel:
    if isinstance(source, str):
        with open(source, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    else:
        doc = json.load(source)
    return model_from_dict(doc)

"""Command-line front end.

Exit-code protocol: 0 for positive verdicts, 1 for negative verdicts (with
a witness in the report), 2 for usage, capacity, or input errors.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from caselogic import bridge, explain, fileio, models
from caselogic.casebase import (
    CaseBase,
    Precedent,
    check_update,
    conflict_witness,
    forced_outcome,
    forcing_cases,
    is_consistent,
    is_result_case,
    validate_case_base,
)
from caselogic.errors import CapacityError, ParseError
from caselogic.formulas import parse_formula, print_formula
from caselogic.models import ClassifierModel, satisfies
from caselogic.signature import CONFLICT, UNKNOWN, Signature

DEFAULT_SEED = 12345

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_ERROR = 2


class _CliError(Exception):
    pass


def _load_cb(path: str) -> CaseBase:
    try:
        cb = fileio.load_case_base(path)
    except (OSError, json.JSONDecodeError, fileio.FormatError) as exc:
        raise _CliError(f"cannot read case base: {exc}") from exc
    report = validate_case_base(cb)
    if not report.ok:
        lines = "; ".join(f"{v.case_id}: {v.message}" for v in report.errors)
        raise _CliError(f"invalid case base: {lines}")
    return cb


def _parse_facts(cb_sig: Signature, text: str) -> frozenset:
    names = [n.strip() for n in text.split(",") if n.strip()] if text else []
    unknown = [n for n in names if n not in cb_sig._index]
    if unknown:
        raise _CliError(f"unknown factors: {unknown}")
    return frozenset(names)


def _emit(args, payload: dict, text_lines):
    if args.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _witness_dict(sig: Signature, witness) -> dict:
    return {
        "case_for_0": witness.case_for_0.id,
        "case_for_1": witness.case_for_1.id,
        "reason_for_0": sorted(witness.reason_for_0.factors, key=sig.index),
        "reason_for_1": sorted(witness.reason_for_1.factors, key=sig.index),
    }


def _conflict_state(cb: CaseBase):
    report = bridge.build_canonical_model(cb)
    if isinstance(report, bridge.ConflictReport):
        return report
    return None


def cmd_check(args) -> int:
    cb = _load_cb(args.casebase)
    consistent = is_consistent(cb)
    if consistent != bridge.theorem1_decide(cb):
        raise AssertionError("consistency and satisfiability decisions disagree")
    sig = cb.signature
    payload = {"consistent": consistent}
    lines = ["consistent" if consistent else "inconsistent"]
    if not consistent:
        witness = conflict_witness(cb)
        conflict = _conflict_state(cb)
        payload["witness"] = _witness_dict(sig, witness)
        payload["conflict_state"] = sorted(conflict.state, key=sig.index)
        lines.append(
            f"conflict between {witness.case_for_0.id} and {witness.case_for_1.id}"
        )
        lines.append(
            "conflict state: {" + ", ".join(sorted(conflict.state, key=sig.index)) + "}"
        )
    _emit(args, payload, lines)
    return EXIT_OK if consistent else EXIT_NEGATIVE


def cmd_decide(args) -> int:
    cb = _load_cb(args.casebase)
    facts = _parse_facts(cb.signature, args.facts)
    outcome = forced_outcome(cb, facts)
    forcing = []
    if outcome in (0, 1):
        forcing = [c.id for c in forcing_cases(cb, facts, outcome)]
    elif outcome == CONFLICT:
        forcing = [c.id for x in (0, 1) for c in forcing_cases(cb, facts, x)]
    payload = {"outcome": str(outcome), "forced_by": forcing}
    lines = [str(outcome)] + ([f"forced by: {', '.join(forcing)}"] if forcing else [])
    _emit(args, payload, lines)
    return EXIT_OK


def _inline_case(cb: CaseBase, text: str) -> Precedent:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise _CliError(f"malformed case JSON: {exc}") from exc
    wrapped = {"signature": fileio.signature_to_dict(cb.signature), "cases": [doc]}
    try:
        parsed = fileio.case_base_from_dict(wrapped)
    except fileio.FormatError as exc:
        raise _CliError(str(exc)) from exc
    report = validate_case_base(parsed)
    if not report.ok:
        raise _CliError(f"invalid case: {report.errors[0].message}")
    return parsed.cases[0]


def cmd_update(args) -> int:
    cb = _load_cb(args.casebase)
    new_case = _inline_case(cb, args.case)
    result = check_update(cb, new_case)
    if result.accepted != bridge.corollary2_decide(cb, new_case):
        raise AssertionError("update check and satisfiability decision disagree")
    sig = cb.signature
    if result.accepted:
        _emit(args, {"accepted": True}, ["accept"])
        return EXIT_OK
    conflict = _conflict_state(cb.with_case(new_case))
    payload = {
        "accepted": False,
        "witness": _witness_dict(sig, result.witness),
        "conflict_state": sorted(conflict.state, key=sig.index),
    }
    lines = [
        "reject",
        f"conflict between {result.witness.case_for_0.id} and {result.witness.case_for_1.id}",
        "conflict state: {" + ", ".join(sorted(conflict.state, key=sig.index)) + "}",
    ]
    _emit(args, payload, lines)
    return EXIT_NEGATIVE


def cmd_translate(args) -> int:
    cb = _load_cb(args.casebase)
    sig = cb.signature
    if args.model == "result":
        bad = [c.id for c in cb.cases if not is_result_case(sig, c)]
        if bad:
            raise _CliError(f"not result cases: {bad}; use --model reason")
        conjuncts = [bridge.tr1(sig, c) for c in cb.cases]
    else:
        conjuncts = [bridge.tr2(sig, c) for c in cb.cases]
    lines = [print_formula(f) for f in conjuncts] or ["true"]
    payload = {"conjuncts": lines}
    if args.emit_model:
        model = bridge.build_canonical_model(cb)
        if isinstance(model, bridge.ConflictReport):
            raise _CliError("cannot emit a model: the case base is inconsistent")
        with open(args.emit_model, "w", encoding="utf-8") as fh:
            json.dump(fileio.model_to_dict(model), fh, indent=2)
        payload["model_file"] = args.emit_model
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_explain(args) -> int:
    cb = _load_cb(args.casebase)
    sig = cb.signature
    if not is_consistent(cb):
        witness = conflict_witness(cb)
        _emit(
            args,
            {"error": "inconsistent case base", "witness": _witness_dict(sig, witness)},
            ["inconsistent case base"],
        )
        return EXIT_NEGATIVE
    target = None
    if args.outcome is not None:
        target = {"1": 1, "0": 0, "?": UNKNOWN}[args.outcome]
    if args.kind == "pimp" and target is None:
        raise _CliError("--outcome is required for prime-implicant enumeration")
    facts = _parse_facts(sig, args.facts or "")
    if args.kind != "pimp" and args.facts is None:
        raise _CliError("--facts is required for state-local explanations")
    state = sig.mask(facts)
    if args.all_models:
        result = explain.explanations_all_models(cb, state, args.kind, target)
    else:
        model = bridge.build_canonical_model(cb)
        assert isinstance(model, ClassifierModel)
        result = explain.enumerate_explanations(model, state, args.kind, target)
    payload = result.to_dict(sig)
    lines = [f"{result.kind} for outcome {result.target}:"]
    lines += ["  " + t.render(sig) for t in result.terms] or ["  (none)"]
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_eval(args) -> int:
    try:
        model = fileio.load_model(args.model)
    except (OSError, json.JSONDecodeError, fileio.FormatError) as exc:
        raise _CliError(f"cannot read model: {exc}") from exc
    sig = model.signature
    state = sig.mask(_parse_facts(sig, args.state))
    formula = parse_formula(args.formula, sig)
    if not model.has_state(state):
        raise _CliError("the given state is not a state of the model")
    holds = satisfies(model, state, formula)
    _emit(args, {"holds": holds}, ["true" if holds else "false"])
    return EXIT_OK if holds else EXIT_NEGATIVE


def cmd_sat(args) -> int:
    try:
        sig = fileio.signature_from_dict(json.loads(args.signature))
    except (json.JSONDecodeError, fileio.FormatError) as exc:
        raise _CliError(f"bad signature: {exc}") from exc
    formula = parse_formula(args.formula, sig)
    model_class = "cm_prec" if args.prec else "cm"
    bound = args.bound if args.bound is not None else models.MODEL_ENUM_BOUND
    result = models.is_satisfiable_tiny(formula, sig, model_class, bound)
    payload = {"satisfiable": result.holds}
    lines = ["satisfiable" if result.holds else "unsatisfiable"]
    if result.holds:
        payload["witness_model"] = fileio.model_to_dict(result.model)
        payload["witness_state"] = list(sig.names(result.state))
        lines.append("state: {" + ", ".join(sig.names(result.state)) + "}")
    _emit(args, payload, lines)
    return EXIT_OK if result.holds else EXIT_NEGATIVE


def cmd_selftest(args) -> int:
    from caselogic import selftest

    seed = args.seed if args.seed is not None else DEFAULT_SEED
    rng = random.Random(seed)
    ok = selftest.run(rng, print)
    return EXIT_OK if ok else EXIT_NEGATIVE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="caselogic",
        description="Precedential-constraint reasoning and classifier-logic explanations",
    )
    parser.add_argument("--format", choices=("json", "text"), default="text")
    parser.add_argument("--seed", type=int, default=None, help="seed for randomized suites")
    parser.add_argument("--bound", type=int, default=None, help="tiny-scale enumeration bound override")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="decide case-base consistency")
    p.add_argument("casebase")
    p.set_defaults(fn=cmd_check)

    p = sub.add_parser("decide", help="forced outcome for a fact situation")
    p.add_argument("casebase")
    p.add_argument("--facts", required=True, help="comma-separated factor names")
    p.set_defaults(fn=cmd_decide)

    p = sub.add_parser("update", help="precedential-constraint update check")
    p.add_argument("casebase")
    p.add_argument("--case", required=True, help="inline case JSON")
    p.set_defaults(fn=cmd_update)

    p = sub.add_parser("translate", help="translate a case base into formulas")
    p.add_argument("casebase")
    p.add_argument("--model", choices=("result", "reason"), default="reason")
    p.add_argument("--emit-model", default=None, help="write the induced model file")
    p.set_defaults(fn=cmd_translate)

    p = sub.add_parser("explain", help="explanations over the induced model")
    p.add_argument("casebase")
    p.add_argument("--facts", default=None, help="comma-separated factor names")
    p.add_argument("--kind", choices=("axp", "cxp", "pimp", "waxp", "wcxp"), required=True)
    p.add_argument("--outcome", choices=("1", "0", "?"), default=None)
    p.add_argument("--all-models", action="store_true", help="quantify over all conforming models (tiny scale)")
    p.set_defaults(fn=cmd_explain)

    p = sub.add_parser("eval", help="evaluate a formula at a model state")
    p.add_argument("model")
    p.add_argument("--state", required=True)
    p.add_argument("--formula", required=True)
    p.set_defaults(fn=cmd_eval)

    p = sub.add_parser("sat", help="tiny-scale satisfiability")
    p.add_argument("--signature", required=True, help='inline JSON, e.g. {"plaintiff":["p"],"defendant":[]}')
    p.add_argument("--formula", required=True)
    p.add_argument("--prec", action="store_true", help="restrict to complete two-way-monotone models")
    p.set_defaults(fn=cmd_sat)

    p = sub.add_parser("selftest", help="run the built-in verification suites")
    p.set_defaults(fn=cmd_selftest)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except _CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except (ParseError, CapacityError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())

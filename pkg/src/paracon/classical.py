"""Classical propositional consequence, decided by valuation search.

Entailment A |- f is decided semantically: A |- f iff A with ~f has no
model.  Consequence sets are never materialized; everything is a decision
procedure over finite premise sets.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Optional

from .formula import And, Formula, FormulaUniverse, Implies, Not, Or, Var, variables

Valuation = Mapping[str, bool]


def evaluate(f: Formula, valuation: Valuation) -> bool:
    """Truth value of f under a valuation total over variables(f)."""
    match f:
        case Var(name):
            return bool(valuation[name])
        case Not(child):
            return not evaluate(child, valuation)
        case And(left, right):
            return evaluate(left, valuation) and evaluate(right, valuation)
        case Or(left, right):
            return evaluate(left, valuation) or evaluate(right, valuation)
        case Implies(left, right):
            return (not evaluate(left, valuation)) or evaluate(right, valuation)
    raise TypeError(f"not a Formula: {f!r}")


def _evaluate_partial(f: Formula, valuation: dict[str, bool]) -> Optional[bool]:
    # Three-valued short-circuit evaluation; None means "not yet decided".
    match f:
        case Var(name):
            return valuation.get(name)
        case Not(child):
            value = _evaluate_partial(child, valuation)
            return None if value is None else not value
        case And(left, right):
            lv = _evaluate_partial(left, valuation)
            if lv is False:
                return False
            rv = _evaluate_partial(right, valuation)
            if rv is False:
                return False
            return True if (lv is True and rv is True) else None
        case Or(left, right):
            lv = _evaluate_partial(left, valuation)
            if lv is True:
                return True
            rv = _evaluate_partial(right, valuation)
            if rv is True:
                return True
            return False if (lv is False and rv is False) else None
        case Implies(left, right):
            lv = _evaluate_partial(left, valuation)
            if lv is False:
                return True
            rv = _evaluate_partial(right, valuation)
            if rv is True:
                return True
            return False if (lv is True and rv is False) else None
    raise TypeError(f"not a Formula: {f!r}")


def is_satisfiable(premises: Iterable[Formula]) -> bool:
    """True iff some valuation satisfies every premise (empty set: True)."""
    formulas = list(premises)
    names = sorted({v for f in formulas for v in variables(f)})
    valuation: dict[str, bool] = {}

    def extend(index: int) -> bool:
        for f in formulas:
            if _evaluate_partial(f, valuation) is False:
                return False
        if index == len(names):
            return True
        name = names[index]
        for value in (False, True):
            valuation[name] = value
            if extend(index + 1):
                return True
        del valuation[name]
        return False

    return extend(0)


def entails(premises: Iterable[Formula], conclusion: Formula) -> bool:
    """A |- f, decided as unsatisfiability of A with the negated conclusion."""
    return not is_satisfiable([*premises, Not(conclusion)])


def is_theorem(f: Formula) -> bool:
    return entails((), f)


def is_contradiction(f: Formula) -> bool:
    """True iff {f} is unsatisfiable (so {f} entails everything)."""
    return not is_satisfiable([f])


@dataclass(frozen=True)
class SetClassification:
    consistent: bool
    contradictory: bool
    strongly_contradictory: bool
    paraconsistent: bool
    witness: Optional[Formula]


def classify(
    premises: Iterable[Formula], candidates: FormulaUniverse
) -> SetClassification:
    """Classify a premise set by searching the candidate universe.

    contradictory: some candidate a has A |- a and A |- ~a;
    strongly contradictory: some candidate contradiction a has A |- a;
    paraconsistent: consistent and contradictory (never both, classically).
    """
    if len(candidates) == 0:
        raise ValueError("candidate universe must be non-empty")
    premise_list = list(premises)
    consistent = is_satisfiable(premise_list)

    contradictory_witness = None
    for a in candidates:
        if entails(premise_list, a) and entails(premise_list, Not(a)):
            contradictory_witness = a
            break

    strong_witness = None
    for a in candidates:
        if is_contradiction(a) and entails(premise_list, a):
            strong_witness = a
            break

    contradictory = contradictory_witness is not None
    return SetClassification(
        consistent=consistent,
        contradictory=contradictory,
        strongly_contradictory=strong_witness is not None,
        paraconsistent=consistent and contradictory,
        witness=contradictory_witness if contradictory else strong_witness,
    )

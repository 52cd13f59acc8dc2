"""Mechanical verification of the consequence-property summary table.

Universally quantified laws are confirmed by seeded randomized trials plus
directed named instances; failures are established by replaying concrete
counterexamples through the public operations.  Nothing here is a proof:
the suite is a regression detector, and every verdict carries replayable
evidence and a trial count (a confirmation with zero trials is forbidden).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Optional

from .classical import (
    classify,
    entails,
    is_contradiction,
    is_satisfiable,
    is_theorem,
)
from .formula import (
    And,
    Formula,
    FormulaSet,
    Implies,
    Not,
    Or,
    Var,
    build_universe,
    render,
)
from .parafunctor import (
    maximal_consistent_subsets,
    para_classify,
    para_entails,
    paraconsistentize_finite,
)
from .structures import (
    FiniteConsequenceStructure,
    check_conjunctive_property,
    check_explosive,
    check_joint_consistency,
    is_normal,
)

DEFAULT_SEED = 0
DEFAULT_TRIALS = 1000

VARIABLE_POOL = ("p", "q", "r")
MAX_DEPTH = 4
MAX_PREMISES = 5

P, Q = Var("p"), Var("q")
FALSUM = And(P, Not(P))  # p & ~p


@dataclass(frozen=True)
class ClaimResult:
    claim: str
    verdict: str  # confirmed | refuted | not applicable
    trials: int
    evidence: dict[str, str]


@dataclass(frozen=True)
class TableRow:
    name: str
    holds_cn: bool
    holds_cnp: bool
    evidence: str


# Expected (classical, paraclassical) verdict per property row.
EXPECTED_VERDICTS: dict[str, tuple[bool, bool]] = {
    "finiteness": (True, True),
    "monotonicity": (True, True),
    "inclusion": (True, False),
    "idempotency": (True, False),
    "transitivity": (True, False),
    "weak transitivity": (True, True),
    "deduction": (True, True),
    "inconsistent sets": (True, False),
    "contradictory sets": (True, True),
    "strongly contradictory sets": (True, False),
    "paraconsistent sets": (False, True),
}


class FormulaSampler:
    """Seeded random formulas over {p, q, r}, depth-bounded."""

    def __init__(self, rng: random.Random):
        self.rng = rng

    def formula(self, depth: int = MAX_DEPTH) -> Formula:
        kind = self.rng.choice(("var", "not", "and", "or", "implies")) if depth else "var"
        if kind == "var":
            return Var(self.rng.choice(VARIABLE_POOL))
        if kind == "not":
            return Not(self.formula(depth - 1))
        left, right = self.formula(depth - 1), self.formula(depth - 1)
        return {"and": And, "or": Or, "implies": Implies}[kind](left, right)

    def premise_set(self, min_size: int = 0, max_size: int = MAX_PREMISES) -> FormulaSet:
        size = self.rng.randint(min_size, max_size)
        return FormulaSet(self.formula() for _ in range(size))

    def subset_of(self, fs: FormulaSet) -> FormulaSet:
        size = self.rng.randint(0, len(fs))
        picked = sorted(self.rng.sample(range(len(fs)), size))
        return FormulaSet(fs.items[i] for i in picked)

    def contradiction(self) -> Formula:
        # f & ~f is always unsatisfiable; occasionally find one in the wild.
        if self.rng.random() < 0.7:
            f = self.formula(2)
            return And(f, Not(f))
        for _ in range(40):
            f = self.formula()
            if is_contradiction(f):
                return f
        return FALSUM

    def tautology(self) -> Formula:
        roll = self.rng.random()
        if roll < 0.4:
            f = self.formula(2)
            return Implies(f, f)
        if roll < 0.7:
            f = self.formula(2)
            return Or(f, Not(f))
        for _ in range(40):
            f = self.formula()
            if is_theorem(f):
                return f
        return Implies(P, P)

    def consequence_of(self, premises: FormulaSet) -> Formula:
        """A formula classically entailed by the given premises."""
        if len(premises) == 0:
            return self.tautology()
        roll = self.rng.random()
        member = self.rng.choice(premises.items)
        if roll < 0.3:
            return member
        if roll < 0.6:
            return Or(member, self.formula(2))
        if roll < 0.8:
            other = self.rng.choice(premises.items)
            return Or(And(member, other), self.formula(2))
        return self.tautology()

    def para_consequence_of(self, premises: FormulaSet) -> Formula:
        """A formula derivable from the premises under |-P."""
        first_mcs = maximal_consistent_subsets(premises)[0]
        return self.consequence_of(first_mcs)


def _rng(seed: int, label: str) -> random.Random:
    return random.Random(f"{seed}:{label}")


def _r(f: Optional[Formula]) -> str:
    return render(f) if f is not None else "-"


def _run_trials(
    seed: int,
    label: str,
    trials: int,
    trial: Callable[[FormulaSampler], Optional[bool | dict]],
) -> tuple[int, Optional[dict]]:
    """Run trials until `trials` of them meet their precondition.

    The trial callback returns True (law held), None (precondition not met,
    does not count), or a violation-evidence dict (law broken).
    """
    sampler = FormulaSampler(_rng(seed, label))
    effective = 0
    attempts = 0
    cap = max(trials * 80, 2000)
    while effective < trials and attempts < cap:
        attempts += 1
        outcome = trial(sampler)
        if outcome is None:
            continue
        effective += 1
        if outcome is not True:
            return effective, outcome
    if effective == 0:
        raise RuntimeError(f"no effective trials for {label!r}")
    return effective, None


def _render_violation(evidence: dict) -> str:
    return "; ".join(f"{key}={value}" for key, value in evidence.items())


# ---------------------------------------------------------------------------
# Table rows


def _row_finiteness(seed: int, trials: int) -> TableRow:
    def trial_cn(s: FormulaSampler):
        premises = s.premise_set()
        conclusion = s.consequence_of(premises)
        if not entails(premises, conclusion):
            return {"A": premises.render(), "f": _r(conclusion), "lost": "classical"}
        return True  # the finite set A itself supports the consequence

    def trial_cnp(s: FormulaSampler):
        premises = s.premise_set()
        conclusion = s.para_consequence_of(premises)
        witness = para_entails(premises, conclusion)
        if witness is None:
            return {"A": premises.render(), "f": _r(conclusion), "lost": "para"}
        return True  # the witness support is a finite subset by construction

    n_cn, v_cn = _run_trials(seed, "finiteness:cn", trials, trial_cn)
    n_cnp, v_cnp = _run_trials(seed, "finiteness:cnp", trials, trial_cnp)
    evidence = (
        f"finite supports found for every sampled consequence "
        f"({n_cn}+{n_cnp} trials; vacuous at finite scale)"
    )
    if v_cn or v_cnp:
        evidence = _render_violation(v_cn or v_cnp)
    return TableRow("finiteness", v_cn is None, v_cnp is None, evidence)


def _row_monotonicity(seed: int, trials: int) -> TableRow:
    def trial_cn(s: FormulaSampler):
        larger = s.premise_set(min_size=1)
        smaller = s.subset_of(larger)
        conclusion = s.consequence_of(smaller)
        if not entails(smaller, conclusion):
            return None
        if entails(larger, conclusion):
            return True
        return {"A": smaller.render(), "B": larger.render(), "f": _r(conclusion)}

    def trial_cnp(s: FormulaSampler):
        larger = s.premise_set(min_size=1)
        smaller = s.subset_of(larger)
        conclusion = s.para_consequence_of(smaller)
        if para_entails(smaller, conclusion) is None:
            return None
        if para_entails(larger, conclusion) is not None:
            return True
        return {"A": smaller.render(), "B": larger.render(), "f": _r(conclusion)}

    n_cn, v_cn = _run_trials(seed, "monotonicity:cn", trials, trial_cn)
    n_cnp, v_cnp = _run_trials(seed, "monotonicity:cnp", trials, trial_cnp)
    instance_ok = (
        entails([P], Or(P, Q))
        and entails([P, Not(P)], Or(P, Q))
        and para_entails([P], Or(P, Q)) is not None
        and para_entails([P, Not(P)], Or(P, Q)) is not None
    )
    evidence = (
        f"preserved under premise growth in {n_cn}+{n_cnp} trials; "
        f"instance {{p}} into {{p, ~p}} keeps p | q"
    )
    if v_cn or v_cnp or not instance_ok:
        evidence = _render_violation(v_cn or v_cnp or {"instance": "failed"})
    return TableRow(
        "monotonicity", v_cn is None, v_cnp is None and instance_ok, evidence
    )


def _row_inclusion(seed: int, trials: int) -> TableRow:
    def trial_cn(s: FormulaSampler):
        premises = s.premise_set(min_size=1)
        for member in premises:
            if not entails(premises, member):
                return {"A": premises.render(), "member": _r(member)}
        return True

    n_cn, v_cn = _run_trials(seed, "inclusion:cn", trials, trial_cn)
    # The paraclassical counterexample: a self-contradiction loses itself.
    counterexample_replays = para_entails([FALSUM], FALSUM) is None
    evidence = (
        f"classical: every member re-derivable in {n_cn} trials; "
        f"para: {{p & ~p}} does not derive p & ~p"
    )
    if v_cn:
        evidence = _render_violation(v_cn)
    return TableRow("inclusion", v_cn is None, not counterexample_replays, evidence)


def _chain_trial(s: FormulaSampler, para: bool):
    # A derives every member of B, B derives c; the law demands A derives c.
    premises = s.premise_set()
    if para:
        middle = FormulaSet(
            s.para_consequence_of(premises) for _ in range(s.rng.randint(1, 3))
        )
        if any(para_entails(premises, b) is None for b in middle):
            return None
        conclusion = s.para_consequence_of(middle)
        if para_entails(middle, conclusion) is None:
            return None
        if para_entails(premises, conclusion) is not None:
            return True
    else:
        middle = FormulaSet(
            s.consequence_of(premises) for _ in range(s.rng.randint(1, 3))
        )
        if any(not entails(premises, b) for b in middle):
            return None
        conclusion = s.consequence_of(middle)
        if not entails(middle, conclusion):
            return None
        if entails(premises, conclusion):
            return True
    return {"A": premises.render(), "B": middle.render(), "c": _r(conclusion)}


def _transitivity_counterexample() -> bool:
    """Replay the paraclassical transitivity failure; True when it replays."""
    a_set = FormulaSet([P, Not(P)])
    b_set = FormulaSet([Or(P, Q), Not(P)])
    return (
        para_entails(a_set, Or(P, Q)) is not None
        and para_entails(a_set, Not(P)) is not None
        and para_entails(b_set, Q) is not None
        and para_entails(a_set, Q) is None
    )


def _row_idempotency(seed: int, trials: int) -> TableRow:
    n_cn, v_cn = _run_trials(
        seed, "idempotency:cn", trials, lambda s: _chain_trial(s, para=False)
    )
    counterexample_replays = _transitivity_counterexample()
    evidence = (
        f"classical: consequence chains stay closed in {n_cn} trials; "
        f"para: {{p | q, ~p}} lies inside the consequences of {{p, ~p}} "
        f"yet adds q"
    )
    if v_cn:
        evidence = _render_violation(v_cn)
    return TableRow("idempotency", v_cn is None, not counterexample_replays, evidence)


def _row_transitivity(seed: int, trials: int) -> TableRow:
    n_cn, v_cn = _run_trials(
        seed, "transitivity:cn", trials, lambda s: _chain_trial(s, para=False)
    )
    counterexample_replays = _transitivity_counterexample()
    evidence = (
        f"classical: holds in {n_cn} trials; "
        f"para: A={{p, ~p}}, B={{p | q, ~p}}, a=q"
    )
    if v_cn:
        evidence = _render_violation(v_cn)
    return TableRow("transitivity", v_cn is None, not counterexample_replays, evidence)


def _row_weak_transitivity(seed: int, trials: int) -> TableRow:
    def trial_cn(s: FormulaSampler):
        premises = s.premise_set()
        middle = s.consequence_of(premises)
        conclusion = s.consequence_of(FormulaSet([middle]))
        if not (entails(premises, middle) and entails([middle], conclusion)):
            return None
        if entails(premises, conclusion):
            return True
        return {"A": premises.render(), "b": _r(middle), "c": _r(conclusion)}

    def trial_cnp(s: FormulaSampler):
        premises = s.premise_set()
        middle = s.para_consequence_of(premises)
        conclusion = s.para_consequence_of(FormulaSet([middle]))
        if para_entails(premises, middle) is None:
            return None
        if para_entails([middle], conclusion) is None:
            return None
        if para_entails(premises, conclusion) is not None:
            return True
        return {"A": premises.render(), "b": _r(middle), "c": _r(conclusion)}

    n_cn, v_cn = _run_trials(seed, "weak transitivity:cn", trials, trial_cn)
    n_cnp, v_cnp = _run_trials(seed, "weak transitivity:cnp", trials, trial_cnp)
    evidence = f"single-formula middle steps compose in {n_cn}+{n_cnp} trials"
    if v_cn or v_cnp:
        evidence = _render_violation(v_cn or v_cnp)
    return TableRow("weak transitivity", v_cn is None, v_cnp is None, evidence)


def _row_deduction(seed: int, trials: int) -> TableRow:
    def trial_cn(s: FormulaSampler):
        premises = s.premise_set()
        extra = s.formula()
        extended = FormulaSet([*premises, extra])
        conclusion = s.consequence_of(extended)
        if not entails(extended, conclusion):
            return None
        if entails(premises, Implies(extra, conclusion)):
            return True
        return {"A": premises.render(), "a": _r(extra), "b": _r(conclusion)}

    def trial_cnp(s: FormulaSampler):
        premises = s.premise_set()
        extra = s.formula()
        extended = FormulaSet([*premises, extra])
        conclusion = s.para_consequence_of(extended)
        if para_entails(extended, conclusion) is None:
            return None
        if para_entails(premises, Implies(extra, conclusion)) is not None:
            return True
        return {"A": premises.render(), "a": _r(extra), "b": _r(conclusion)}

    n_cn, v_cn = _run_trials(seed, "deduction:cn", trials, trial_cn)
    n_cnp, v_cnp = _run_trials(seed, "deduction:cnp", trials, trial_cnp)
    converse_fails = (
        para_entails([Q], Implies(FALSUM, FALSUM)) is not None
        and para_entails([Q, FALSUM], FALSUM) is None
    )
    evidence = (
        f"holds in {n_cn}+{n_cnp} trials; converse fails for para: "
        f"{{q, p & ~p}} does not derive p & ~p"
    )
    if v_cn or v_cnp or not converse_fails:
        evidence = _render_violation(v_cn or v_cnp or {"converse instance": "failed"})
    return TableRow(
        "deduction", v_cn is None, v_cnp is None and converse_fails, evidence
    )


def _row_inconsistent_sets(seed: int, trials: int) -> TableRow:
    # Classical: an unsatisfiable set entails everything.
    classical_exists = (not is_satisfiable([FALSUM])) and entails([FALSUM], Q)

    def trial_cnp(s: FormulaSampler):
        premises = s.premise_set()
        blocked = s.contradiction()
        if para_entails(premises, blocked) is None:
            return True  # something stays underivable, so the set is proper
        return {"A": premises.render(), "derived contradiction": _r(blocked)}

    n_cnp, v_cnp = _run_trials(seed, "inconsistent sets:cnp", trials, trial_cnp)
    evidence = (
        f"classical: {{p & ~p}} derives everything; para: every sampled set "
        f"left a contradiction underivable ({n_cnp} trials)"
    )
    if v_cnp:
        evidence = _render_violation(v_cnp)
    return TableRow(
        "inconsistent sets", classical_exists, v_cnp is not None, evidence
    )


def _row_contradictory_sets(seed: int, trials: int) -> TableRow:
    pair = FormulaSet([P, Not(P)])
    classical_exists = entails(pair, P) and entails(pair, Not(P))
    para_exists = (
        para_entails(pair, P) is not None and para_entails(pair, Not(P)) is not None
    )
    evidence = "both derive p and ~p from {p, ~p} (para supports {p} and {~p})"
    return TableRow("contradictory sets", classical_exists, para_exists, evidence)


def _row_strongly_contradictory_sets(seed: int, trials: int) -> TableRow:
    classical_exists = is_contradiction(FALSUM) and entails([P, Not(P)], FALSUM)

    def trial_cnp(s: FormulaSampler):
        premises = s.premise_set()
        blocked = s.contradiction()
        if para_entails(premises, blocked) is None:
            return True
        return {"A": premises.render(), "derived contradiction": _r(blocked)}

    n_cnp, v_cnp = _run_trials(seed, "strongly contradictory:cnp", trials, trial_cnp)
    evidence = (
        f"classical: {{p, ~p}} derives p & ~p; para: no contradiction ever "
        f"derivable ({n_cnp} trials)"
    )
    if v_cnp:
        evidence = _render_violation(v_cnp)
    return TableRow(
        "strongly contradictory sets", classical_exists, v_cnp is not None, evidence
    )


def _row_paraconsistent_sets(seed: int, trials: int) -> TableRow:
    def trial_cn(s: FormulaSampler):
        premises = s.premise_set(min_size=1)
        candidates = build_universe(premises, ("subformulas", "negations"))
        verdict = classify(premises, candidates)
        if not verdict.paraconsistent:
            return True
        return {"A": premises.render(), "witness": _r(verdict.witness)}

    n_cn, v_cn = _run_trials(seed, "paraconsistent sets:cn", trials, trial_cn)
    pair = FormulaSet([P, Not(P)])
    candidates = build_universe(FormulaSet([P, Not(P), Q]), ("with_falsum",))
    para_example = para_classify(pair, candidates)
    evidence = (
        f"classical: none found in {n_cn} trials (consistency excludes "
        f"contradictoriness); para: {{p, ~p}} is consistent and contradictory"
    )
    if v_cn:
        evidence = _render_violation(v_cn)
    return TableRow(
        "paraconsistent sets",
        v_cn is not None,
        para_example.paraconsistent,
        evidence,
    )


_ROW_BUILDERS = (
    _row_finiteness,
    _row_monotonicity,
    _row_inclusion,
    _row_idempotency,
    _row_transitivity,
    _row_weak_transitivity,
    _row_deduction,
    _row_inconsistent_sets,
    _row_contradictory_sets,
    _row_strongly_contradictory_sets,
    _row_paraconsistent_sets,
)


def verify_table(seed: int = DEFAULT_SEED, trials: int = DEFAULT_TRIALS) -> list[TableRow]:
    """Build all eleven property rows; deterministic for a fixed seed."""
    if trials < 1:
        raise ValueError("confirmations need at least one trial")
    return [builder(seed, trials) for builder in _ROW_BUILDERS]


def table_matches_expected(rows: list[TableRow]) -> bool:
    return [(row.name, row.holds_cn, row.holds_cnp) for row in rows] == [
        (name, cn, cnp) for name, (cn, cnp) in EXPECTED_VERDICTS.items()
    ]


def render_table(rows: list[TableRow]) -> str:
    mark = {True: "✓", False: "×"}
    lines = [f"{'property':<30}{'classical':>10}{'paraclassical':>15}"]
    for row in rows:
        lines.append(
            f"{row.name:<30}{mark[row.holds_cn]:>10}{mark[row.holds_cnp]:>15}"
        )
    lines.append("")
    lines.append("evidence:")
    for row in rows:
        lines.append(f"  {row.name}: {row.evidence}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Claim batteries


def check_support_laws(
    seed: int = DEFAULT_SEED, trials: int = DEFAULT_TRIALS
) -> list[ClaimResult]:
    """Laws about |-P supports: contradictions, theorems, and singletons."""
    results = []

    # (a) no premise set para-derives a contradiction
    def trial_a(s: FormulaSampler):
        premises = s.premise_set()
        blocked = s.contradiction()
        if para_entails(premises, blocked) is None:
            return True
        return {"A": premises.render(), "b": _r(blocked)}

    n_a, v_a = _run_trials(seed, "support:contradictions", trials, trial_a)
    directed_a = para_entails([P, Not(P)], FALSUM) is None
    results.append(
        ClaimResult(
            "contradictions-never-derivable",
            "confirmed" if (v_a is None and directed_a) else "refuted",
            n_a,
            {"directed": "{p, ~p} does not para-derive p & ~p"}
            if v_a is None
            else v_a,
        )
    )

    # (b) para-consequences of a theorem are theorems, derivable from any set
    def trial_b(s: FormulaSampler):
        theorem = s.tautology()
        if not is_theorem(theorem):
            return None
        roll = s.rng.random()
        conclusion = s.tautology() if roll < 0.5 else s.formula()
        if para_entails([theorem], conclusion) is None:
            return None
        if not is_theorem(conclusion):
            return {"b": _r(theorem), "c": _r(conclusion), "broken": "not a theorem"}
        for _ in range(3):
            premises = s.premise_set()
            if para_entails(premises, conclusion) is None:
                return {"b": _r(theorem), "c": _r(conclusion), "A": premises.render()}
        return True

    n_b, v_b = _run_trials(seed, "support:theorems", trials, trial_b)
    directed_b = (
        para_entails([Implies(P, P)], Or(Q, Not(Q))) is not None
        and is_theorem(Or(Q, Not(Q)))
        and para_entails([FALSUM], Or(Q, Not(Q))) is not None
    )
    results.append(
        ClaimResult(
            "theorem-consequences-are-universal",
            "confirmed" if (v_b is None and directed_b) else "refuted",
            n_b,
            {"directed": "{p -> p} |-P q | ~q, a theorem derivable from any set"}
            if v_b is None
            else v_b,
        )
    )

    # (c) a singleton support means theoremhood or consistent classical entailment
    def trial_c(s: FormulaSampler):
        single = s.formula()
        roll = s.rng.random()
        conclusion = Or(single, s.formula(2)) if roll < 0.5 else s.formula()
        if para_entails([single], conclusion) is None:
            return None
        if is_theorem(conclusion):
            return True
        if is_satisfiable([single]) and entails([single], conclusion):
            return True
        return {"a": _r(single), "b": _r(conclusion)}

    n_c, v_c = _run_trials(seed, "support:singletons", trials, trial_c)
    directed_c = (
        para_entails([P], Or(P, Q)) is not None
        and is_satisfiable([P])
        and entails([P], Or(P, Q))
    )
    results.append(
        ClaimResult(
            "singleton-support",
            "confirmed" if (v_c is None and directed_c) else "refuted",
            n_c,
            {"directed": "{p} |-P p | q with {p} consistent and {p} |- p | q"}
            if v_c is None
            else v_c,
        )
    )
    return results


def check_deduction_and_weak_transitivity(
    seed: int = DEFAULT_SEED, trials: int = DEFAULT_TRIALS
) -> list[ClaimResult]:
    """Deduction and weak transitivity under |-P, plus their failure modes."""
    results = []

    def trial_deduction(s: FormulaSampler):
        premises = s.premise_set()
        extra = s.formula()
        extended = FormulaSet([*premises, extra])
        conclusion = s.para_consequence_of(extended)
        if para_entails(extended, conclusion) is None:
            return None
        if para_entails(premises, Implies(extra, conclusion)) is not None:
            return True
        return {"A": premises.render(), "a": _r(extra), "b": _r(conclusion)}

    n_d, v_d = _run_trials(seed, "claims:deduction", trials, trial_deduction)
    results.append(
        ClaimResult(
            "deduction",
            "confirmed" if v_d is None else "refuted",
            n_d,
            {"law": "A + {a} |-P b implies A |-P a -> b"} if v_d is None else v_d,
        )
    )

    def trial_weak(s: FormulaSampler):
        premises = s.premise_set()
        middle = s.para_consequence_of(premises)
        conclusion = s.para_consequence_of(FormulaSet([middle]))
        if para_entails(premises, middle) is None:
            return None
        if para_entails([middle], conclusion) is None:
            return None
        if para_entails(premises, conclusion) is not None:
            return True
        return {"A": premises.render(), "b": _r(middle), "c": _r(conclusion)}

    n_w, v_w = _run_trials(seed, "claims:weak-transitivity", trials, trial_weak)
    results.append(
        ClaimResult(
            "weak-transitivity",
            "confirmed" if v_w is None else "refuted",
            n_w,
            {"law": "A |-P b and {b} |-P c imply A |-P c"} if v_w is None else v_w,
        )
    )

    converse_ok = (
        para_entails([Q], Implies(FALSUM, FALSUM)) is not None
        and para_entails([Q, FALSUM], FALSUM) is None
    )
    results.append(
        ClaimResult(
            "deduction-converse-failure",
            "confirmed" if converse_ok else "refuted",
            1,
            {
                "instance": "{q} |-P (p & ~p) -> (p & ~p) "
                "but {q, p & ~p} does not para-derive p & ~p"
            },
        )
    )

    mp_pair = FormulaSet([P, Not(P)])
    mp_ok = (
        para_entails(mp_pair, P) is not None
        and para_entails(mp_pair, Implies(P, FALSUM)) is not None
        and para_entails(mp_pair, FALSUM) is None
    )
    results.append(
        ClaimResult(
            "modus-ponens-failure",
            "confirmed" if mp_ok else "refuted",
            1,
            {
                "instance": "{p, ~p} |-P p and |-P p -> (p & ~p), "
                "yet p & ~p stays underivable"
            },
        )
    )
    return results


def check_paraconsistency_transfer(
    structure: FiniteConsequenceStructure,
) -> ClaimResult:
    """Sufficient conditions for the transform to yield a paraconsistent result.

    When the structure is normal, explosive, jointly consistent and has the
    conjunctive property, the transformed structure must fail explosion; the
    verdict is established by exhaustive table checks and carries the
    witnessing premise subset.
    """
    if structure.negation is None:
        return ClaimResult(
            "paraconsistency-transfer",
            "not applicable",
            1 << structure.n_atoms,
            {
                "failing hypothesis": "explosion",
                "reason": "structure has no negation map",
            },
        )
    hypotheses = (
        ("normal", lambda s: is_normal(s)),
        ("explosion", lambda s: check_explosive(s).holds),
        ("joint consistency", lambda s: check_joint_consistency(s).holds),
        ("conjunctive property", lambda s: check_conjunctive_property(s).holds),
    )
    for name, probe in hypotheses:
        if not probe(structure):
            return ClaimResult(
                "paraconsistency-transfer",
                "not applicable",
                1 << structure.n_atoms,
                {"failing hypothesis": name},
            )
    transformed = paraconsistentize_finite(structure)
    report = check_explosive(transformed)
    if report.holds:
        return ClaimResult(
            "paraconsistency-transfer",
            "refuted",
            1 << structure.n_atoms,
            {"problem": "transformed structure is still explosive"},
        )
    subset, atom = report.counterexample
    closed = transformed.cn_mask(transformed.mask_of(subset))
    missing = next(
        a for i, a in enumerate(transformed.domain) if not closed >> i & 1
    )
    return ClaimResult(
        "paraconsistency-transfer",
        "confirmed",
        1 << structure.n_atoms,
        {
            "witness premise set": "{" + ", ".join(subset) + "}",
            "derivable pair": f"{atom} and {transformed.negation[atom]}",
            "underivable": missing,
        },
    )

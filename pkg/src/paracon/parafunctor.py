"""The paraconsistentization transform and paraclassical entailment.

The transform replaces a consequence operator Cn by

    CnP(A) = union of Cn(A') over the consistent subsets A' of A

so contradictory premise sets stop entailing everything.  On finite
structures the union is enumerated literally.  For classical logic the
derived entailment relation A |-P f ("some consistent subset of A entails
f") is decided by scanning maximal consistent subsets: classical
entailment is monotone, so every consistent subset extends to a maximal
one inside A and the scan is sound and complete.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional

from .classical import (
    SetClassification,
    entails,
    evaluate,
    is_contradiction,
    is_satisfiable,
)
from .errors import CapExceededError
from .formula import Formula, FormulaSet, FormulaUniverse, Not, variables
from .structures import FiniteConsequenceStructure

MCS_CAP = 20


@dataclass(frozen=True)
class FunctorOptions:
    """inclusive=True additionally unions A itself into CnP(A)."""

    inclusive: bool = False


@dataclass(frozen=True)
class ParaWitness:
    conclusion: Formula
    support: FormulaSet
    maximal: bool


def paraconsistentize_finite(
    structure: FiniteConsequenceStructure,
    options: FunctorOptions = FunctorOptions(),
) -> FiniteConsequenceStructure:
    """Apply the transform to a finite structure by literal enumeration."""
    full = structure.full_mask
    table = []
    for mask in range(full + 1):
        closed = mask if options.inclusive else 0
        sub = mask
        while True:
            value = structure.table[sub]
            if value != full:
                closed |= value
            if sub == 0:
                break
            sub = (sub - 1) & mask
        table.append(closed)
    return FiniteConsequenceStructure(structure.domain, table, structure.negation)


@lru_cache(maxsize=8192)
def _mcs_masks(items: tuple[Formula, ...]) -> tuple[int, ...]:
    n = len(items)
    names = sorted({v for f in items for v in variables(f)})
    if len(names) <= 12:
        # Exhaustive truth-table route: one satisfied-valuations bitmap per
        # premise; a subset is satisfiable iff its bitmaps intersect.
        valuation_rows = list(itertools.product((False, True), repeat=len(names)))
        bitmaps = []
        for f in items:
            bits = 0
            for k, values in enumerate(valuation_rows):
                if evaluate(f, dict(zip(names, values))):
                    bits |= 1 << k
            bitmaps.append(bits)
        meet = [(1 << len(valuation_rows)) - 1] * (1 << n)
        for mask in range(1, 1 << n):
            low = mask & -mask
            meet[mask] = meet[mask ^ low] & bitmaps[low.bit_length() - 1]

        def satisfiable(mask: int) -> bool:
            return meet[mask] != 0

    else:

        def satisfiable(mask: int) -> bool:
            return is_satisfiable(items[i] for i in range(n) if mask >> i & 1)

    # Masks sorted by (descending cardinality, ascending bitmask); a mask is
    # maximal iff satisfiable and not contained in an earlier maximal one.
    found: list[int] = []
    for mask in sorted(range(1 << n), key=lambda m: (-m.bit_count(), m)):
        if any(mask & big == mask for big in found):
            continue
        if satisfiable(mask):
            found.append(mask)
    return tuple(found)


def maximal_consistent_subsets(
    premises: Iterable[Formula], max_size: int = MCS_CAP
) -> list[FormulaSet]:
    """All subset-maximal satisfiable subsets, in deterministic order."""
    items = FormulaSet(premises).items
    if len(items) > max_size:
        raise CapExceededError(
            f"premise set of {len(items)} formulas exceeds the cap of {max_size}"
        )
    return [
        FormulaSet(items[i] for i in range(len(items)) if mask >> i & 1)
        for mask in _mcs_masks(items)
    ]


def para_entails(
    premises: Iterable[Formula], conclusion: Formula, max_size: int = MCS_CAP
) -> Optional[ParaWitness]:
    """A |-P f: the first maximal consistent subset entailing f, if any."""
    for support in maximal_consistent_subsets(premises, max_size=max_size):
        if entails(support, conclusion):
            return ParaWitness(conclusion, support, True)
    return None


def para_classify(
    premises: Iterable[Formula], candidates: FormulaUniverse
) -> SetClassification:
    """Classify a premise set under |-P over a finite candidate universe.

    Consistency is the finite-universe surrogate: some candidate must not be
    |-P-derivable (a stand-in for the consequence set being proper).
    """
    if len(candidates) == 0:
        raise ValueError("candidate universe must be non-empty")
    premise_set = FormulaSet(premises)
    consistent = any(para_entails(premise_set, f) is None for f in candidates)

    contradictory_witness = None
    for a in candidates:
        if para_entails(premise_set, a) and para_entails(premise_set, Not(a)):
            contradictory_witness = a
            break

    strong_witness = None
    for a in candidates:
        if is_contradiction(a) and para_entails(premise_set, a):
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

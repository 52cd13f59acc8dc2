"""
Finite consequence structures and the paraconsistentization transform
=====================================================================

Consequence structures with fully explicit tables: every axiom check is
exhaustive and every verdict replayable.  The transform rebuilds a table
from consistent subsets only, and a sufficient-condition check shows it
really de-explodes the finite restriction of classical logic.
"""

import tempfile
from pathlib import Path

from paracon import (
    FiniteConsequenceStructure,
    build_universe,
    check_axiom,
    check_explosive,
    check_paraconsistency_transfer,
    classical_restriction,
    cn,
    dumps_structure,
    load_structure,
    paraconsistentize_finite,
    parse,
    save_structure,
)

# A tiny structure by hand: domain {a, b}, Cn the identity table.
identity = FiniteConsequenceStructure(
    ("a", "b"), (0b00, 0b01, 0b10, 0b11), {"a": "b", "b": "a"}
)
for axiom in ("inclusion", "idempotency", "monotonicity", "finiteness"):
    print(f"{axiom:>13}:", check_axiom(identity, axiom).holds)

# Restrict classical logic to a finite formula universe.  Atoms are the
# rendered formulas; the falsum member keeps the negation map total.
universe = build_universe(
    [parse("p"), parse("~p")],
    ("subformulas", "negations", "conjunctions", "with_falsum"),
)
restriction = classical_restriction(universe)
print("\nrestriction atoms:", restriction.domain)
print("Cn({p}):          ", cn(restriction, ["p"]))
print("Cn({p, ~p}):      ", cn(restriction, ["p", "~p"]))
print("explosive:        ", check_explosive(restriction).holds)

# Apply the transform and watch explosion fail afterwards.
transformed = paraconsistentize_finite(restriction)
report = check_explosive(transformed)
print("\nafter the transform, explosive:", report.holds)
subset, atom = report.counterexample
print(f"witness: from {{{', '.join(subset)}}} both {atom} and its negation",
      "follow, yet not everything does")

# The packaged sufficient-condition check does all of the above in one call.
result = check_paraconsistency_transfer(restriction)
print("\ntransfer check:", result.verdict)
for key, value in result.evidence.items():
    print(f"  {key}: {value}")

# Structure files round-trip byte-exactly.
with tempfile.TemporaryDirectory() as tmp:
    path = Path(tmp) / "restriction.json"
    save_structure(restriction, path)
    reloaded = load_structure(path)
    print("\nfile round-trip exact:", reloaded == restriction)
    print("bytes stable:", dumps_structure(reloaded) == path.read_text(encoding="utf-8"))

"""
Classical consequence as a decision procedure
=============================================

Satisfiability, entailment, theoremhood, and why one contradiction makes a
classical premise set derive absolutely everything.
"""

from paracon import (
    build_universe,
    classify,
    entails,
    is_contradiction,
    is_satisfiable,
    is_theorem,
    parse,
    parse_formula_set,
    render,
)

p, not_p, q = parse("p"), parse("~p"), parse("q")

print("{p | q, ~p} satisfiable:", is_satisfiable([parse("p | q"), not_p]))
print("{p & ~p} satisfiable:   ", is_satisfiable([parse("p & ~p")]))

# Modus ponens, and the explosion that motivates everything downstream:
# from p together with ~p, any conclusion at all follows.
print("\n{p, p -> q} |- q:", entails([p, parse("p -> q")], q))
print("{p, ~p} |- q:    ", entails([p, not_p], q))
print("{p, ~p} |- r & ~r:", entails([p, not_p], parse("r & ~r")))

print("\ntheorems need no premises:")
print("  |- p -> p:", is_theorem(parse("p -> p")))
print("  |- p:     ", is_theorem(p))

print("\ncontradictions entail everything on their own:")
print("  p & ~p:    ", is_contradiction(parse("p & ~p")))
print("  ~(p -> p): ", is_contradiction(parse("~(p -> p)")))

# classify searches an explicit candidate universe for a formula derivable
# together with its negation.
premises = parse_formula_set("p\n~p\n")
candidates = build_universe(premises, ("negations", "with_falsum"))
verdict = classify(premises, candidates)
print("\nclassification of {p, ~p}:")
print("  consistent:            ", verdict.consistent)
print("  contradictory:         ", verdict.contradictory, "(witness:", render(verdict.witness) + ")")
print("  strongly contradictory:", verdict.strongly_contradictory)
print("  paraconsistent:        ", verdict.paraconsistent)

"""
Paraclassical entailment: reasoning past contradictions
=======================================================

The paraconsistentized consequence keeps whatever some consistent part of
the premises supports, and nothing more.  Contradictory premise sets stop
exploding, every witness is a concrete maximal consistent subset, and a few
classical habits (inclusion, transitivity, modus ponens) visibly break.
"""

from paracon import (
    build_universe,
    maximal_consistent_subsets,
    para_classify,
    para_entails,
    parse,
    parse_formula_set,
    render,
)

pair = parse_formula_set("p\n~p\n")

# The complete search space for |-P: every maximal consistent subset.
print("maximal consistent subsets of {p, ~p}:")
for subset in maximal_consistent_subsets(pair):
    print("  ", subset.render())

# Derivable conclusions come with the supporting subset.
for text in ("p | q", "~p", "q"):
    witness = para_entails(pair, parse(text))
    if witness is None:
        print(f"{text:>6}: not derivable (no consistent support)")
    else:
        print(f"{text:>6}: derivable, support {witness.support.render()}")

# Inclusion fails: a self-contradictory premise cannot support itself.
falsum = parse("p & ~p")
print("\n{p & ~p} |-P p & ~p:", para_entails([falsum], falsum) is not None)

# Transitivity fails: each member of B follows from A, B derives q, yet A
# does not.
b_set = parse_formula_set("p | q\n~p\n")
print("A |-P p | q:", para_entails(pair, parse("p | q")) is not None)
print("A |-P ~p:   ", para_entails(pair, parse("~p")) is not None)
print("B |-P q:    ", para_entails(b_set, parse("q")) is not None)
print("A |-P q:    ", para_entails(pair, parse("q")) is not None)

# Modus ponens fails when its conclusion is a contradiction.
print("\nA |-P p:            ", para_entails(pair, parse("p")) is not None)
print("A |-P p -> (p & ~p):", para_entails(pair, parse("p -> (p & ~p)")) is not None)
print("A |-P p & ~p:       ", para_entails(pair, falsum) is not None)

# The same premise set is now consistent AND contradictory: paraconsistent.
candidates = build_universe([parse("p"), parse("~p"), parse("q")], ("with_falsum",))
verdict = para_classify(pair, candidates)
print("\npara-classification of {p, ~p}:")
print("  consistent:    ", verdict.consistent)
print("  contradictory: ", verdict.contradictory, "(witness:", render(verdict.witness) + ")")
print("  paraconsistent:", verdict.paraconsistent)

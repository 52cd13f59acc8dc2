"""
The property table, mechanically verified
=========================================

Which laws of classical consequence survive paraconsistentization?  Each
row is settled constructively: broken laws by replaying a concrete
counterexample, surviving laws by seeded randomized trials.  A smaller
trial count keeps this demo quick; the committed golden file is produced
with the default 1000 trials per row.
"""

from paracon import (
    check_deduction_and_weak_transitivity,
    check_support_laws,
    render_table,
    table_matches_expected,
    verify_table,
)

rows = verify_table(trials=200)
print(render_table(rows))
print("verdict pattern as expected:", table_matches_expected(rows))

# The law batteries behind the table rows, with their witnesses.
print("\nsupport laws:")
for claim in check_support_laws(trials=200):
    print(f"  {claim.claim}: {claim.verdict} ({claim.trials} trials)")

print("\nderivation laws:")
for claim in check_deduction_and_weak_transitivity(trials=200):
    detail = "; ".join(f"{k}: {v}" for k, v in claim.evidence.items())
    print(f"  {claim.claim}: {claim.verdict} — {detail}")

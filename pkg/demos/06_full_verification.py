"""
Running the cross-checks in bulk
================================

verify_family drives every applicable comparison for one family up to a
degree bound: construction paths against each other, closed recurrence data
against the recursion, Hankel products against elimination, and expansion
triangles against their formulas. The CLI subcommand `qortho verify` is a
thin wrapper over the same engine.
"""

from qortho.closedforms import verify_family
from qortho.momentfamilies import registry_family_ids

# One family, symbolic q, with the per-check tallies.
report = verify_family("q-factorial:m=1", max_n=5)
print("family:", report.family)
print("ok:", report.ok)
for entry in report.entries:
    print(f"  n={entry.n:<2} {entry.check:<28} {entry.status}")

# The same engine runs with q specialized to a rational point.
report_at_2 = verify_family("q-central-binomial", max_n=4, q=2)
print("central binomial at q=2 ok:", report_at_2.ok)

# Sweep the whole registry at a small bound. Every family passes; the
# functional families simply have fewer applicable checks.
print()
print("registry sweep (max_n=3):")
for fid in registry_family_ids():
    report = verify_family(fid, max_n=3)
    counts = report.counts
    print(f"  {str(fid):<24} {counts['match']:>3} matched,"
          f" {counts['skipped']} skipped, ok: {report.ok}")

# From a shell, the equivalent commands are:
#   qortho verify --family q-factorial:m=1 --max-n 5
#   qortho verify --all --max-n 3
# and --format json carries the same entries machine-readably.

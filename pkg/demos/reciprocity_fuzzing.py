"""Hammer the reciprocity law on random manifolds.

Runs the property harness twice to show determinism, then corrupts the
pairing oracle on purpose to show that a genuine violation is caught and
shrunk to a minimal counterexample.
"""

import json

from idelink import FuzzConfig, fuzz_suite

cfg = FuzzConfig(trials=300, seed=2024)
report = fuzz_suite(cfg)

print(f"{report.trials} random surgery presentations checked")
print(f"failing trials: {report.failing_trials}")
for name, counts in report.to_json()["properties"].items():
    print(f"  {name:24s} pass={counts['pass']:4d} fail={counts['fail']:3d} skip={counts['skip']:3d}")

# same seed, same report, byte for byte
again = fuzz_suite(cfg)
assert json.dumps(report.to_json()) == json.dumps(again.to_json())
print("\nsecond run with the same seed is byte-identical")

# Now sabotage the pairing oracle. The harness must notice immediately and
# shrink the first failure; the report embeds a loadable minimal instance.
bad = fuzz_suite(FuzzConfig(trials=20, seed=2024, corrupt="pairing"))
assert bad.failing_trials > 0
failure = bad.to_json()["first_failure"]
print("\nwith a corrupted oracle the harness reports:")
print(json.dumps(failure, indent=2))

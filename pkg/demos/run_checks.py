"""
Running the verification scenarios
==================================

The same reports the ``charsimple`` command prints, from Python.
"""

import json

from charsimple import verify

for report in verify.run_all():
    print(f"{report.scenario:<20} {report.verdict:<5} {report.millis:>5} ms  {len(report.evidence)} rows")

# one report in full
print(json.dumps(verify.run("pOmega_arith", verify.VerifyConfig(q_max=100)).to_json(), indent=2))

import json

from polardet.search import (SearchTask, certificates, merge_reports, report_json,
                             run_task, scan_eq12, scan_gabriel)

# one scan, all in one go
full = scan_eq12(2, [3, 3], max_degree=6)
print(full["total_instances"], full["violations"], full["summary"])

# same scan in three shards, merged
cfg = {"n": 2, "N": [3, 3], "max_degree": 6}
parts = [run_task(SearchTask("eq-12", cfg, i, 3)) for i in range(3)]
print(report_json(merge_reports(parts)) == report_json(full))

# stop after 10 evaluations and pick up from the saved report
part = run_task(SearchTask("eq-12", cfg, budget=10))
print(part["status"], part["resume_rank"])
while part["status"] != "complete":
    part = run_task(SearchTask("eq-12", cfg, budget=50), resume=json.loads(report_json(part)))
print(report_json(part) == report_json(full))

# outside the modulus-one region the integral inequality fails, and each failure is a certificate
rep = scan_gabriel(2, 2, max_degree=2, coeff_set=["1", "2"])
for c in certificates(rep)[:3]:
    print(c.command, c.lhs, c.rhs, c.reproduce())

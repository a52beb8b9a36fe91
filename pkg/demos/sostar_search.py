"""Search for good weights of SO*(2n) with the bounded lattice test.

No certificate of failure is available here, so weights come back either
good (every group has a verified preimage) or unknown.

Run:  python3 demos/sostar_search.py [n] [bound] [radius] [jobs]
"""
import sys
import time
from collections import Counter

from branchkit import explore_sostar

n, bound, radius, jobs = (int(a) for a in (sys.argv[1:] + ["5", "1", "2", "2"][len(sys.argv) - 1:]))

start = time.perf_counter()
verdicts = Counter()
for row in explore_sostar(n, bound, radius, jobs):
    statuses = "".join("M" if g["status"] == "member" else "." for g in row["groups"])
    print(f"{str(row['lambda']['lambda']):22} {statuses:10} {row['verdict']}")
    verdicts[row["verdict"]] += 1
print(dict(verdicts), f"in {time.perf_counter() - start:.1f}s")

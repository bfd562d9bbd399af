"""What goes wrong if Step 3 may cut any C-failure, not just minimal ones."""

from chopped.algorithm import explore_all_sequences
from chopped.construction import build_chopped
from chopped.corpus import corpus
from chopped.oracle import IdealLattice

runs = split = 0
for name, P in corpus().items():
    M = build_chopped(P)
    for u, v in IdealLattice(M).comparable_pairs():
        free = explore_all_sequences(M, u, v, unrestricted_c=True)
        runs += 1
        if len(free.results) > 1:
            split += 1
            if split <= 3:
                print(f"{name}: u={u}\n  v={v}")
                for s in sorted(map(str, free.results)):
                    print(f"    -> {s}")
print(f"{split} of {runs} pairs reach more than one result")

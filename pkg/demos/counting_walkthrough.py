"""
Counting walks with and without catastrophes
============================================

A quick tour of the counting side of the package: take the four built-in
step models, tabulate how many paths of each length exist, and watch what
the catastrophe step changes.
"""

from catwalk import preset
from catwalk.dp import count_table

N = 12

# The four presets.  "dyck" is the classic up/down walk, "skew" adds the
# red south-west step, and the "-cat" variants allow a catastrophe: a jump
# straight to the x-axis from any level >= 2.
names = ["dyck", "dyck-cat", "skew", "skew-cat"]
tables = {name: count_table(preset(name), N) for name in names}

print("closed paths (end on the axis)")
print("n    " + "".join(f"{name:>10}" for name in names))
for n in range(N + 1):
    row = "".join(f"{tables[name].closed_count(n):>10}" for name in names)
    print(f"{n:<5}{row}")

# Closed Dyck paths of odd length do not exist; a catastrophe can eat an
# arbitrary height in one step, so the odd columns fill in.
print()
print("open paths (any final level)")
print("n    " + "".join(f"{name:>10}" for name in names))
for n in range(N + 1):
    row = "".join(f"{tables[name].open_count(n):>10}" for name in names)
    print(f"{n:<5}{row}")

# Where do paths of length 8 end?  final_counts gives the census by level.
print()
print("skew-cat, n=8, paths by final level:")
for level, count in sorted(tables["skew-cat"].final_counts(8).items()):
    print(f"  level {level}: {count}")

# The same numbers as generating series, straight out of the table.
print()
print("f0 for skew-cat   :", tables["skew-cat"].closed_series(N))
print("open for skew-cat :", tables["skew-cat"].open_series(N))

# %% [markdown]
# # Depth from Betti numbers, computed two ways
#
# `betti_table` reads Tor off the Koszul complex one multidegree at a time;
# `taylor_oracle` builds the mapping cone of Taylor(J) -> Taylor(I) instead.
# Depth is n minus the largest homological index that shows up.

# %%
from stanleydepth import FieldSpec, betti_table, parse_factor, taylor_oracle

F = parse_factor("x2", "x1^2*x2, x1*x2^2")
bt = betti_table(F)
for i, a, b in bt.rows():
    print(f"beta_{i},{a} = {b}")
print("pd =", bt.pd, " depth =", bt.depth)
print("Taylor cone agrees:", taylor_oracle(F).entries == bt.entries)

# %% [markdown]
# Betti numbers can depend on the field.  The Stanley-Reisner ideal of the
# six-vertex real projective plane picks up extra syzygies in
# characteristic 2, and its depth drops by one.

# %%
import itertools

from stanleydepth import make_factor, minimalize

facets = [{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 2, 6},
          {2, 3, 5}, {2, 4, 5}, {2, 4, 6}, {3, 4, 6}, {3, 5, 6}]
nonfaces = [t for t in itertools.combinations(range(1, 7), 3) if set(t) not in facets]
I = minimalize([tuple(int(i + 1 in t) for i in range(6)) for t in nonfaces], 6)
RP2 = make_factor(I, minimalize([], 6))
for p in (0, 2, 3):
    table = betti_table(RP2, FieldSpec(p))
    print(f"char {p}: depth {table.depth}, graded Betti {table.graded()}")

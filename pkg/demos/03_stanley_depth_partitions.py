# %% [markdown]
# # Stanley depth as an interval partition
#
# The finite poset holds the exponent vectors a <= g (g = lcm corner) with
# x^a in I but not in J.  The Stanley depth is the best achievable minimum,
# over interval partitions, of the number of coordinates of a top that sit
# at g.  The search returns a witness partition.

# %%
from stanleydepth import build_poset, parse_factor, sdepth, sdepth_bruteforce, validate_partition

F = parse_factor("x1, x2, x3, x4, x5, x6", "x1^2, x1*x2, x1*x3, x1*x4, x1*x5, x1*x7", 7)
res = sdepth(F)
print("points in the poset:", len(res.poset))
print("sdepth =", res.value)
print("witness is a valid partition:", validate_partition(res.poset, res.witness))
print("first intervals:", res.witness.to_text()[:4])

# %% [markdown]
# The maximal ideal in n variables has Stanley depth ceil(n/2).  For small
# posets an exhaustive enumeration of every partition confirms the search.

# %%
for n in range(1, 7):
    m = parse_factor(", ".join(f"x{i}" for i in range(1, n + 1)))
    P = build_poset(m)
    brute = sdepth_bruteforce(P) if len(P) <= 12 else "-"
    print(f"n={n}: sdepth={sdepth(m).value}  brute force={brute}")

# %% [markdown]
# # Checking the statements on a random corpus
#
# Each checker evaluates a hypothesis and, only when it holds, the
# conclusion.  Conjectural statements are reported but never fail a run.

# %%
from collections import Counter

from stanleydepth import FuzzConfig, corpus, parse_factor, run_battery

F = parse_factor("x1", "x1^2*x2")
for out in run_battery(F):
    print(f"{out.check_id:<22}{out.status:<9}{out.quantities}")

# %% [markdown]
# A seeded corpus: the same seed always gives the same instances.

# %%
config = FuzzConfig(seed=1, instance_count=60)
tally = Counter()
for G in corpus(config):
    for out in run_battery(G):
        tally[out.check_id, out.status] += 1
for (check, status), count in sorted(tally.items()):
    print(f"{check:<22}{status:<9}{count}")

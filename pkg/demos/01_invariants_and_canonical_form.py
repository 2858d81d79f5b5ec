# %% [markdown]
# # Invariants, canonical form and polarization
#
# A factor I/J is entered as two generator lists.  The invariants e_i are
# the largest exponents of each variable, e is the number of new variables
# polarization needs, and the index t is max(d' - e', 0) on the canonical
# form.

# %%
from stanleydepth import canonical_form, compute_invariants, format_ideal, parse_factor, polarize

F = parse_factor("x1^3*x2^4*x3^5, x1^10*x2^2")
inv = compute_invariants(F)
print("I      =", format_ideal(F.I))
print("e_i    =", inv.e_per_var, " e =", inv.e_total, " d =", inv.d_min)
print("d - e  =", inv.naive_bound, "(a useless bound here)")

# %% [markdown]
# Relabelling the occurring exponent levels 3 < 10, 2 < 4 and 5 to 1, 2, ...
# shrinks the degrees a lot while keeping depth and Stanley depth.

# %%
C = canonical_form(F)
print("I'     =", format_ideal(C.I))
print("d' =", inv.d_prime, " e' =", inv.e_prime, " t =", inv.index_t)

# %% [markdown]
# Generators of one degree can spread over several degrees after
# canonicalization, and the other way round.

# %%
G = parse_factor("x1^3*x2^4, x1^11*x2")
print(format_ideal(G.I), "->", format_ideal(canonical_form(G).I),
      " r =", compute_invariants(G).r_count, " r' =", compute_invariants(G).r_prime)

# %% [markdown]
# Polarization acts on I and J together.  Fresh variables are named after
# their source: y2 replaces the second power of x2.

# %%
for text_I, text_J in [("x1", "x1*x2^2"), ("x2", "x1^2*x2, x1*x2^2")]:
    F = parse_factor(text_I, text_J)
    P, pmap = polarize(F)
    print(f"({format_ideal(F.I)})/({format_ideal(F.J)})  ->  "
          f"({format_ideal(P.I, pmap.names)})/({format_ideal(P.J, pmap.names)})  map {pmap.to_json()}")

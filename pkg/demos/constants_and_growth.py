"""The explicit constants and the derivative-growth sequence A_n(p).

The boundary correction rests on a chain of explicit constants.  They are
tiny, which is why the correction is invisible at practical k.  The sequence
A_n(p) is computed with exact integers and compared against c0 2^((p+1)^2).
"""

from dirichlet_bounds.constants import a_growth_check, c3_chain_ratio, constants_table

t = constants_table()
for name, val in t.as_dict().items():
    print(f"{name:>10} = {val:.6e}")
print(f"c1 / c1_proof = {t.c1 / t.c1_proof:.15f}")

hi = constants_table(dps=40)
print(f"c3 at 40 digits: {hi.c3}")

# %%
# c3 versus the coefficient one gets by substituting lam = 2 pi k / V into
# the intermediate bound: the two differ by a k-dependent factor.
for k in (10, 1000, 10**6):
    print(f"k = {k:>7}: chain ratio {c3_chain_ratio(k):.4f}")

# %%
# The growth bound holds for every p up to 14 except p = 11, where A_11(11)
# overshoots by about 4.7 percent.
for row in a_growth_check(14):
    flag = "" if row.ok else "   <-- exceeds"
    print(f"p = {row.p:>2}: log2 A = {row.log2_a:9.4f}, log2 bound = {row.log2_bound:9.4f}{flag}")

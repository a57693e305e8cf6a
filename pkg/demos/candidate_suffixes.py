# coding: utf-8

# # Constrained suffixes
#
# Each growth round appends aug_len bases. Only suffixes that keep the last
# ctx_len + aug_len bases GC balanced and free of long homopolymers are
# offered.

# In[1]:

from itertools import product
from ecgcode.candidates import ConstraintSpec, generate_candidates, window_ok

spec = ConstraintSpec(run=3, bal=0.6, ctx_len=6, aug_len=2)
print("cap per window:", spec.cap)


# In[2]:

for ctx in ["", "ACGTAC", "GCATAC", "AATTGC"]:
    cands = generate_candidates(ctx, spec)
    print(repr(ctx), len(cands), cands[:6])


# After AATTGC the window already holds four A/T, so only G/C may follow.
# A context that breaks the rules on its own (five G/C here) gets nothing.

# In[3]:

print(generate_candidates("GGGCAC", spec))


# A brute-force filter over all 16 two-base suffixes gives the same list.

# In[4]:

ctx = "AATTGC"
brute = ["".join(s) for s in product("ACGT", repeat=2) if window_ok(ctx + "".join(s), spec)]
print(brute == generate_candidates(ctx, spec))

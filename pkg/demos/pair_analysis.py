# coding: utf-8

# # Is one word reachable from another?
#
# run_pair walks the banded edit graph for two equal-length words and reports
# which edit-count tuples turn s1 into s2. Loss is zero when no tuple fits
# inside the quota.

# In[1]:

from ecgcode import build_profile, run_pair
from ecgcode.oracle import brute_force_fecs, levenshtein

p = build_profile("sub,ins,del", "1,1,1")
state = run_pair("AGC", "AGG", p)
print(state.terminal_fecs())
print("loss", state.loss())


# One substitution works, and so does one insertion plus one deletion.
# A brute-force path enumeration agrees on short words:

# In[2]:

print(brute_force_fecs("AGC", "AGG", p))


# Words far apart in edit distance have loss 0 even with a generous quota.

# In[3]:

s1, s2 = "TCTTCTTCCG", "TCCGCAGAAT"
big = build_profile("sub,ins,del", "4,2,2")
print("levenshtein", levenshtein(s1, s2))
print("loss", run_pair(s1, s2, big).loss())


# The graph only visits a band of width 2q+1 around the diagonal.

# In[4]:

for n in (5, 10, 20):
    st = run_pair("ACGT" * (n // 4) + "A" * (n % 4), "TGCA" * (n // 4) + "C" * (n % 4), big)
    print(n, "q =", st.q, "visits =", st.visits, "formula =", n * (2 * st.q + 1) - st.q * (st.q + 1))

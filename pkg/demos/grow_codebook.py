# coding: utf-8

# # Growing a 1-substitution 1-deletion codebook
#
# Sixteen words grow together, two bases per round. Every round each word
# picks the sampled suffix with the smallest total loss against its
# neighbours. Growth stops once no word can be edited into another.

# In[1]:

import numpy as np
from ecgcode import GenerationConfig, grow_codebook
from ecgcode.candidates import ConstraintSpec
from ecgcode.codebook_io import report_row, write_report

spec = ConstraintSpec(run=3, bal=0.6, ctx_len=6, aug_len=2)
cfg = GenerationConfig(16, "sub,ins,del", (1, 0, 1), constraint=spec, candidates_per_step=8)
print("check quotas:", cfg.check_profile().eq)


# In[2]:

book = grow_codebook(cfg)
for s in book.sequences:
    print(s)
print("n =", book.n, "redundancy =", book.redundancy())


# Against the closed-form baseline for the same length:

# In[3]:

print(write_report([report_row(book)]), end="")


# Redundancy over a few seeds and sizes:

# In[4]:

for m in (2, 4, 8, 16):
    rs = []
    for seed in range(3):
        c = GenerationConfig(m, "sub,ins,del", (1, 0, 1), constraint=spec,
                             candidates_per_step=8, seed=seed)
        rs.append(grow_codebook(c).redundancy())
    print(m, np.round(rs, 2), "best", min(rs))

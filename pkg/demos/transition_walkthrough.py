# coding: utf-8

# # One node update, bit by bit
#
# A node of the edit graph holds a set of feasible edit-count tuples. Here the
# set is stored as an integer whose bit k is set when tuple k is feasible.
# Tuples are numbered in mixed radix, first coordinate least significant.

# In[1]:

from ecgcode.edit_model import Kind, build_profile, index_encode
from ecgcode.fec import from_tuples, to_tuples, transition, format_tuples

p = build_profile("sub,ins,del", "4,2,2")
print(p.describe())
print("L =", p.L, "strides =", p.sa)


# A source node with four feasible tuples:

# In[2]:

node = from_tuples({(0, 0, 0), (4, 1, 1), (1, 2, 1), (1, 1, 2)}, p)
print(node.bitstring())


# Each edge kind masks out tuples whose coordinate is already at quota, then
# shifts by that coordinate's stride. The target node is the OR of the three.

# In[3]:

after_del = transition(node, Kind.DEL, p, c_from="C")
after_ins = transition(node, Kind.INS, p, c_to="T")
after_sub = transition(node, Kind.SUB, p, c_from="C", c_to="T")
for name, fs in [("del", after_del), ("ins", after_ins), ("sub", after_sub)]:
    print(name, format_tuples(to_tuples(fs, p)))


# In[4]:

target = after_del | after_ins | after_sub
print(format_tuples(to_tuples(target, p)))
print(len(to_tuples(target, p)), "tuples")


# Decoding the set bits of the source gives back its tuples. (4,1,1) is
# already at the substitution quota, which is why the sub edge dropped it.

# In[5]:

print([index_encode(p, k) for k in range(p.L) if (node.bits >> k) & 1])

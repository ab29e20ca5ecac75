# coding: utf-8

# # Finite rings and their Jacobson radicals
#
# Rings are built from short expressions.  Every element is an integer index,
# so arithmetic runs on numpy arrays of indices.

# In[1]:

import numpy as np

from ringline import jacobson_radical, make_ring, quotient_ring, radical_signature, units


# A few small rings and their sizes.  `x` is the direct product.

# In[2]:

specs = ["Z4", "Z12", "GF(2^3)", "Trunc(GF(2),2)", "LT2(GF(2))", "M2(GF(2))", "Z4xGF(3)"]
for spec in specs:
    R = make_ring(spec)
    print(f"{R.label:16s} |R| = {R.size:3d}  units = {len(units(R)):3d}")


# Arithmetic on whole arrays at once.  Here every square of Z12:

# In[3]:

R = make_ring("Z12")
allr = R.elements()
print(np.unique(R.mul(allr, allr)))


# The radical J is the set of x with 1 - rx a unit for every r.
# Local rings have a field as R/J, matrix rings have J = 0.

# In[4]:

for spec in specs:
    R = make_ring(spec)
    J = jacobson_radical(R)
    print(f"{R.label:16s} |J| = {len(J):2d}  R/J ~ {radical_signature(R)}")


# The lower triangular 2x2 matrices over F(2) have J of size 2: the strictly
# lower part.  Its quotient is F(2) x F(2).

# In[5]:

T = make_ring("LT2(GF(2))")
J = jacobson_radical(T)
print([T.element_label(x) for x in J.sorted_members()])
Q, proj = quotient_ring(T, J)
print(Q.label, Q.size, radical_signature(T))

# coding: utf-8

# # G(2,4,2): spreads and parallelisms
#
# P(M2(F(2))) is the Grassmannian of planes in F(2)^4, with distance meaning
# complementary.  Maximum cliques are spreads, and partitions into them are
# parallelisms.

# In[1]:

from ringline import (distant_graph, enumerate_parallelisms, enumerate_spreads,
                      gaussian_binomial, grassmann_distant_graph, make_ring, point_to_subspace,
                      projective_line)
from ringline.grassmannian import enumerate_subspaces
from ringline.isomorphism import verify_isomorphism


# The point-to-subspace map is an isomorphism of distant graphs.

# In[2]:

R = make_ring("M2(GF(2))")
pts = projective_line(R)
G = grassmann_distant_graph(2, 2)
subs = enumerate_subspaces(2, 2)
perm = [subs.index(point_to_subspace(p)) for p in pts]
print(gaussian_binomial(4, 2, 2), "planes; map is an isomorphism:",
      verify_isomorphism(distant_graph(R), G, perm))


# Spreads, then parallelisms via exact cover.

# In[3]:

spreads = enumerate_spreads(2, 2)
pars = enumerate_parallelisms(2, 2)
print(len(spreads), "spreads,", len(pars), "parallelisms of", len(pars[0].spreads), "spreads")
for s in pars[0].spreads[:2]:
    print("  ", " ".join(X.label() for X in s))


# Over F(3) the same search finds the spreads of V(4,3).

# In[4]:

print(len(enumerate_spreads(2, 3)), "spreads of V(4,3)")

# coding: utf-8

# # Partitions into maximum cliques, lifted through R -> R/J
#
# Points of P(R) over the same point of P(R/J) have the same neighbours, so
# a partition of G(R/J) lifts to |J| blocks per base block.

# In[1]:

from ringline import (distant_graph, find_clique_partition, lift_partition, make_ring,
                      product_partition, radical_projection, tensor_product, verify_partition)
from ringline.isomorphism import is_isomorphic


# The ternions LT2(F(2)): R/J = F(2) x F(2), whose graph is K3 x K3.

# In[2]:

R = make_ring("LT2(GF(2))")
phi = radical_projection(R)
base = distant_graph(phi.quotient)
print("base:", base, " fibers:", [len(f) for f in phi.fibers()][:4], "...")

part = lift_partition(find_clique_partition(base), phi.fibers(), base)
g = distant_graph(R)
print(len(part), "blocks of size", part.block_sizes, "valid:", bool(verify_partition(g, part)))


# Product rings give tensor products of graphs, with partitions built
# factor by factor.

# In[3]:

g2, g3 = distant_graph(make_ring("Z2")), distant_graph(make_ring("Z3"))
prod = tensor_product([g2, g3])
print("G(Z2) x G(Z3) ~ G(Z6):", is_isomorphic(prod, distant_graph(make_ring("Z6"))) is not None)

parts = [find_clique_partition(g2), find_clique_partition(g3)]
pp = product_partition(parts, [g2.n, g3.n])
print(len(pp), "blocks of size", pp.block_sizes, "valid:", bool(verify_partition(prod, pp)))

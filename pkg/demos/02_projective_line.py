# coding: utf-8

# # The projective line and its distant graph
#
# A point of P(R) is a free cyclic submodule R(a, b) with (a, b) the first
# row of an invertible 2x2 matrix.  Two points are distant when their rows
# together make an invertible matrix.

# In[1]:

from ringline import distant_graph, is_distant, make_ring, projective_line
from ringline.cliques import clique_number


# Z4 has six points.

# In[2]:

R = make_ring("Z4")
pts = projective_line(R)
print([p.label() for p in pts])


# Distance table of P(Z4): this is the octahedron, three pairs of
# non-distant points.

# In[3]:

for p in pts:
    print(p.label().ljust(6), "".join("1" if is_distant(p, s) else "." for s in pts))


# The graph is |R|-regular of diameter at most two.  For M2(F(2)) we get the
# 35 vertex graph, which is also the distant graph of the lines of PG(3,2).

# In[4]:

for spec in ["Z4", "Z6", "GF(4)", "LT2(GF(2))", "M2(GF(2))"]:
    g = distant_graph(make_ring(spec))
    print(f"{spec:12s} n={g.n:3d} degree={g.regular_degree():3d} "
          f"diameter={g.diameter()} omega={clique_number(g)}")

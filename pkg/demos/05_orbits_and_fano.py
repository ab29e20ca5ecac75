# coding: utf-8

# # GL(4,2) orbits and the bundled tables
#
# The 240 parallelisms of V(4,2) fall into two orbits of 120 under GL(4,2).
# The bundled tables are one parallelism from each orbit.

# In[1]:

from ringline import classify_orbits, enumerate_parallelisms, load_fixture, verify_fixture
from ringline.grassmannian import Parallelism, analyze_partition_pairs


# In[2]:

pars = enumerate_parallelisms(2, 2)
orbits = classify_orbits(pars, 2, 2)
print("|GL(4,2)| =", orbits.group_order)
print({lab: len(o) for lab, o in zip(orbits.labels, orbits.orbits)})


# Each pair of spreads in a parallelism meets one largest mixed clique of
# four subspaces; the seven disjoint triples form a Fano plane.

# In[3]:

fx = load_fixture("table1", 2, 2)
pa = analyze_partition_pairs(Parallelism(tuple(tuple(s) for s in fx.spreads)), 2, 2)
print(set(pa.pair_clique_size.values()), "sized cross cliques")
print("lines:", [tuple(fx.names[i] for i in t) for t in pa.lines])
print("projective plane:", pa.is_fano)


# In[4]:

for name in ("table1", "table2"):
    v = verify_fixture(name, 2, 2)
    print(name, "valid" if v.valid else "invalid", "orbit", v.orbit)

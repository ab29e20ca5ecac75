# coding: utf-8

# # Distant graphs of rings of order p^k
#
# The graph only depends on |R| and on the factors of R/J, so one ring per
# shape is enough.  The report compares computed invariants with the
# expected block formula.

# In[1]:

from ringline import (distant_graph, invariant_report, local_model_graph, make_ring,
                      verify_classification)
from ringline.isomorphism import is_isomorphic


# A local ring with residue field F(q) and |J| = m gives the complete
# (q+1)-partite graph with parts of size m.

# In[2]:

print(is_isomorphic(distant_graph(make_ring("Z9")), local_model_graph(3, 3)) is not None)
print(invariant_report("Z4xZ4"))


# Order 32.

# In[3]:

report = verify_classification(2, 5)
print(report.to_text())

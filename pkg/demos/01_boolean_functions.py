"""Boolean functions over Z_q and the sequences they generate.

Walks through parsing a function, reading off its graph, checking the
deleted-vertex path condition, and mapping functions to root-of-unity
sequences.
"""
from zccs import (
    check_path_after_deletion,
    graph_of,
    parse_gbf,
    sequence_of,
)

# A function of three binary variables with values in Z_2.
f = parse_gbf("x1*x2", m=3, q=2)
print("f        =", f.to_text())
print("f(0,1,1) =", f.evaluate((0, 1, 1)))
print("f~       =", f.complement_inputs().to_text())

# The quadratic terms form a graph on the variables.
g = graph_of(f)
print("\ngraph edges:", g.edges)

# Deleting x0 leaves the path x1 - x2 whose single edge weighs q/2 = 1.
cert = check_path_after_deletion(g, deleted=[0], q=2)
print("path after deleting x0:", cert.path_order, "ends:", cert.end_vertices)

# The sequence of f: entry r is w_q^f(r0,r1,r2) with r = r0 + 2 r1 + 4 r2.
seq = sequence_of(f)
print("\nsequence exponents:", seq.exponents.tolist())
print("sequence values:   ", [int(v.real) for v in seq.to_complex()])

# Restricting a variable keeps the index space but fixes a bit.
print("\nf|x1=1 =", f.restrict({1: 1}).to_text())
print("f|x1=0 =", f.restrict({1: 0}).to_text())

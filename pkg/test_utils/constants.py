# -*- coding: utf-8 -*-

"""
Constants for use in pmcuts tests.
"""

# graph6 of K4.
K4_GRAPH6 = 'C~'
# graph6 of a single edge.
EDGE_GRAPH6 = 'A_'
# graph6 of the triangle.
TRIANGLE_GRAPH6 = 'Bw'
# Same triangle with a nonzero padding bit.
TRIANGLE_BAD_PADDING = 'Bx'

# sparse6 of the graph on 7 vertices with edges 0-1, 0-2, 1-2 and 5-6.
SPARSE6_SAMPLE = ':Fa@x^'
SPARSE6_SAMPLE_EDGES = ((0, 1), (0, 2), (1, 2), (5, 6))

# digraph6 of the directed triangle 0 -> 1 -> 2 -> 0.
DIRECTED_TRIANGLE_DIGRAPH6 = '&BP_'

# K4 with edge (0, 1) directed 0 -> 1 and edge (2, 3) directed 3 -> 2.
K4_SIDECAR = 'C~\nO:100002'

# planar_code of K4, neighbours 1-based and in rotation order.
K4_PLANAR_CODE = bytes([4, 2, 4, 3, 0, 3, 4, 1, 0, 1, 4, 2, 0, 3, 1, 2, 0])
PLANAR_CODE_HEADER = b'>>planar_code<<'

# Numbers of connected cubic graphs, 3-connected cubic graphs and connected cubic bipartite graphs.
CONNECTED_CUBIC_COUNTS = {4: 1, 6: 2, 8: 5, 10: 19, 12: 85}
THREE_CONNECTED_CUBIC_COUNTS = {4: 1, 6: 2, 8: 4, 10: 14, 12: 57, 14: 341}
BIPARTITE_CUBIC_COUNTS = {4: 0, 6: 1, 8: 1, 10: 2, 12: 5, 14: 13, 16: 38}

# Labelled connected cubic graphs on 4, 6 and 8 vertices.
LABELLED_CONNECTED_CUBIC_COUNTS = {4: 1, 6: 70, 8: 19320}

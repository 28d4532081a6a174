"""Enhanced power graphs of finite groups.

Construction of power and enhanced power graphs, maximal-cyclic-subgroup
catalogs, and forbidden-subgraph classification (cograph, chordal, C4-free,
diamond-free, block, quasi-threshold, threshold, EPPO) by two independent
routes: generic certified graph algorithms and group-theoretic criteria.
"""

__version__ = "0.1.0"

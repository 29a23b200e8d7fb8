"""metriclab: exact solvers and verification harness for metric dimension,
distance hypergraphs, and tree decompositions."""

__version__ = "0.1.0"

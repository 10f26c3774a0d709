"""Fractional hypergraph covers, support reduction, and fhw checking.

Thin re-export of the compiled module. All rationals are exact "p/q"
strings; parse them with fractions.Fraction when numeric values are needed.
"""

from ._fraccover import (
    DualMapping,
    Hypergraph,
    compress_to_target,
    covered_edges,
    covered_vertices,
    dualize,
    edge_cover_number,
    enumerate_candidate_bags,
    fhw_bruteforce,
    fhw_leq_k,
    heavy_vertex_bound,
    heavy_vertices,
    is_cd,
    multi_intersection,
    parse,
    reduce,
    reduce_support,
    vertex_cover_number,
)

__all__ = [
    "DualMapping",
    "Hypergraph",
    "compress_to_target",
    "covered_edges",
    "covered_vertices",
    "dualize",
    "edge_cover_number",
    "enumerate_candidate_bags",
    "fhw_bruteforce",
    "fhw_leq_k",
    "heavy_vertex_bound",
    "heavy_vertices",
    "is_cd",
    "multi_intersection",
    "parse",
    "reduce",
    "reduce_support",
    "vertex_cover_number",
]

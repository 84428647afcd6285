"""Irredundance and domination on small graphs: solvers, pattern search,
exhaustive enumeration and a verifier for forbidden-subgraph characterizations."""
from irlab.kernels import BACKEND
from irlab.graph import Graph, from_graph6, to_graph6, canonical_form, are_isomorphic
from irlab.solvers import domination_number, irredundance_number, SolveResult
from irlab.catalog import catalog as catalog_entries, get as catalog_entry
from irlab.patterns import find_induced, find_forbidden_witness, bollobas_cockayne_condition
from irlab.enumerator import EnumerationConfig, enumerate_graphs
from irlab.verifier import (
    PerfectionCache, classify, is_irredundance_perfect,
    verify_main_theorem, verify_sufficient_condition,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "Graph", "from_graph6", "to_graph6", "canonical_form", "are_isomorphic",
    "domination_number", "irredundance_number", "SolveResult", "catalog_entries", "catalog_entry",
    "find_induced", "find_forbidden_witness", "bollobas_cockayne_condition",
    "EnumerationConfig", "enumerate_graphs", "PerfectionCache", "classify",
    "is_irredundance_perfect", "verify_main_theorem", "verify_sufficient_condition",
]

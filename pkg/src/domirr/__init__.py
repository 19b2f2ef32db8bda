"""domirr: exact and approximate solvers for capacitated domination and
irredundance problems, with brute-force reference oracles and a
branching-inequality verifier."""

__version__ = "0.1.0"

from .cds import (ApproxBound, CdsResult, approx_ratio_bound, solve_approx,
                  solve_exact)
from .graph import (CapacitatedInstance, DominationWitness, Graph, ParseError,
                    closed_neighborhood, is_dominating, load_instance,
                    parse_instance, serialize_instance)
from .ir_max import (IrMaxResult, RecurrenceCase, RecurrenceReport,
                     max_independent_edge_set, solve_ir_max,
                     verify_recurrences)
from .ir_min import IrMinResult, enumerate_irredundant, solve_ir_min
from .irredundance import (DoubledGraph, IndependentEdgeSet,
                           IrredundantWitness, build_doubled_graph,
                           edge_set_to_irset, irset_to_edge_set,
                           is_independent_edge_set, is_irredundant,
                           is_maximal_irredundant)
from .matching import Matching, max_matching, verify_capacitated
from .oracles import (OracleResult, SizeLimitError, brute_cds, brute_ir_max,
                      brute_ir_min)
from .restricted import (CopyGraph, RestrictedInstance, RestrictedSolution,
                         build_copy_graph, matching_to_solution,
                         solution_to_matching, solve_restricted)

__all__ = [
    "ApproxBound", "CapacitatedInstance", "CdsResult", "CopyGraph",
    "DominationWitness", "DoubledGraph", "Graph", "IndependentEdgeSet",
    "IrMaxResult", "IrMinResult", "IrredundantWitness", "Matching",
    "OracleResult", "ParseError", "RecurrenceCase", "RecurrenceReport",
    "RestrictedInstance", "RestrictedSolution", "SizeLimitError",
    "approx_ratio_bound", "brute_cds", "brute_ir_max", "brute_ir_min",
    "build_copy_graph", "build_doubled_graph", "closed_neighborhood",
    "edge_set_to_irset", "enumerate_irredundant", "irset_to_edge_set",
    "is_dominating", "is_independent_edge_set", "is_irredundant",
    "is_maximal_irredundant", "load_instance", "matching_to_solution",
    "max_independent_edge_set", "max_matching", "parse_instance",
    "serialize_instance", "solution_to_matching", "solve_approx",
    "solve_exact", "solve_ir_max", "solve_ir_min", "solve_restricted",
    "verify_capacitated", "verify_recurrences",
]

from .Errors import (GraphValidationError, GraphFormatError, EmptyPatternError, ResourceGuardError,
                     CertificateError, ContractViolationError)
from .Digraph import Digraph, OrientedGraph, UndirectedGraph
from .SemiWalk import (Direction, Pattern, SemiWalk, pattern_of, path_traversal, cycle_traversal, net_length,
                       level_spread, find_pattern_walk)
from .LevelAssignment import LevelAssignment, connected_components, is_balanced, levels
from .Isomorphism import (canonical_form, isomorphic, enumerate_oriented_graphs, enumerate_undirected_graphs,
                          count_oriented_graphs_burnside)
from .Families import (FamilyTag, FamilyId, make_oriented_path, make_directed_path, make_directed_cycle,
                       make_alternating_path, q_pattern, make_q_path, make_ac_cycle, make_transitive_tournament,
                       make_undirected_cycle, make_c4_prime, make_d5, make_b_cycle, five_cycle_obstructions,
                       is_minimal_path, is_b_cycle, recognize_family)
from .Homomorphism import Homomorphism, iterate_homomorphisms, exists_hom, hom_equivalent, core_of
from .ImageSet import ImageSet, surjective_images
from .DirectedPaths import maps_to_directed_path, decide_tt
from .CyclicCover import (CyclicCover, SelectorFunctions, build_cyclic_cover, cover_induced_hom,
                          extract_no_certificate, cover_violations)
from .Certificate import Verdict, Certificate, certificate_violations, verify_certificate
from .ACDecider import decide_ac
from .DualityVerification import (SampleSpec, DualityReport, PathDualityReport, check_duality_pair,
                                  check_path_duality, verify_dual_uniqueness, random_connected_oriented_graph)
from .TreeDuals import tree_height, tree_dual, random_oriented_tree
from .UnorientedBridge import (ContainmentMode, ColouringMethod, Orientation, ForbiddenSet, ForbiddenWitness,
                               contains_forbidden, find_f_free_orientation, undirected_hom, cycle_colourable,
                               five_cycle_statements, rghv_colourability)
from .GraphFormat import parse_graph, load_graph, format_graph, dump_graph

__version__ = "0.1.0"

__all__ = [
    "GraphValidationError",
    "GraphFormatError",
    "EmptyPatternError",
    "ResourceGuardError",
    "CertificateError",
    "ContractViolationError",
    "Digraph",
    "OrientedGraph",
    "UndirectedGraph",
    "Direction",
    "Pattern",
    "SemiWalk",
    "pattern_of",
    "path_traversal",
    "cycle_traversal",
    "net_length",
    "level_spread",
    "find_pattern_walk",
    "LevelAssignment",
    "connected_components",
    "is_balanced",
    "levels",
    "canonical_form",
    "isomorphic",
    "enumerate_oriented_graphs",
    "enumerate_undirected_graphs",
    "count_oriented_graphs_burnside",
    "FamilyTag",
    "FamilyId",
    "make_oriented_path",
    "make_directed_path",
    "make_directed_cycle",
    "make_alternating_path",
    "q_pattern",
    "make_q_path",
    "make_ac_cycle",
    "make_transitive_tournament",
    "make_undirected_cycle",
    "make_c4_prime",
    "make_d5",
    "make_b_cycle",
    "five_cycle_obstructions",
    "is_minimal_path",
    "is_b_cycle",
    "recognize_family",
    "Homomorphism",
    "iterate_homomorphisms",
    "exists_hom",
    "hom_equivalent",
    "core_of",
    "ImageSet",
    "surjective_images",
    "maps_to_directed_path",
    "decide_tt",
    "CyclicCover",
    "SelectorFunctions",
    "build_cyclic_cover",
    "cover_induced_hom",
    "extract_no_certificate",
    "cover_violations",
    "Verdict",
    "Certificate",
    "certificate_violations",
    "verify_certificate",
    "decide_ac",
    "SampleSpec",
    "DualityReport",
    "PathDualityReport",
    "check_duality_pair",
    "check_path_duality",
    "verify_dual_uniqueness",
    "random_connected_oriented_graph",
    "tree_height",
    "tree_dual",
    "random_oriented_tree",
    "ContainmentMode",
    "ColouringMethod",
    "Orientation",
    "ForbiddenSet",
    "ForbiddenWitness",
    "contains_forbidden",
    "find_f_free_orientation",
    "undirected_hom",
    "cycle_colourable",
    "five_cycle_statements",
    "rghv_colourability",
    "parse_graph",
    "load_graph",
    "format_graph",
    "dump_graph"
]

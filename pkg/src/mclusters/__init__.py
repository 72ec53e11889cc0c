"""m-cluster combinatorics and the orbit-category model for simply-laced
root systems, with two independent compatibility oracles."""

from .root_system import (DynkinType, Root, RootSystem, build_root_system,
                          parabolic, parse_type, reflect)
from .coloured_roots import (ColouredRoot, compatibility_degree,
                             compatible_combinatorial, coloured_ground_set,
                             rotation_R, rotation_Rm, tau_eps)
from .quiver_rep import (BipartiteQuiver, Representation, ext1_dim, euler_form,
                         hom_dim, indecomposable_for_root, injective, projective)
from .derived import DerivedCategory, DerivedObject, derived_category, shift
from .orbit_category import (MClusterCategory, compatible_categorical,
                             ext_orbit, mcluster_category)
from .cluster_complex import (CompatibilityGraph, Report, TiltingSet,
                              build_graph, complements, complex_to_json,
                              enumerate_facets, f_vector,
                              verify_complement_counts, verify_facet_sizes,
                              verify_parabolic_restriction)

__all__ = [
    "DynkinType", "Root", "RootSystem", "build_root_system", "parabolic",
    "parse_type", "reflect",
    "ColouredRoot", "compatibility_degree", "compatible_combinatorial",
    "coloured_ground_set", "rotation_R", "rotation_Rm", "tau_eps",
    "BipartiteQuiver", "Representation", "ext1_dim", "euler_form", "hom_dim",
    "indecomposable_for_root", "injective", "projective",
    "DerivedCategory", "DerivedObject", "derived_category", "shift",
    "MClusterCategory", "compatible_categorical", "ext_orbit",
    "mcluster_category",
    "CompatibilityGraph", "Report", "TiltingSet", "build_graph", "complements",
    "complex_to_json", "enumerate_facets", "f_vector",
    "verify_complement_counts", "verify_facet_sizes",
    "verify_parabolic_restriction",
]

__version__ = "0.1.0"

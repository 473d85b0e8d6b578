"""Burnside categories, Mackey functors and permutative categories over finite groups."""

from .abgroups import AbGroup, AbHom
from .burnside import (BurnsideElement, burnside_ring, compose_elements, mark_hom, pi0_enrichment,
                       span_to_element, table_of_marks)
from .closed import (check_curry, check_trilinear_eval, composition_bilinear, curry, eval_bilinear,
                     hom_permcat)
from .errors import AxiomError, InvalidInputError, MackeyPCError, ResourceCapError
from .groups import Group, Permutation, Subgroup, conjugacy_classes_of_subgroups, double_cosets, make_group, subgroups
from .gsets import GMap, GSet, canonical_form, disjoint_union, fixed_points, iso_gsets, orbit_gset, orbits, product
from .machine import PCFunctorData, kg_pi0, mackey_to_pcfunctor, suspension_pcfunctor
from .mackey import (MackeyFunctor, burnside_mackey, constant_mackey, make_mackey, mackey_iso, span_action,
                     validate_mackey)
from .permcat import (CommMonoid, FinPermCat, LaxFunctor, MultilinearFunctor, compose_lax, compose_multilinear,
                      discrete_permcat, group_morphism_permcat, validate_lax, validate_multilinear,
                      validate_permcat)
from .pi0 import group_completion, induced_map_on_completions, pi0_objects
from .spans import Span, canonicalize_span, compose_spans, make_span, span_iso, transitive_span_basis

__version__ = "0.1.0"

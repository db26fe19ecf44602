"""toybit: an exact-arithmetic engine for the toy-bit model, its
relaxed operation groups, and their correspondence with the projective
(extended) Clifford groups."""

from .states import (EpistemicState, MeasurementPartition, OnticSample,
                     ToyError, InvalidSupport, KnowledgeBalanceViolation,
                     NotInCatalog, DimensionMismatch, InvalidPartition,
                     make_epistemic, tensor, pure_states, correlated_states,
                     mixed_catalog, is_perfectly_correlated,
                     enumerate_partitions, sample_state, measure,
                     outcome_probability)
from .groups import (FiniteGroup, Perm, ScaledMat, closure, from_elements,
                     find_generators, element_order, element_order_histogram,
                     conjugacy_classes, conjugacy_class_profile,
                     center_order, derived_subgroup, abelianization_orders,
                     coset_action, orbit, is_primitive, set_stabilizer,
                     map_by_generators, invariant_battery,
                     GroupError, CapExceeded, NotASubgroup, NotTransitive)
from .cyclotomic import CliffordOp, CycScalar, CycVector, apply_op, kron
from .clifford import (SignedPermMatrix3, bloch_action, build_group,
                       compose_euler, euler_decompose,
                       projective_action_on_states, toy_action_on_states,
                       NotAxisPreserving, NotARotation, SetNotInvariant)
from .search import linear_validity_group
from .analysis import (ClaimReport, UnknownClaim, run_all,
                       detect_perfect_correlation, sigma0)

__version__ = "1.0.0"

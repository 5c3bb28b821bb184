"""Exact-arithmetic construction, verification and classification of
bicrossed products of finite-dimensional Hopf algebras."""

from .fields import (CyclotomicField, Field, FieldScalar, PrimeField,
                     RationalField, field_from_json, nu_order,
                     roots_of_unity, scalar_arith)
from .hopf import (FiniteGroupTable, HopfAlgebra, dual_group_algebra,
                   dual_hopf, group_algebra, op_cop, sweedler_h4,
                   tensor_hopf, verify_hopf_axioms)
from .linmap import (LinMap, convolve, coz1_group, grouplikes, is_cocentral,
                     map_predicates, skew_primitives)
from .products import (MatchedPair, SkewPairing, bicrossed_product,
                       double_from_skew_pairing, drinfeld_double, factorize,
                       mirror_pair, smash_product, verify_matched_pair)
from .morphisms import (DoubleMorphismData, Quadruple, StabilizingPair,
                        assemble_psi, check_cohomologous,
                        check_double_morphism_data, check_schur_zassenhaus,
                        check_tensor_decomposition, decompose_psi,
                        enumerate_morphisms, verify_quadruple,
                        verify_stabilizing_pair)
from .classify import (H4nSpec, aut_group_profile, build_h4n,
                       enumerate_matched_pairs_h4_cn, iso_classes,
                       iso_criterion, klein_survey, unit_lift)

__version__ = "0.1.0"

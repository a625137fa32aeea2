"""Weighted generalized inverses with exact-rational and float backends.

The package computes and verifies the classical generalized inverses
(Moore-Penrose, group, Drazin, core, core-EP), their metric-weighted
core variants, the W-weighted Drazin/core-EP inverses and inverse
families of rectangular matrices, index-MP style composites, and
weighted bilateral inverses.  Every computed inverse is checkable
against its defining equations through :mod:`wginv.axioms`.
"""

from .matrix import (EXACT, FLOAT, BackendError, ExistenceError, Matrix,
                     MetricMatrix, ShapeError, SingularMatrixError,
                     SubspaceRelation, VerificationError, WeightedContext,
                     equal, hcat, index, inverse, make_context, mat_pow,
                     null_basis, null_equal, null_subset, one_inverse,
                     outer_from_full_rank, range_basis, range_equal,
                     range_subset, rank, rref, rref_augmented, vcat)
from .scalars import GaussianRational, parse_gaussian
from .axioms import EquationLabel, LabelCheck, VerificationReport, check, classify
from .classical import (core, core_ep, drazin, dual_core, group_from_factors,
                        group_inverse, moore_penrose, weighted_mp)
from .wcore import (RolReport, check_rol_m_core, check_rol_n_dual,
                    m_core_from_13M, m_weighted_core, n_weighted_dual_core)
from .wfamily import (EpReport, WCepDecomposition, block_form_w1231k,
                      canonical_w1231k, canonical_w124k1, ep_checks,
                      family_member_w1231k, family_member_w124k1, is_w1231k,
                      is_w124k1, recover_from_member, w_core_condition_sets,
                      w_core_ep, w_drazin, wcep_decompose)
from .indexmp import (check_characterizations, projector_checks,
                      solve_projector_system, via_decomposition, w_cmp,
                      w_dmp, w_k_mp, w_mp_k, w_mp_k_mp, w_mpd)
# the bilateral product itself stays namespaced (wginv.bilateral.bilateral)
# so the submodule name is not shadowed
from .bilateral import (BilateralSpec, SelfDualityReport, bilateral_spec,
                        dual_bilateral, self_duality, solve_bilateral_system,
                        solve_dual_bilateral_system)

__version__ = "0.1.0"

"""orbicat: finite groupoid invariants and certified LS-category bounds for
combinatorial orbifold models."""

from .groups import (AbstractGroup, GroupError, conjugacy_classes,
                     cyclic_group, dihedral_group, group_embeds,
                     group_isomorphic, product_group, quaternion_group,
                     symmetric_group, trivial_group)
from .groupoid import (FiniteGroupoid, Functor, GroupoidError,
                       NaturalTransformation, Skeleton, check_functor,
                       check_natural, isotropy, orbits, skeleton,
                       validate_groupoid)
from .constructions import (FiberedProduct, GroupAction, disjoint_union,
                            fibered_product, full_subgroupoid,
                            inclusion_functor, orbit_groupoid, pair_groupoid,
                            point_groupoid, product_groupoid,
                            skeleton_groupoid, translation_groupoid,
                            unit_groupoid)
from .equivalence import (GeneralizedMap, MoritaWitness, compose_generalized,
                          generalized_maps_equivalent, identity_generalized,
                          is_essential_equivalence, is_generalized_constant,
                          is_strong_equivalence, morita_equivalent,
                          restrict_generalized)
from .inertia import (SectorDecomposition, baez_dolan_cardinality,
                      inertia_groupoid, model_cardinalities, model_skeleton,
                      model_skeleton_groupoid, sectors_discrete,
                      sectors_simplicial, string_euler_cardinality)
from .complexes import (ComplexError, MultipleGPath, GPathSegment,
                        OrbifoldComplex, SimplicialComplex,
                        SimplicialGComplex, barycentric_subdivision,
                        barycentric_subdivision_g,
                        barycentric_subdivision_model, cup_length_z2,
                        fixed_subcomplex, homology_z2, is_collapsible,
                        is_z2_acyclic, path_injections_hold,
                        quotient_orbifold_complex, replay_collapse,
                        validate_gpath)
from .lscat import (CatReport, DeformationCertificate, ToolConfig, cat_bounds,
                    deformable_into, inertia_cat_report, is_categorical,
                    relative_cat, wcat, weight)
from .morse import (CriticalReport, InvariantFunction, critical_orbits,
                    m_function, sublevel, verify_deformation_conditions,
                    verify_ls_inequality)

__version__ = "0.1.0"

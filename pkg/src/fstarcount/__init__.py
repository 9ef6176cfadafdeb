"""Exact lattice-point counting for simplices and partial simplicial
complexes, through atomic-point enumeration in simplicial cones."""

from .bases import (FStarVector, HStarVector, eval_fstar, fstar_from_poly,
                    fstar_pad, hstar_from_poly, hstar_fstar_identity_check,
                    poly_from_fstar, poly_from_hstar)
from .coloring import (ColoringComplexFaces, Hypergraph,
                       coloring_complex_faces, coloring_complex_fvector,
                       coloring_complex_hstar, edge_chain_faces,
                       improper_vertex_set, realize_coloring_complex)
from .cones import (AtomicPoint, CoefficientVector, ConeBasis,
                    PartitionReport, atomic_inductive_oracle, coefficients_of,
                    enumerate_atomic, is_atomic, parallelepiped_points,
                    skew_parts, skew_parts_vector, verify_partition)
from .exact import (IntVector, Polynomial, RatMatrix, Rational, RatVector,
                    binomial_poly, gen_binomial, solve_exact)
from .rational import (AtomicHeightProfile, EhrhartQuasiPolynomial,
                       count_via_profile, mixed_profile, quasi_eval,
                       residue_fstar, restricted_partition)
from .simplices import (OpenComplex, Simplex, count_points,
                        count_points_complex, f_vector, fstar_complex,
                        fstar_interpolate, fstar_simplex, h_vector,
                        homogenize, hstar_simplex, is_unimodular,
                        lattice_points, open_faces, realize_fstar_complex,
                        verify_disjoint)

__all__ = [name for name in dir() if not name.startswith("_")]

"""Exact computer algebra for nonsymmetric operads with multiplication.

Elements of an operad are dense tensors of Python integers and Fractions.
On top of the partial compositions the package builds the cup,
Gerstenhaber, Froelicher-Nijenhuis and derived brackets, classifies
Nijenhuis, Rota-Baxter, averaging and multiplication-preserving elements,
and computes cohomology dimensions of the associated cochain complexes.
"""

from __future__ import annotations

from .brackets import (
    SemidirectPair,
    derived_bracket,
    fn_bracket,
    phi_embedding,
    psi_map,
    rho_action,
    semidirect_bracket,
    theta_embedding,
    upsilon_map,
)
from .cohomology import ComplexHandle, ComplexKind, coboundary_matrix, cohomology_dims, differential_matrix, report
from .endomorphism import AlgebraSpec, EndomorphismOperad, build_endomorphism_operad, end_operad, evaluate
from .errors import (
    AlphaNotCompatible,
    ComplexBroken,
    DegreeOutOfRange,
    IndexOutOfRange,
    InstanceMismatch,
    InvalidRepresentation,
    MalformedSpec,
    MissingWeight,
    NotAMultiplication,
    NotOperatorOfKind,
    OperadError,
    ParseError,
    WrongArity,
)
from .exact import Rational, RatMatrix, format_rational, matrix_rank, nullspace, parse_rational
from .kernel import (
    D,
    Multiplication,
    Representation,
    cup_bracket,
    cup_product,
    d_phi,
    d_weighted,
    delta_pi,
    delta_rep,
    preserves_multiplication,
    theta,
)
from .operad import (
    Element,
    OperadInstance,
    contraction,
    gv_bracket,
    iota,
    is_multiplication,
    partial_compose,
    seeded_rng,
)
from .operators import (
    Kind,
    OperatorVerdict,
    averaging_products,
    classify,
    nijenhuis_deformation,
    nijenhuis_tower,
    operator_coboundary,
    power,
    rb_complement,
    rb_deformations,
)
from .tree_operad import TreeOperad, avg_derived_bracket, d_r_avg, lift, theta_q, tree_operad
from .trees import LEAF, Node, catalan, delete_leaf, enumerate_trees, parse_tree, restriction
from .variants import (
    DendriformOperad,
    HomOperad,
    build_dendriform_operad,
    build_hom_operad,
    dendriform_product,
    hom_multiplication,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_") and name != "annotations"]

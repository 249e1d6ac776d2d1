"""Horizontal rotations of permutation sets, Schur positivity, and a cyclic
action on standard Young tableaux of shape ``lam`` plus a disconnected box."""

from .permcore import (
    Permutation,
    PermMultiset,
    cyclic_descent_set,
    descent_class,
    descent_set,
    horizontal_closure,
    inverse,
    rotate,
    rsk,
)
from .qsym import QSymF, SchurExpansion, is_schur_positive, is_symmetric, q_of, schur_expand
from .tableaux import Shape, Tableau, boxed_shape, boxed_tableau, enumerate_syt
from .cyclic import cdes_boxed, ijdt, jdt, jdt_inverse, psi

__version__ = "0.1.0"

"""Braid group representations and invariants.

Three constructions of braid representations live here, together with the
knot invariant the first one produces:

* exact Burau and reduced Burau matrices over Z[t, t^-1], with the
  Alexander-Conway polynomial of braid closures (``burau``, ``alexander``);
* Yang-Baxter solutions and the induced actions on tensor powers
  (``yang_baxter``);
* numerical monodromy of the KZ connection on weight spaces of sl2 Verma
  tensor products, including the nullspace representations (``verma``,
  ``kz``).
"""

from .alexander import ConwayResult, alexander_conway, markov_f, markov_invariance_check, skein_check
from .burau import BurauImage, burau, conjugation_check, reduced_burau, reduced_generator, unreduced_generator
from .kz import ConfigPath, KzSpec, MonodromyResult, generator_path, monodromy, nullspace_rep, parallel_transport
from .laurent import ExactDivisionError, LaurentPoly, RingMatrix, exact_div, substitute_hom
from .verma import WeightBasis, casimir_eigenvalue, nullspace_basis, omega_matrix, tensor_act, verma_act, weight_space_basis
from .words import (
    BraidWord,
    Permutation,
    closure_component_count,
    compose,
    exponent_sum,
    free_reduce,
    inverse,
    is_pure,
    markov_conjugate,
    markov_stabilize,
    underlying_permutation,
)

__version__ = "0.1.0"

__all__ = [
    "BraidWord",
    "BurauImage",
    "ConfigPath",
    "ConwayResult",
    "ExactDivisionError",
    "KzSpec",
    "LaurentPoly",
    "MonodromyResult",
    "Permutation",
    "RingMatrix",
    "WeightBasis",
    "alexander_conway",
    "burau",
    "casimir_eigenvalue",
    "closure_component_count",
    "compose",
    "conjugation_check",
    "exact_div",
    "exponent_sum",
    "free_reduce",
    "generator_path",
    "inverse",
    "is_pure",
    "markov_conjugate",
    "markov_f",
    "markov_invariance_check",
    "markov_stabilize",
    "monodromy",
    "nullspace_basis",
    "nullspace_rep",
    "omega_matrix",
    "parallel_transport",
    "reduced_burau",
    "reduced_generator",
    "skein_check",
    "substitute_hom",
    "tensor_act",
    "underlying_permutation",
    "unreduced_generator",
    "verma_act",
    "weight_space_basis",
]

"""Exact computations with abelian complex structures on real Lie algebras."""

from .affine import AssociativeAlgebra, aff, small_algebra, standard_J, standard_K, toeplitz_algebra
from .decomposition import affine_quotient, flag_decomposition
from .lie import LieAlgebra, bracket, center, commutator_subalgebra, validate
from .linalg import GaussianRational, Matrix, Subspace
from .structures import is_abelian, is_integrable, key_characterizations

__version__ = "0.1.0"

"""Exact left-invariant contact and exact-symplectic structures on Lie algebras."""

from .scalar import Scalar, parse_scalar
from .linalg import RankInstability
from .liealg import (LieAlgebra, Subspace, algebra, change_basis, direct_sum,
                     opposite, permute_basis)
from .forms import KForm, ce_d, parse_one_form, two_form_radical, two_form_rank
from .contact import (ContactVerdict, ExistenceVerdict, contact_exists,
                      contact_polynomial, frobenius_exists, frobenius_polynomial,
                      is_contact_form, is_exact_symplectic, is_symplectic,
                      kernel_radical_check, liouville_vector, reeb_vector)
from .construct import (ExtensionData, InadmissibleExtension, build_extension,
                        central_extension, check_extension_cocycle,
                        contactization_condition, contactize, exact_symplectization,
                        reduce_by_center)
from .obstruct import (BilinearForm, center_obstruction,
                       codim1_abelian_obstruction, codim1_derived_criteria,
                       dim5_decision, invariant_form_space, orthogonal_exists,
                       orthogonal_contact_cross_check, rank_one_bracket_detect)
from . import catalog

__version__ = "0.1.0"

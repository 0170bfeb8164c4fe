"""Contact and exact-symplectic predicates, Reeb/Liouville solvers,
and symbolic existence decisions.

Existence is decided symbolically: the top coefficient of the volume
condition is expanded over the polynomial ring in fresh coefficient
variables, so a negative verdict is a proof, not an absence of luck.
Witness search evaluates that polynomial on a deterministic integer grid
ordered by support size, with early exit.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from . import linalg
from .forms import KForm, ce_d, kernel_of_covector, two_form_matrix, two_form_radical
from .liealg import LieAlgebra
from .report import Report
from .scalar import ONE, ZERO, Scalar, as_scalar


@dataclass
class ContactVerdict:
    form: KForm
    top: Scalar                   # coefficient of the volume form in (d eta)^n ^ eta
    is_contact: bool
    reeb: tuple | None = None
    reeb_note: str = ""

    def __bool__(self):
        return self.is_contact


@dataclass
class ExistenceVerdict:
    mode: str                     # "contact" | "frobenius" | "orthogonal"
    exists: bool
    polynomial: Scalar
    coefficient_names: tuple = ()
    witness: object = None
    sample: dict | None = None


@dataclass
class GenericTopForm:
    """Top coefficient of the volume condition for a generic 1-form."""
    polynomial: Scalar
    coefficient_names: tuple
    generic_form: KForm


# ----------------------------------------------------------------------
# direct verification
# ----------------------------------------------------------------------

def is_contact_form(alg: LieAlgebra, eta: KForm) -> ContactVerdict:
    """Check (d eta)^n ^ eta != 0 on a (2n+1)-dimensional algebra."""
    if alg.dim % 2 == 0:
        raise ValueError("contact condition needs odd dimension")
    if eta.k != 1 or eta.n != alg.dim:
        raise ValueError("expected a 1-form on the algebra")
    n = (alg.dim - 1) // 2
    omega = ce_d(alg, eta)
    top = omega.power(n).wedge(eta).top_coefficient()
    # nonzero as a polynomial <=> nonzero somewhere on the (open dense)
    # constrained parameter locus
    contact = not top.is_zero
    reeb = None
    note = ""
    if contact:
        try:
            reeb = _reeb_from_radical(alg, eta, omega)
        except (linalg.RankInstability, ValueError) as exc:
            note = f"reeb not computed over the parameter ring: {exc}"
    return ContactVerdict(eta, top, contact, reeb, note)


def _reeb_from_radical(alg, eta, omega):
    rad = two_form_radical(alg, omega)
    if rad.dim != 1:
        raise ValueError(f"radical of d(eta) has dimension {rad.dim}, expected 1")
    z = rad.rows[0]
    ez = eta.eval([z])
    if ez.is_zero:
        raise ValueError("form vanishes on the radical of its differential")
    if not ez.is_rational:
        raise ValueError(f"normalization 1/({ez}) leaves the polynomial ring; "
                         "substitute a parameter sample")
    xi = tuple(c / ez for c in z)
    # postcondition self-check: i_xi d(eta) = 0 and eta(xi) = 1
    if not omega.interior(xi).is_zero:
        raise AssertionError("reeb solver postcondition failed")
    return xi


def reeb_vector(alg: LieAlgebra, eta: KForm):
    v = is_contact_form(alg, eta)
    if not v.is_contact:
        raise ValueError("form is not contact; no reeb vector")
    if v.reeb is None:
        raise ValueError(v.reeb_note or "reeb vector unavailable")
    return v.reeb


def is_symplectic(alg: LieAlgebra, omega: KForm) -> Report:
    rep = Report("is-symplectic")
    if alg.dim % 2:
        rep.add("dimension", "error", detail="odd dimension")
        return rep
    m = alg.dim // 2
    d = ce_d(alg, omega)
    rep.add("closed", "pass" if d.is_zero else "fail",
            rule="2-cocycle", residual=d.format(alg))
    top = omega.power(m).top_coefficient()
    rep.add("nondegenerate", "pass" if not top.is_zero else "fail",
            rule="volume-form", top=top)
    return rep


def is_exact_symplectic(alg: LieAlgebra, alpha: KForm) -> Report:
    """Frobenius condition: (d alpha)^m a volume form on a 2m-dim algebra."""
    rep = Report("is-exact-symplectic")
    if alg.dim % 2:
        rep.add("dimension", "error", detail="odd dimension")
        return rep
    m = alg.dim // 2
    if alpha.k != 1:
        rep.add("degree", "error", detail="expected a 1-form")
        return rep
    omega = ce_d(alg, alpha)
    top = omega.power(m).top_coefficient()
    rep.add("nondegenerate", "pass" if not top.is_zero else "fail",
            rule="volume-form", top=top)
    return rep


def liouville_vector(alg: LieAlgebra, alpha: KForm):
    """Unique x0 with (d alpha)(x0, .) = alpha for exact symplectic alpha."""
    omega = ce_d(alg, alpha)
    m = two_form_matrix(omega)
    # solve sum_i x_i omega(e_i, e_j) = alpha_j: transpose the skew matrix
    a = [[m[i][j] for i in range(alg.dim)] for j in range(alg.dim)]
    rhs = [alpha.terms.get((j,), ZERO) for j in range(alg.dim)]
    try:
        return linalg.solve(a, rhs, alg.constraints)
    except ValueError:
        raise ValueError("differential of the form is degenerate") from None


# ----------------------------------------------------------------------
# symbolic existence
# ----------------------------------------------------------------------

def _fresh_names(alg, count, base="a"):
    while any(f"{base}{i+1}" in alg.params for i in range(count)):
        base = "a" + base
    return tuple(f"{base}{i+1}" for i in range(count))


def generic_one_form(alg: LieAlgebra, base="a"):
    names = _fresh_names(alg, alg.dim, base)
    coeffs = [Scalar.variable(nm) for nm in names]
    return KForm.one_form(alg, coeffs), names


def contact_polynomial(alg: LieAlgebra) -> GenericTopForm:
    """Top coefficient of (d eta)^n ^ eta for a generic eta = sum a_i e_i*."""
    if alg.dim % 2 == 0:
        raise ValueError("contact condition needs odd dimension")
    n = (alg.dim - 1) // 2
    eta, names = generic_one_form(alg)
    omega = ce_d(alg, eta)
    top = omega.power(n).wedge(eta).top_coefficient()
    return GenericTopForm(top, names, eta)


def frobenius_polynomial(alg: LieAlgebra) -> GenericTopForm:
    """Top coefficient of (d alpha)^m for a generic alpha on a 2m-dim algebra."""
    if alg.dim % 2:
        raise ValueError("frobenius condition needs even dimension")
    m = alg.dim // 2
    alpha, names = generic_one_form(alg)
    omega = ce_d(alg, alpha)
    top = omega.power(m).top_coefficient()
    return GenericTopForm(top, names, alpha)


def integer_candidates(m, values=(1, -1, 2, -2), cap=400_000):
    """Deterministic grid over {-2..2}^m minus 0, ordered by support size."""
    count = 0
    for support in range(1, m + 1):
        for positions in itertools.combinations(range(m), support):
            for vals in itertools.product(values, repeat=support):
                point = [0] * m
                for p, v in zip(positions, vals):
                    point[p] = v
                yield tuple(point)
                count += 1
                if count >= cap:
                    return


def _search_nonvanishing(poly: Scalar, names, cap=400_000):
    """Find an integer point where the polynomial is nonzero, or None.

    Falls back to the grid {0..d_i}^m (d_i = per-variable degree), on which
    a nonzero polynomial cannot vanish identically, when that grid is small
    enough to enumerate.
    """
    if poly.is_zero:
        return None
    m = len(names)
    for point in integer_candidates(m, cap=cap):
        assignment = dict(zip(names, point))
        if not poly.substitute(assignment).is_zero:
            return assignment
    bounds = [poly.max_exponent(nm) + 1 for nm in names]
    size = 1
    for b in bounds:
        size *= b
        if size > cap:
            return None
    for point in itertools.product(*[range(b) for b in bounds]):
        assignment = dict(zip(names, point))
        if not poly.substitute(assignment).is_zero:
            return assignment
    return None


def _decide_existence(alg, sample, generic, verify, mode) -> ExistenceVerdict:
    if alg.params:
        if sample is None:
            raise ValueError(
                "parameterized algebra: provide a rational parameter sample")
        sample = {k: Fraction(v) for k, v in sample.items()}
        concrete = alg.specialize(sample)
    else:
        sample = None
        concrete = alg
    g = generic(alg)
    poly = g.polynomial if sample is None else g.polynomial.specialize(sample)
    exists = not poly.is_zero
    witness = None
    if exists:
        point = _search_nonvanishing(poly, g.coefficient_names)
        if point is not None:
            witness = KForm.one_form(concrete,
                                     [as_scalar(point[nm]) for nm in g.coefficient_names])
            if not verify(concrete, witness):
                raise AssertionError("witness failed direct re-verification")
    return ExistenceVerdict(mode, exists, g.polynomial, g.coefficient_names,
                            witness, sample)


def contact_exists(alg: LieAlgebra, sample=None) -> ExistenceVerdict:
    """Decide existence of a contact form; verdict is generic in the parameters."""
    return _decide_existence(
        alg, sample, contact_polynomial,
        lambda a, w: is_contact_form(a, w).is_contact, "contact")


def frobenius_exists(alg: LieAlgebra, sample=None) -> ExistenceVerdict:
    """Decide existence of an exact symplectic (Frobenius) form."""
    return _decide_existence(
        alg, sample, frobenius_polynomial,
        lambda a, w: is_exact_symplectic(a, w).passed, "frobenius")


# ----------------------------------------------------------------------
# consequences of the contact condition
# ----------------------------------------------------------------------

def kernel_radical_check(alg: LieAlgebra, eta: KForm) -> Report:
    """Kernel of a contact form is not a subalgebra; the radical of its
    differential is the Reeb line."""
    rep = Report("kernel-radical")
    v = is_contact_form(alg, eta)
    if not v.is_contact:
        raise ValueError("form is not contact")
    ker = kernel_of_covector(alg, eta)
    is_sub, _, _ = alg.subspace_predicates(ker)
    rep.add("kernel-not-subalgebra", "pass" if not is_sub else "fail",
            rule="contact-kernel", kernel_dim=ker.dim)
    rad = two_form_radical(alg, ce_d(alg, eta))
    ok = rad.dim == 1 and v.reeb is not None and rad.contains(v.reeb)
    rep.add("radical-is-reeb-line", "pass" if ok else "fail",
            rule="reeb-line", radical_dim=rad.dim)
    return rep


def decomposable_criterion(a: LieAlgebra, b: LieAlgebra) -> Report:
    """A direct sum is contact iff one summand is contact (odd side) and
    the other is exact symplectic (even side)."""
    from .liealg import direct_sum  # local import to avoid cycles in callers
    rep = Report("decomposable-criterion")
    if (a.dim + b.dim) % 2 == 0:
        rep.add("dimension", "error", detail="sum must be odd-dimensional")
        return rep
    whole = contact_exists(direct_sum(a, b))
    if a.dim % 2 == 1:
        odd, even = a, b
    else:
        odd, even = b, a
    side = contact_exists(odd).exists and frobenius_exists(even).exists
    rep.add("direct-sum-contact", "pass" if whole.exists == side else "fail",
            rule="direct-sum-splitting",
            sum_verdict=whole.exists, factor_verdict=side)
    return rep

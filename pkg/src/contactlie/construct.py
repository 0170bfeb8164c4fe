"""Codimension-1 extensions and the contactization / symplectization machinery.

The extension datum is a pair (psi, f) on the base algebra H subject to
the closedness of f and the twisted-derivation identity
    psi([x,y]) = [psi x, y] + [x, psi y] - f(x) psi(y) + f(y) psi(x),
with the new bracket [x, e0] = psi(x) + f(x) e0 on H + R e0.  The new
basis vector is always appended last; constructions re-check their own
postconditions rather than trusting the algebra.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import linalg
from .contact import (ContactVerdict, is_contact_form, is_exact_symplectic,
                      liouville_vector, reeb_vector)
from .forms import KForm, ce_d
from .liealg import LieAlgebra
from .report import Report
from .scalar import ONE, ZERO, Scalar, as_scalar


class InadmissibleExtension(ValueError):
    pass


@dataclass
class ExtensionData:
    """Extension datum: psi (rows of a dim x dim matrix), covector f, scale s."""
    psi: tuple
    f: tuple
    s: Scalar

    @staticmethod
    def build(alg: LieAlgebra, psi_rows, f_coeffs, s=1):
        n = alg.dim
        psi = tuple(tuple(as_scalar(c) for c in row) for row in psi_rows)
        if len(psi) != n or any(len(r) != n for r in psi):
            raise ValueError("psi must be a dim x dim matrix")
        f = tuple(as_scalar(c) for c in f_coeffs)
        if len(f) != n:
            raise ValueError("f must be a covector on the base algebra")
        return ExtensionData(psi, f, as_scalar(s))


def _apply(psi, x):
    return linalg.matvec([list(r) for r in psi], x)


def _f_of(f, x):
    total = ZERO
    for c, xi in zip(f, x):
        if not c.is_zero and not xi.is_zero:
            total = total + c * xi
    return total


def check_extension_cocycle(alg: LieAlgebra, psi, f) -> Report:
    """Closedness of f and the twisted-derivation identity for psi."""
    rep = Report("extension-cocycle")
    bad = 0
    for i in range(alg.dim):
        ei = alg.basis_vector(i)
        for j in range(i + 1, alg.dim):
            ej = alg.basis_vector(j)
            w = alg.bracket_basis(i, j)
            fv = _f_of(f, w)
            if not fv.is_zero:
                bad += 1
                rep.add("f-closed", "fail", rule="closed-1-form",
                        pair=f"({alg.basis[i]},{alg.basis[j]})", residual=fv)
            lhs = _apply(psi, w)
            rhs = alg.bracket(_apply(psi, ei), ej)
            rhs = tuple(a + b for a, b in
                        zip(rhs, alg.bracket(ei, _apply(psi, ej))))
            fi, fj = _f_of(f, ei), _f_of(f, ej)
            rhs = tuple(r - fi * p for r, p in zip(rhs, _apply(psi, ej)))
            rhs = tuple(r + fj * p for r, p in zip(rhs, _apply(psi, ei)))
            resid = tuple(a - b for a, b in zip(lhs, rhs))
            if any(not c.is_zero for c in resid):
                bad += 1
                rep.add("twisted-derivation", "fail", rule="extension-identity",
                        pair=f"({alg.basis[i]},{alg.basis[j]})",
                        residual=alg.format_vector(resid))
    if bad == 0:
        rep.add("cocycle", "pass", rule="extension-identity")
    return rep


def _fresh_label(alg, base):
    label = base
    n = 2
    while label in alg.basis:
        label = f"{base}_{n}"
        n += 1
    return label


def build_extension(alg: LieAlgebra, psi, f, label="e0") -> LieAlgebra:
    """H + R e0 with [x, e0] = psi(x) + f(x) e0; verifies Jacobi afterwards."""
    chk = check_extension_cocycle(alg, psi, f)
    if not chk.passed:
        raise InadmissibleExtension(
            "extension datum fails the cocycle identities:\n" + chk.render())
    n = alg.dim
    table = dict(alg.constants)
    for i in range(n):
        col = [psi[k][i] for k in range(n)]       # psi(e_i)
        for k, c in enumerate(col):
            if not c.is_zero:
                table[(i, n, k)] = c
        if not f[i].is_zero:
            table[(i, n, n)] = f[i]
    out = LieAlgebra(list(alg.basis) + [_fresh_label(alg, label)], table,
                     alg.params, alg.constraints)
    jac = out.jacobi_check()
    if not jac.passed:
        raise AssertionError("extension produced a Jacobi failure:\n" + jac.render())
    return out


def extend_form(alpha: KForm, s, n_new: int) -> KForm:
    """View alpha on the extended algebra and add s times the new covector."""
    terms = {key: c for key, c in alpha.terms.items()}
    s = as_scalar(s)
    if not s.is_zero:
        terms[(n_new - 1,)] = s
    return KForm(n_new, 1, terms)


def contactization_condition(alg: LieAlgebra, alpha: KForm, psi, f, s) -> Scalar:
    """Admissibility scalar omega(x0, psi(x0)) + s (1 + f(x0))."""
    chk = check_extension_cocycle(alg, psi, f)
    if not chk.passed:
        raise InadmissibleExtension(chk.render())
    if not is_exact_symplectic(alg, alpha).passed:
        raise ValueError("base form is not exact symplectic")
    omega = ce_d(alg, alpha)
    x0 = liouville_vector(alg, alpha)
    s = as_scalar(s)
    return omega.eval([x0, _apply(psi, x0)]) + s * (ONE + _f_of(f, x0))


def contactize(alg: LieAlgebra, alpha: KForm, psi, f, s, label="e0"):
    """Contact algebra of dimension dim+1 with form alpha + s e0*.

    Returns (extended algebra, ContactVerdict).  The pullback of the new
    form along the inclusion of the base is alpha, re-checked exactly.
    """
    cond = contactization_condition(alg, alpha, psi, f, s)
    if cond.is_zero:
        raise InadmissibleExtension(
            f"inadmissible extension scale: condition {cond} vanishes")
    big = build_extension(alg, psi, f, label)
    eta = extend_form(alpha, s, big.dim)
    verdict = is_contact_form(big, eta)
    if not verdict.is_contact:
        raise AssertionError("contactization postcondition failed")
    if eta.restrict(alg.dim) != alpha:
        raise AssertionError("pullback of the contact form is not the base form")
    return big, verdict


def central_extension(alg: LieAlgebra, omega: KForm, label="xi"):
    """Adjoin a central line with bracket twisted by a symplectic 2-cocycle.

    Returns (extended algebra, contact form xi*).
    """
    if omega.k != 2 or omega.n != alg.dim:
        raise ValueError("expected a 2-form on the algebra")
    if not ce_d(alg, omega).is_zero:
        raise ValueError("2-form is not closed")
    if alg.dim % 2:
        raise ValueError("central extension of an odd-dimensional algebra")
    if omega.power(alg.dim // 2).top_coefficient().is_zero:
        raise ValueError("2-form is degenerate")
    n = alg.dim
    table = dict(alg.constants)
    for (i, j), c in omega.terms.items():
        prev = table.get((i, j, n), ZERO)
        table[(i, j, n)] = prev + c
    out = LieAlgebra(list(alg.basis) + [_fresh_label(alg, label)], table,
                     alg.params, alg.constraints)
    eta = KForm.basis_covector(out.dim, n)
    verdict = is_contact_form(out, eta)
    if not verdict.is_contact:
        raise AssertionError("central extension postcondition failed")
    return out, eta


def reduce_by_center(alg: LieAlgebra, eta: KForm):
    """Inverse of the central extension: quotient a contact algebra with
    1-dimensional center by it, recovering a symplectic base.

    Returns (base algebra, symplectic 2-form, adapted basis columns);
    the adapted basis is (kernel basis of eta) + (normalized central vector).
    """
    v = is_contact_form(alg, eta)
    if not v.is_contact:
        raise ValueError("form is not contact")
    z_space = alg.center()
    if z_space.dim != 1:
        raise ValueError(f"center has dimension {z_space.dim}, expected 1")
    z = z_space.rows[0]
    ez = eta.eval([z])
    if ez.is_zero:
        raise ValueError("contact form vanishes on the center")
    z = tuple(c / ez for c in z)
    from .forms import kernel_of_covector
    ker = kernel_of_covector(alg, eta)
    basis = list(ker.rows)
    m = len(basis)
    table = {}
    omega_terms = {}
    for a in range(m):
        for b in range(a + 1, m):
            w = alg.bracket(basis[a], basis[b])
            lam = eta.eval([w])
            w = tuple(c - lam * zc for c, zc in zip(w, z))
            from .liealg import coords_in_span
            coeffs = coords_in_span(basis, w, alg.constraints)
            if coeffs is None:
                raise AssertionError("quotient bracket left the kernel")
            for k, c in enumerate(coeffs):
                if not c.is_zero:
                    table[(a, b, k)] = c
            if not lam.is_zero:
                omega_terms[(a, b)] = lam
    base = LieAlgebra([f"u{i+1}" for i in range(m)], table,
                      alg.params, alg.constraints)
    omega = KForm(m, 2, omega_terms)
    # round trip: the central extension of the quotient reproduces the
    # algebra in the adapted basis
    rebuilt, _ = central_extension(base, omega)
    from .liealg import change_basis
    adapted = change_basis(alg, basis + [z])
    if rebuilt.constants != adapted.constants:
        raise AssertionError("central-extension round trip failed")
    return base, omega, basis + [z]


def exact_symplectization(alg: LieAlgebra, eta: KForm, psi, f, s, label="e0"):
    """Extend a contact algebra to an exact symplectic one with
    alpha_s = eta + s e0*, admissible when eta(psi(xi)) + s f(xi) != 0."""
    xi = reeb_vector(alg, eta)
    chk = check_extension_cocycle(alg, psi, f)
    if not chk.passed:
        raise InadmissibleExtension(chk.render())
    s = as_scalar(s)
    cond = eta.eval([_apply(psi, xi)]) + s * _f_of(f, xi)
    if cond.is_zero:
        raise InadmissibleExtension(
            f"inadmissible symplectization scale: condition {cond} vanishes")
    big = build_extension(alg, psi, f, label)
    alpha = extend_form(eta, s, big.dim)
    if not is_exact_symplectic(big, alpha).passed:
        raise AssertionError("symplectization postcondition failed")
    return big, alpha

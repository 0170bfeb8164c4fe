"""Structural obstructions to contact and exact-symplectic structures.

Each predicate reports the named criterion it instantiates so CI logs are
self-documenting.  Every nonexistence verdict asserted here is independently
cross-checked against the symbolic decision procedure in the test suite;
the two must never disagree.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import linalg
from .contact import (ExistenceVerdict, _search_nonvanishing, contact_exists,
                      generic_one_form, is_contact_form)
from .forms import KForm, kernel_of_covector
from .liealg import LieAlgebra, Subspace, coords_in_span
from .report import Report
from .scalar import ONE, ZERO, Scalar, as_scalar


@dataclass
class BilinearForm:
    """Symmetric matrix of Scalars; nondegeneracy is a query, not an invariant."""
    rows: tuple

    @staticmethod
    def from_rows(rows):
        rows = tuple(tuple(as_scalar(c) for c in r) for r in rows)
        n = len(rows)
        for i in range(n):
            for j in range(n):
                if rows[i][j] != rows[j][i]:
                    raise ValueError("matrix is not symmetric")
        return BilinearForm(rows)

    @property
    def dim(self):
        return len(self.rows)

    def is_nondegenerate(self) -> bool:
        return not linalg.det([list(r) for r in self.rows]).is_zero

    def pair(self, x, y) -> Scalar:
        x = [as_scalar(c) for c in x]
        y = [as_scalar(c) for c in y]
        return sum((self.rows[i][j] * x[i] * y[j]
                    for i in range(self.dim) for j in range(self.dim)
                    if not self.rows[i][j].is_zero), ZERO)


def _sym_index(n):
    pairs = [(i, j) for i in range(n) for j in range(i, n)]
    where = {p: k for k, p in enumerate(pairs)}
    return pairs, where


def invariant_form_space(alg: LieAlgebra):
    """Basis of the space of ad-invariant symmetric bilinear forms."""
    n = alg.dim
    pairs, where = _sym_index(n)
    rows = []
    for a in range(n):
        for (i, j) in pairs:
            row = [ZERO] * len(pairs)
            # b([e_a, e_i], e_j) + b(e_i, [e_a, e_j]) = 0
            for k in range(n):
                c = alg.structure_constant(a, i, k)
                if not c.is_zero:
                    p = where[(min(k, j), max(k, j))]
                    row[p] = row[p] + c
                c = alg.structure_constant(a, j, k)
                if not c.is_zero:
                    p = where[(min(i, k), max(i, k))]
                    row[p] = row[p] + c
            if any(not c.is_zero for c in row):
                rows.append(row)
    basis = []
    for v in linalg.nullspace(rows, len(pairs), alg.constraints):
        mat = [[ZERO] * n for _ in range(n)]
        for (i, j), c in zip(pairs, v):
            mat[i][j] = c
            mat[j][i] = c
        basis.append(BilinearForm.from_rows(mat))
    return basis


def orthogonal_exists(alg: LieAlgebra) -> ExistenceVerdict:
    """Does the algebra carry an ad-invariant nondegenerate symmetric form?

    Decided by the determinant of the pencil over the invariant space,
    expanded symbolically in fresh variables.
    """
    basis = invariant_form_space(alg)
    k = len(basis)
    if k == 0:
        return ExistenceVerdict("orthogonal", False, ZERO, ())
    names = tuple(f"t{i+1}" for i in range(k))
    while any(nm in alg.params for nm in names):
        names = tuple("t" + nm for nm in names)
    n = alg.dim
    pencil = [[ZERO] * n for _ in range(n)]
    for nm, b in zip(names, basis):
        t = Scalar.variable(nm)
        for i in range(n):
            for j in range(n):
                if not b.rows[i][j].is_zero:
                    pencil[i][j] = pencil[i][j] + t * b.rows[i][j]
    poly = linalg.det(pencil)
    exists = not poly.is_zero
    witness = None
    if exists:
        point = _search_witness_matrix(basis, names, poly)
        if point is not None:
            mat = [[ZERO] * n for _ in range(n)]
            for val, b in zip(point, basis):
                for i in range(n):
                    for j in range(n):
                        if not b.rows[i][j].is_zero:
                            mat[i][j] = mat[i][j] + as_scalar(val) * b.rows[i][j]
            witness = BilinearForm.from_rows(mat)
            if not witness.is_nondegenerate():
                raise AssertionError("orthogonal witness failed re-verification")
    return ExistenceVerdict("orthogonal", exists, poly, names, witness)


def _search_witness_matrix(basis, names, poly):
    k = len(names)
    # cheap deterministic sequences first, then the support-ordered grid
    for seq in ([1] * k, list(range(1, k + 1)), [2 ** i for i in range(k)]):
        assignment = dict(zip(names, seq))
        if not poly.substitute(assignment).is_zero:
            return seq
    point = _search_nonvanishing(poly, names, cap=100_000)
    if point is None:
        return None
    return [point[nm] for nm in names]


def orthogonal_contact_cross_check(alg: LieAlgebra, sample=None) -> Report:
    """Tripwire: bi-invariant metric + contact forces a 3-dimensional algebra
    (locally sl(2) or so(3)); in that case the adjoint of the metric-dual of
    the contact form splits the algebra as a 1-dim kernel plus its image."""
    rep = Report("orthogonal-contact")
    if alg.dim < 3:
        rep.add("coexistence", "info",
                detail="degenerate below dimension 3 (kernel of a covector "
                       "is the zero subalgebra)")
        return rep
    ortho = orthogonal_exists(alg)
    cont = contact_exists(alg, sample) if alg.dim % 2 else None
    has_contact = bool(cont and cont.exists)
    rep.add("orthogonal", "info", exists=ortho.exists)
    rep.add("contact", "info", exists=has_contact)
    if not (ortho.exists and has_contact):
        rep.add("coexistence", "pass", rule="boothby-wang-extension",
                detail="at most one structure present" if not (ortho.exists and has_contact) else "")
        return rep
    if alg.dim != 3:
        rep.add("coexistence", "fail", rule="boothby-wang-extension",
                detail="orthogonal and contact coexist above dimension 3")
        return rep
    rep.add("coexistence", "pass", rule="boothby-wang-extension", dim=3)
    # decomposition check on the metric-dual of the contact witness
    b = ortho.witness
    eta = cont.witness
    rhs = [eta.terms.get((i,), ZERO) for i in range(3)]
    xbar = linalg.solve([list(r) for r in b.rows], rhs, alg.constraints)
    ad = alg.ad(xbar)
    ker = Subspace(3, linalg.nullspace(ad, 3, alg.constraints), alg.constraints)
    image = Subspace(3, [tuple(r) for r in zip(*ad)], alg.constraints)
    ok = (ker.dim == 1 and image.dim == 2
          and linalg.rank([list(ker.rows[0])] + [list(r) for r in image.rows]) == 3)
    rep.add("kernel-image-split", "pass" if ok else "fail",
            rule="adjoint-splitting", kernel_dim=ker.dim, image_dim=image.dim)
    derived = alg.derived_ideal()
    rep.add("perfect", "pass" if derived.dim == alg.dim else "fail",
            rule="derived-ideal-full", derived_dim=derived.dim)
    return rep


def center_obstruction(alg: LieAlgebra) -> Report:
    """A contact algebra has center of dimension at most 1."""
    rep = Report("center-obstruction")
    if alg.dim % 2 == 0:
        rep.add("dimension", "error", detail="odd dimension required")
        return rep
    z = alg.center()
    if z.dim >= 2:
        rep.add("obstruction", "fail", rule="center-dim (>1)",
                center_dim=z.dim, consequence="no contact form")
    else:
        rep.add("obstruction", "pass", rule="center-dim (>1)", center_dim=z.dim)
    return rep


def codim1_derived_criteria(alg: LieAlgebra) -> Report:
    """Necessary conditions on the center of a codimension-1 derived ideal:
    dim Z(N) <= 2, and when it is 2 the complement generator must act
    non-scalarly on Z(N)."""
    rep = Report("codim1-derived")
    if not alg.is_solvable():
        raise ValueError("algebra is not solvable")
    nid = alg.derived_ideal()
    if nid.dim != alg.dim - 1:
        raise ValueError(
            f"derived ideal has codimension {alg.dim - nid.dim}, expected 1")
    sub = alg.restrict(nid)
    zn = sub.center()
    rep.add("nilradical-center", "info", zdim=zn.dim, ndim=nid.dim)
    if zn.dim > 2:
        rep.add("obstruction", "fail", rule="derived-center-dim (>2)",
                consequence="no contact form")
        return rep
    if zn.dim == 2:
        # complement generator; its restriction to Z(N) is independent of the
        # choice modulo N, because N centralizes Z(N)
        e = _complement_vector(alg, nid)
        zvecs = [_lift(nid, v) for v in zn.rows]
        action = []
        for v in zvecs:
            w = alg.bracket(e, v)
            coeffs = coords_in_span(zvecs, w, alg.constraints)
            if coeffs is None:
                raise AssertionError("Z(N) is not invariant under the complement")
            action.append(coeffs)
        scalar = (action[0][1].is_zero and action[1][0].is_zero
                  and action[0][0] == action[1][1])
        if scalar:
            rep.add("obstruction", "fail", rule="derived-center-eigenspace",
                    consequence="no contact form",
                    action=f"scalar ({action[0][0]})")
        else:
            rep.add("obstruction", "pass", rule="derived-center-eigenspace",
                    action="non-scalar")
    else:
        rep.add("obstruction", "pass", rule="derived-center-dim (>2)")
    return rep


def _complement_vector(alg, sub):
    for i in range(alg.dim):
        v = alg.basis_vector(i)
        if not sub.contains(v):
            return v
    raise ValueError("subspace is the whole algebra")


def _lift(sub, coords):
    """Vector of the ambient space from coordinates in the subspace basis."""
    out = [ZERO] * sub.ambient
    for c, row in zip(coords, sub.rows):
        if not c.is_zero:
            for k, r in enumerate(row):
                out[k] = out[k] + c * r
    return tuple(out)


def find_codim1_abelian_ideal(alg: LieAlgebra):
    """A codimension-1 abelian ideal as a Subspace, or None.

    Codimension-1 ideals are exactly the hyperplanes containing the derived
    ideal; the abelian ones are cut out by a linear divisibility condition
    on the bracket restricted to the trivially-acting part of a complement.
    """
    m = alg.derived_ideal()
    r, n = m.dim, alg.dim
    if r == n:
        return None
    _, _, m_abelian = alg.subspace_predicates(m)
    if not m_abelian:
        return None
    if r == n - 1:
        return m
    comp = _complement_basis(alg, m)
    # K: complement directions commuting with the derived ideal
    kvecs = []
    rows = []
    for w in m.rows:
        cols = [alg.bracket(u, w) for u in comp]
        for k in range(n):
            row = [cols[t][k] for t in range(len(comp))]
            if any(not c.is_zero for c in row):
                rows.append(row)
    for sol in linalg.nullspace(rows, len(comp), alg.constraints):
        v = [ZERO] * n
        for c, u in zip(sol, comp):
            for k in range(n):
                v[k] = v[k] + c * u[k]
        kvecs.append(tuple(v))
    d1 = n - r
    kappa = len(kvecs)
    if kappa < d1 - 1:
        return None
    if kappa == d1 - 1:
        if _pairwise_abelian(alg, kvecs):
            return Subspace(n, list(m.rows) + kvecs, alg.constraints)
        return None
    # kappa == d1: need a hyperplane U of K with the bracket vanishing on U.
    # beta_m = phi ^ psi_m for every value coordinate m <=> phi ^ beta_m = 0,
    # a linear system in phi.
    beta = {}
    for a in range(kappa):
        for b in range(a + 1, kappa):
            w = alg.bracket(kvecs[a], kvecs[b])
            for k, c in enumerate(w):
                if not c.is_zero:
                    beta.setdefault(k, {})[(a, b)] = c
    if not beta:
        return Subspace(n, list(m.rows) + kvecs[:-1], alg.constraints)
    rows = []
    for coords in beta.values():
        for (x, y, z) in itertools.combinations(range(kappa), 3):
            row = [ZERO] * kappa
            row[x] = coords.get((y, z), ZERO)
            row[y] = -coords.get((x, z), ZERO)
            row[z] = coords.get((x, y), ZERO)
            if any(not c.is_zero for c in row):
                rows.append(row)
    sols = linalg.nullspace(rows, kappa, alg.constraints)
    for phi in sols:
        if all(c.is_zero for c in phi):
            continue
        # U = kernel of phi inside K
        urows = linalg.nullspace([list(phi)], kappa, alg.constraints)
        uvecs = [_combine(kvecs, u) for u in urows]
        if _pairwise_abelian(alg, uvecs):
            return Subspace(n, list(m.rows) + uvecs, alg.constraints)
    return None


def _combine(vectors, coeffs):
    n = len(vectors[0])
    out = [ZERO] * n
    for c, v in zip(coeffs, vectors):
        if not c.is_zero:
            for k in range(n):
                out[k] = out[k] + c * v[k]
    return tuple(out)


def _pairwise_abelian(alg, vecs):
    for a in range(len(vecs)):
        for b in range(a + 1, len(vecs)):
            if any(not c.is_zero for c in alg.bracket(vecs[a], vecs[b])):
                return False
    return True


def _complement_basis(alg, sub):
    out = []
    current = [list(r) for r in sub.rows]
    for i in range(alg.dim):
        v = alg.basis_vector(i)
        if linalg.rank(current + [list(v)], alg.constraints) > len(current):
            current.append(list(v))
            out.append(v)
    return out


def codim1_abelian_obstruction(alg: LieAlgebra, hyperplanes=()) -> Report:
    """Search for a codimension-1 abelian ideal; a hit rules out contact and
    exact-symplectic structures in dimension >= 4.

    Abelian codimension-1 *subalgebras* that are not ideals are only tested
    for the user-supplied hyperplanes (given as covectors whose kernels are
    the candidate subspaces)."""
    rep = Report("codim1-abelian")
    hit = find_codim1_abelian_ideal(alg)
    source = "ideal-search"
    if hit is None:
        for cov in hyperplanes:
            ker = kernel_of_covector(alg, cov)
            is_sub, _, is_abel = alg.subspace_predicates(ker)
            if is_sub and is_abel:
                hit = ker
                source = "user-hyperplane"
                break
    if hit is None:
        rep.add("search", "pass", rule="codim1-abelian-subalgebra",
                detail="no codimension-1 abelian ideal (subalgebras only "
                       "checked for supplied hyperplanes)")
        return rep
    if alg.dim < 4:
        rep.add("search", "info", rule="codim1-abelian-subalgebra",
                detail=f"found via {source}, but no obstruction below dimension 4")
        return rep
    rep.add("obstruction", "fail", rule="codim1-abelian-subalgebra",
            source=source,
            consequence="no contact form and no exact symplectic form")
    return rep


def rank_one_bracket_detect(alg: LieAlgebra) -> Report:
    """Detect the bracket shape [x,y] = l(y)x - l(x)y.

    The candidate covector comes from the trace identity
    trace(ad_x) = -(dim-1) l(x).  A hit pins the algebra up to local
    isomorphism (codimension-1 abelian ideal ker l, complement acting as
    minus the identity) and rules out contact (dim >= 3) and
    exact-symplectic (dim >= 4) structures.
    """
    rep = Report("rank-one-bracket")
    n = alg.dim
    if n < 2:
        raise ValueError("needs dimension >= 2")
    l = [-alg.trace_ad(alg.basis_vector(i)) / (n - 1) for i in range(n)]
    holds = True
    for i in range(n):
        for j in range(i + 1, n):
            w = alg.bracket_basis(i, j)
            expect = [ZERO] * n
            expect[i] = l[j]
            expect[j] = expect[j] - l[i]
            if any(not (w[k] - expect[k]).is_zero for k in range(n)):
                holds = False
                break
        if not holds:
            break
    lform = KForm(n, 1, {(i,): c for i, c in enumerate(l) if not c.is_zero})
    if not holds:
        rep.add("detect", "pass", rule="rank-one-bracket",
                detail="bracket is not of rank-one form")
        return rep
    rep.add("detect", "info", rule="rank-one-bracket",
            covector=lform.format(alg),
            normal_form="abelian hyperplane ker(l) with complement acting as -id")
    if n >= 3 and n % 2 == 1:
        rep.add("obstruction", "fail", rule="rank-one-no-contact",
                consequence="no contact form")
    if n >= 4 and n % 2 == 0:
        rep.add("obstruction", "fail", rule="rank-one-no-frobenius",
                consequence="no exact symplectic form")
    return rep


def dim5_decision(alg: LieAlgebra, nondecomposable: bool) -> Report:
    """Case split for 5-dimensional solvable algebras with trivial center.

    predicted=True/False when the criterion decides, absent when it is
    silent (derived ideal abelian of dimension 3, or dimension < 3).
    """
    rep = Report("dim5-decision")
    if alg.dim != 5:
        raise ValueError("decision tree applies to dimension 5")
    if not alg.is_solvable():
        raise ValueError("algebra is not solvable")
    if not nondecomposable:
        raise ValueError("decision tree needs the nondecomposable flag")
    if alg.center().dim != 0:
        raise ValueError("decision tree needs trivial center")
    nid = alg.derived_ideal()
    d = nid.dim
    rep.add("derived-ideal", "info", dim=d)
    if d == 3:
        sub = alg.restrict(nid)
        if not sub.is_abelian():
            rep.add("predicted", "info", rule="dim5-derived3-nonabelian",
                    value=True)
        else:
            rep.add("predicted", "info", rule="dim5-derived3-abelian",
                    value="undecided")
        return rep
    if d == 4:
        inner = codim1_derived_criteria(alg)
        rep.extend(inner, prefix="codim1.")
        rep.add("predicted", "info", rule="dim5-derived4-center-split",
                value=inner.passed)
        return rep
    rep.add("predicted", "info", rule="dim5-out-of-cases", value="undecided")
    return rep


def predicted_contact(report: Report):
    """Extract the dim5_decision prediction: True, False, or None."""
    for rec in report.records:
        if rec.name == "predicted":
            v = rec.payload.get("value")
            if v == "True":
                return True
            if v == "False":
                return False
            return None
    return None

"""Exterior algebra on the dual space and the Chevalley-Eilenberg differential.

KForms are sparse: a map from strictly increasing index tuples to Scalar
coefficients.  Index tuples are shadowed by bitmasks so disjointness and
shuffle signs cost O(1) popcounts; the catalogs are sparse enough that
wedge powers stay small through dimension 12.
"""

from __future__ import annotations

from . import linalg
from .liealg import LieAlgebra, Subspace, weighted_terms
from .scalar import ONE, ZERO, Scalar, as_scalar


def _mask(key):
    m = 0
    for i in key:
        m |= 1 << i
    return m


def _merge_sign(key_a, mask_a, key_b):
    """Merge disjoint increasing tuples; sign is the shuffle parity."""
    inversions = 0
    for i in key_b:
        # count members of key_a strictly greater than i
        inversions += (mask_a >> (i + 1)).bit_count()
    merged = tuple(sorted(key_a + key_b))
    return merged, -1 if inversions & 1 else 1


class KForm:
    """Alternating k-linear form with exact sparse coefficients."""

    __slots__ = ("n", "k", "terms")

    def __init__(self, n, k, terms=None):
        if k < 0:
            raise ValueError("negative degree")
        if k > n and terms:
            raise ValueError(f"degree {k} form on dimension {n} must be zero")
        self.n = n
        self.k = k
        clean = {}
        if terms:
            for key, c in terms.items():
                key = tuple(key)
                c = as_scalar(c)
                if c.is_zero:
                    continue
                if len(key) != k or list(key) != sorted(set(key)):
                    raise ValueError(f"key {key} is not a strictly increasing {k}-tuple")
                if key and (key[0] < 0 or key[-1] >= n):
                    raise ValueError(f"key {key} out of range for dimension {n}")
                clean[key] = c
        self.terms = clean

    # -- constructors ----------------------------------------------------

    @staticmethod
    def zero(n, k):
        return KForm(n, k)

    @staticmethod
    def constant(n, c=ONE):
        return KForm(n, 0, {(): as_scalar(c)})

    @staticmethod
    def basis_covector(n, i):
        return KForm(n, 1, {(i,): ONE})

    @staticmethod
    def one_form(alg_or_n, coeffs):
        n = alg_or_n.dim if hasattr(alg_or_n, "dim") else alg_or_n
        return KForm(n, 1, {(i,): as_scalar(c) for i, c in enumerate(coeffs)})

    # -- ring structure ----------------------------------------------------

    @property
    def is_zero(self):
        return not self.terms

    def __add__(self, other):
        self._check(other)
        if self.k != other.k:
            raise ValueError("cannot add forms of different degree")
        out = dict(self.terms)
        for key, c in other.terms.items():
            s = out.get(key, ZERO) + c
            if s.is_zero:
                out.pop(key, None)
            else:
                out[key] = s
        return KForm(self.n, self.k, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return KForm(self.n, self.k, {k: -c for k, c in self.terms.items()})

    def scale(self, c):
        c = as_scalar(c)
        if c.is_zero:
            return KForm(self.n, self.k)
        return KForm(self.n, self.k, {k: c * v for k, v in self.terms.items()})

    def __mul__(self, c):
        return self.scale(c)

    __rmul__ = __mul__

    def wedge(self, other: "KForm") -> "KForm":
        self._check(other)
        k = self.k + other.k
        if k > self.n:
            return KForm(self.n, k)
        out = {}
        masks = {key: _mask(key) for key in self.terms}
        for ka, ca in self.terms.items():
            ma = masks[ka]
            for kb, cb in other.terms.items():
                if ma & _mask(kb):
                    continue
                merged, sign = _merge_sign(ka, ma, kb)
                term = ca * cb
                if sign < 0:
                    term = -term
                s = out.get(merged, ZERO) + term
                if s.is_zero:
                    out.pop(merged, None)
                else:
                    out[merged] = s
        return KForm(self.n, k, out)

    def power(self, m: int) -> "KForm":
        """m-fold wedge power; power 0 is the constant 1."""
        if m < 0:
            raise ValueError("negative wedge power")
        result = KForm.constant(self.n)
        for _ in range(m):
            result = result.wedge(self)
            if result.is_zero:
                return KForm(self.n, self.k * m)
        return result

    # -- evaluation ----------------------------------------------------------

    def eval(self, vectors) -> Scalar:
        vectors = [tuple(as_scalar(c) for c in v) for v in vectors]
        if len(vectors) != self.k:
            raise ValueError(f"degree {self.k} form needs {self.k} arguments")
        total = ZERO
        for key, c in self.terms.items():
            minor = [[v[i] for i in key] for v in vectors]
            d = linalg.det(minor)
            if not d.is_zero:
                total = total + c * d
        return total

    def interior(self, x) -> "KForm":
        """Interior product i_x: plug x into the first slot."""
        x = tuple(as_scalar(c) for c in x)
        if self.k == 0:
            return KForm(self.n, 0)
        out = {}
        for key, c in self.terms.items():
            for t, i in enumerate(key):
                if x[i].is_zero:
                    continue
                sub = key[:t] + key[t + 1:]
                term = c * x[i]
                if t & 1:
                    term = -term
                s = out.get(sub, ZERO) + term
                if s.is_zero:
                    out.pop(sub, None)
                else:
                    out[sub] = s
        return KForm(self.n, self.k - 1, out)

    def restrict(self, m: int) -> "KForm":
        """Pullback along the inclusion of the first m coordinates."""
        out = {}
        for key, c in self.terms.items():
            if not key or key[-1] < m:
                out[key] = c
        return KForm(m, self.k, out)

    def top_coefficient(self) -> Scalar:
        """Coefficient of e_1*^...^e_n* for a top-degree form."""
        if self.k != self.n:
            raise ValueError("not a top-degree form")
        return self.terms.get(tuple(range(self.n)), ZERO)

    def substitute(self, assignment) -> "KForm":
        return KForm(self.n, self.k,
                     {k: c.substitute(assignment) for k, c in self.terms.items()})

    def specialize(self, assignment) -> "KForm":
        return KForm(self.n, self.k,
                     {k: c.specialize(assignment) for k, c in self.terms.items()})

    # -- plumbing ----------------------------------------------------------

    def _check(self, other):
        if not isinstance(other, KForm) or other.n != self.n:
            raise ValueError("ambient dimensions do not match")

    def __eq__(self, other):
        if not isinstance(other, KForm):
            return NotImplemented
        return self.n == other.n and self.k == other.k and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, self.k, frozenset(self.terms.items())))

    def format(self, alg: LieAlgebra = None) -> str:
        if not self.terms:
            return "0"
        label = (lambda i: alg.basis[i] + "*") if alg is not None \
            else (lambda i: f"e{i+1}*")
        parts = []
        for key in sorted(self.terms):
            c = self.terms[key]
            mono = "^".join(label(i) for i in key) if key else "1"
            parts.append((c, mono))
        out = []
        for idx, (c, mono) in enumerate(parts):
            neg = False
            if c == ONE:
                body = mono
            elif c == -ONE:
                body = mono
                neg = True
            elif c.is_rational:
                f = c.as_fraction()
                neg = f < 0
                body = f"{abs(f)} {mono}"
            else:
                body = f"({c}) {mono}"
            if idx == 0:
                out.append(("-" if neg else "") + body)
            else:
                out.append((" - " if neg else " + ") + body)
        return "".join(out)

    def __repr__(self):
        return f"KForm({self.format()})"


# ----------------------------------------------------------------------
# Chevalley-Eilenberg differential (trivial coefficients)
# ----------------------------------------------------------------------

def ce_d_basis(alg: LieAlgebra):
    """d of each basis covector: d(e_k*) = - sum_{i<j} c_ijk e_i*^e_j*."""
    cached = alg._cache.get("ce_d1")
    if cached is not None:
        return cached
    out = [dict() for _ in range(alg.dim)]
    for (i, j, k), c in alg.constants.items():
        out[k][(i, j)] = -c
    forms = [KForm(alg.dim, 2, t) for t in out]
    alg._cache["ce_d1"] = forms
    return forms


def ce_d(alg: LieAlgebra, form: KForm) -> KForm:
    """Coboundary: antiderivation extending d(eta)(x,y) = -eta([x,y])."""
    if form.n != alg.dim:
        raise ValueError("form does not live on this algebra")
    d1 = ce_d_basis(alg)
    out = KForm(alg.dim, form.k + 1)
    if form.k == 0:
        return out
    for key, c in form.terms.items():
        for t, i in enumerate(key):
            if d1[i].is_zero:
                continue
            rest = KForm(alg.dim, form.k - 1,
                         {key[:t] + key[t + 1:]: c if t % 2 == 0 else -c})
            out = out + d1[i].wedge(rest)
    return out


def two_form_matrix(form: KForm):
    """Skew matrix M[i][j] = form(e_i, e_j)."""
    if form.k != 2:
        raise ValueError("expected a 2-form")
    n = form.n
    m = [[ZERO] * n for _ in range(n)]
    for (i, j), c in form.terms.items():
        m[i][j] = c
        m[j][i] = -c
    return m


def two_form_radical(alg: LieAlgebra, form: KForm) -> Subspace:
    """Nullspace of the induced skew matrix."""
    if form.n != alg.dim:
        raise ValueError("form does not live on this algebra")
    m = two_form_matrix(form)
    rows = [r for r in m if any(not c.is_zero for c in r)]
    return Subspace(alg.dim, linalg.nullspace(rows, alg.dim, alg.constraints),
                    alg.constraints)


def two_form_rank(alg: LieAlgebra, form: KForm) -> int:
    rad = two_form_radical(alg, form)
    return alg.dim - rad.dim


def parse_one_form(text: str, alg: LieAlgebra) -> KForm:
    """Parse '2 e1* + (1-p) e3*' against the algebra's basis and parameters."""
    coeffs = [ZERO] * alg.dim
    for c, label in weighted_terms(text, alg.params):
        if not label.endswith("*"):
            raise ValueError(
                f"vector label {label!r} in a 1-form expression (missing '*')")
        i = alg.index_of(label[:-1])
        coeffs[i] = coeffs[i] + c
    return KForm.one_form(alg, coeffs)


def kernel_of_covector(alg: LieAlgebra, form: KForm) -> Subspace:
    if form.k != 1:
        raise ValueError("expected a 1-form")
    row = [form.terms.get((i,), ZERO) for i in range(alg.dim)]
    return Subspace(alg.dim, linalg.nullspace([row], alg.dim, alg.constraints),
                    alg.constraints)

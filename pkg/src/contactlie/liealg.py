"""Lie algebras over exact scalars: bracket, structural queries, text format.

A LieAlgebra stores antisymmetric structure constants sparsely, keyed
(i, j, k) with i < j; bracket queries symmetrize by sign.  Structural
queries (center, derived series, ...) are exact linear algebra; on
parameterized algebras they raise RankInstability when the declared
nonvanishing constraints do not pin the rank.
"""

from __future__ import annotations

from fractions import Fraction

from . import linalg
from .linalg import RankInstability
from .report import Report
from .scalar import ONE, ZERO, Scalar, as_scalar, parse_scalar


class LieAlgebra:
    """Immutable structure-constant presentation of a finite-dimensional Lie algebra."""

    def __init__(self, basis, constants, params=(), constraints=()):
        self.basis = tuple(basis)
        self.dim = len(self.basis)
        if len(set(self.basis)) != self.dim:
            raise ValueError("duplicate basis labels")
        self.params = tuple(params)
        cons = []
        for c in constraints:
            c = as_scalar(c)
            if c.is_zero:
                raise ValueError("constraint polynomial is identically zero")
            cons.append(c)
        self.constraints = tuple(cons)
        table = {}
        for (i, j, k), c in constants.items():
            if not (0 <= i < j < self.dim and 0 <= k < self.dim):
                raise ValueError(f"bad structure constant index ({i},{j},{k})")
            c = as_scalar(c)
            if not c.is_zero:
                table[(i, j, k)] = c
        self.constants = table
        self._index = {lbl: i for i, lbl in enumerate(self.basis)}
        self._cache = {}

    # -- bracket --------------------------------------------------------

    def structure_constant(self, i, j, k) -> Scalar:
        if i == j:
            return ZERO
        if i < j:
            return self.constants.get((i, j, k), ZERO)
        return -self.constants.get((j, i, k), ZERO)

    def bracket_basis(self, i, j):
        """[e_i, e_j] as a coordinate vector."""
        out = [ZERO] * self.dim
        if i == j:
            return tuple(out)
        sign = 1
        if i > j:
            i, j, sign = j, i, -1
        for (a, b, k), c in self.constants.items():
            if a == i and b == j:
                out[k] = c if sign == 1 else -c
        return tuple(out)

    def bracket(self, x, y):
        x = self.vector(x)
        y = self.vector(y)
        out = [ZERO] * self.dim
        for (i, j, k), c in self.constants.items():
            w = x[i] * y[j] - x[j] * y[i]
            if not w.is_zero:
                out[k] = out[k] + c * w
        return tuple(out)

    def vector(self, x):
        """Coerce a coordinate sequence (ints/Fractions/Scalars) to Scalars."""
        v = tuple(as_scalar(c) for c in x)
        if len(v) != self.dim:
            raise ValueError(f"expected {self.dim} coordinates, got {len(v)}")
        return v

    def basis_vector(self, i):
        return tuple(ONE if j == i else ZERO for j in range(self.dim))

    def ad(self, x):
        """Matrix of ad_x acting on coordinates: column j is [x, e_j]."""
        x = self.vector(x)
        cols = [self.bracket(x, self.basis_vector(j)) for j in range(self.dim)]
        return [[cols[j][k] for j in range(self.dim)] for k in range(self.dim)]

    def trace_ad(self, x) -> Scalar:
        x = self.vector(x)
        t = ZERO
        for (i, j, k), c in self.constants.items():
            if k == j:
                t = t + c * x[i]
            if k == i:
                t = t - c * x[j]
        return t

    # -- verdict-style checks ---------------------------------------------

    def jacobi_check(self) -> Report:
        """Jacobi identity as a Scalar identity on every basis triple."""
        rep = Report("jacobi")
        bad = 0
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                vij = self.bracket_basis(i, j)
                for k in range(j + 1, self.dim):
                    v = self.bracket(vij, self.basis_vector(k))
                    v = _vadd(v, self.bracket(self.bracket_basis(j, k),
                                              self.basis_vector(i)))
                    v = _vadd(v, self.bracket(self.bracket_basis(k, i),
                                              self.basis_vector(j)))
                    if any(not c.is_zero for c in v):
                        bad += 1
                        if bad <= 5:
                            rep.add("jacobi-triple", "fail",
                                    rule="jacobi-identity",
                                    triple=f"({self.basis[i]},{self.basis[j]},{self.basis[k]})",
                                    residual=self.format_vector(v))
        if bad == 0:
            rep.add("jacobi", "pass", rule="jacobi-identity",
                    triples=self.dim * (self.dim - 1) * (self.dim - 2) // 6)
        elif bad > 5:
            rep.add("jacobi-more", "fail", rule="jacobi-identity",
                    suppressed=bad - 5)
        return rep

    def is_unimodular(self) -> bool:
        return all(self.trace_ad(self.basis_vector(i)).is_zero
                   for i in range(self.dim))

    def is_abelian(self) -> bool:
        return not self.constants

    # -- structural subspaces ----------------------------------------------

    def center(self) -> "Subspace":
        if "center" in self._cache:
            return self._cache["center"]
        rows = []
        for j in range(self.dim):
            for k in range(self.dim):
                row = [self.structure_constant(i, j, k) for i in range(self.dim)]
                if any(not c.is_zero for c in row):
                    rows.append(row)
        vecs = linalg.nullspace(rows, self.dim, self.constraints)
        out = Subspace(self.dim, vecs, self.constraints)
        self._cache["center"] = out
        return out

    def centralizer(self, sub: "Subspace") -> "Subspace":
        rows = []
        for v in sub.rows:
            cols = [self.bracket(self.basis_vector(i), v) for i in range(self.dim)]
            for k in range(self.dim):
                row = [cols[i][k] for i in range(self.dim)]
                if any(not c.is_zero for c in row):
                    rows.append(row)
        return Subspace(self.dim, linalg.nullspace(rows, self.dim, self.constraints),
                        self.constraints)

    def derived_ideal(self) -> "Subspace":
        vecs = [self.bracket_basis(i, j)
                for i in range(self.dim) for j in range(i + 1, self.dim)]
        return Subspace(self.dim, vecs, self.constraints)

    def bracket_span(self, a: "Subspace", b: "Subspace") -> "Subspace":
        vecs = [self.bracket(u, v) for u in a.rows for v in b.rows]
        return Subspace(self.dim, vecs, self.constraints)

    def full_space(self) -> "Subspace":
        return Subspace(self.dim, linalg.identity(self.dim), self.constraints)

    def derived_series(self):
        chain = [self.full_space()]
        while True:
            nxt = self.bracket_span(chain[-1], chain[-1])
            if nxt.dim == chain[-1].dim:
                break
            chain.append(nxt)
            if nxt.dim == 0:
                break
        return chain

    def lower_central_series(self):
        chain = [self.full_space()]
        while True:
            nxt = self.bracket_span(self.full_space(), chain[-1])
            if nxt.dim == chain[-1].dim:
                break
            chain.append(nxt)
            if nxt.dim == 0:
                break
        return chain

    def is_solvable(self) -> bool:
        return self.derived_series()[-1].dim == 0

    def is_nilpotent(self) -> bool:
        return self.lower_central_series()[-1].dim == 0

    def subspace_predicates(self, sub: "Subspace"):
        """(is_subalgebra, is_ideal, is_abelian) for a subspace."""
        is_sub = True
        is_abel = True
        for a in range(len(sub.rows)):
            for b in range(a + 1, len(sub.rows)):
                w = self.bracket(sub.rows[a], sub.rows[b])
                if any(not c.is_zero for c in w):
                    is_abel = False
                if not sub.contains(w):
                    is_sub = False
        is_ideal = True
        for i in range(self.dim):
            for v in sub.rows:
                if not sub.contains(self.bracket(self.basis_vector(i), v)):
                    is_ideal = False
                    break
            if not is_ideal:
                break
        return is_sub, is_ideal, is_abel

    # -- constructions -------------------------------------------------------

    def quotient_by_central_line(self, z) -> "LieAlgebra":
        z = self.vector(z)
        if all(c.is_zero for c in z):
            raise ValueError("central vector must be nonzero")
        for j in range(self.dim):
            if any(not c.is_zero
                   for c in self.bracket(z, self.basis_vector(j))):
                raise ValueError("vector is not central")
        pivot = None
        for m in range(self.dim - 1, -1, -1):
            if z[m].is_rational and not z[m].is_zero:
                pivot = m
                break
        if pivot is None:
            raise RankInstability(next(c for c in z if not c.is_zero))
        keep = [i for i in range(self.dim) if i != pivot]
        pos = {old: new for new, old in enumerate(keep)}
        table = {}
        for a, i in enumerate(keep):
            for b, j in enumerate(keep):
                if i >= j:
                    continue
                w = list(self.bracket_basis(i, j))
                if not w[pivot].is_zero:
                    f = w[pivot] / z[pivot]
                    w = [c - f * zc for c, zc in zip(w, z)]
                for old, c in enumerate(w):
                    if old == pivot or c.is_zero:
                        continue
                    table[(a, b, pos[old])] = c
        return LieAlgebra([self.basis[i] for i in keep], table,
                          self.params, self.constraints)

    def restrict(self, sub: "Subspace", labels=None) -> "LieAlgebra":
        """Induced algebra on a subalgebra's basis (coordinates in sub's rows)."""
        k = len(sub.rows)
        if labels is None:
            labels = [f"u{i+1}" for i in range(k)]
        table = {}
        for a in range(k):
            for b in range(a + 1, k):
                w = self.bracket(sub.rows[a], sub.rows[b])
                coeffs = coords_in_span(sub.rows, w, self.constraints)
                if coeffs is None:
                    raise ValueError("subspace is not closed under the bracket")
                for c, val in enumerate(coeffs):
                    if not val.is_zero:
                        table[(a, b, c)] = val
        return LieAlgebra(labels, table, self.params, self.constraints)

    def specialize(self, sample) -> "LieAlgebra":
        """Substitute rational values for all parameters."""
        sample = {k: (v if isinstance(v, Fraction) else Fraction(v))
                  for k, v in sample.items()}
        missing = [p for p in self.params if p not in sample]
        if missing:
            raise ValueError(f"sample does not assign parameters {missing}")
        for c in self.constraints:
            if c.substitute(sample).is_zero:
                raise ValueError(
                    f"sample violates the nonvanishing constraint {c}")
        table = {key: c.substitute(sample) for key, c in self.constants.items()}
        return LieAlgebra(self.basis, table)

    # -- formatting --------------------------------------------------------

    def format_vector(self, v) -> str:
        parts = []
        for c, lbl in zip(v, self.basis):
            c = as_scalar(c)
            if c.is_zero:
                continue
            parts.append((c, lbl))
        if not parts:
            return "0"
        out = []
        for i, (c, lbl) in enumerate(parts):
            if c == ONE:
                body = lbl
                neg = False
            elif c == -ONE:
                body = lbl
                neg = True
            elif c.is_rational:
                f = c.as_fraction()
                neg = f < 0
                body = f"{abs(f)} {lbl}"
            else:
                neg = False
                body = f"({c}) {lbl}"
            if i == 0:
                out.append(("-" if neg else "") + body)
            else:
                out.append((" - " if neg else " + ") + body)
        return "".join(out)

    def index_of(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise ValueError(f"unknown basis label '{label}'") from None

    def __repr__(self):
        return f"<LieAlgebra dim={self.dim} basis=({','.join(self.basis)})>"


def _vadd(a, b):
    return tuple(x + y for x, y in zip(a, b))


def coords_in_span(rows, w, constraints=()):
    """Coefficients expressing w as a combination of the given row vectors,
    or None when w is outside their span."""
    if not rows:
        return None if any(not as_scalar(c).is_zero for c in w) else ()
    n = len(rows[0])
    k = len(rows)
    mat = [[rows[j][i] for j in range(k)] for i in range(n)]
    # least-squares-free exact solve: the stacked system is overdetermined
    aug = [mat[i] + [as_scalar(w[i])] for i in range(n)]
    if linalg.is_rational_matrix(aug):
        red, pivots = linalg.rref(aug)
    else:
        red, pivots = linalg.echelon(aug, constraints)
    if k in pivots:
        return None
    x = [ZERO] * k
    for i in range(len(red) - 1, -1, -1):
        c = pivots[i]
        s = red[i][k]
        for j in range(c + 1, k):
            s = s - red[i][j] * x[j]
        piv = red[i][c]
        if not piv.is_rational:
            raise RankInstability(piv)
        x[c] = s / piv
    return tuple(x)


class Subspace:
    """Subspace of coordinate space, canonicalized for equality testing."""

    def __init__(self, ambient, vectors, constraints=()):
        self.ambient = ambient
        self.constraints = tuple(constraints)
        rows = [[as_scalar(c) for c in v] for v in vectors]
        rows = [r for r in rows if any(not c.is_zero for c in r)]
        if not rows:
            self.rows = ()
        elif linalg.is_rational_matrix(rows):
            red, _ = linalg.rref(rows)
            self.rows = tuple(tuple(r) for r in red)
        else:
            red, _ = linalg.echelon(rows, self.constraints)
            self.rows = tuple(tuple(linalg._content_normalize(r)) for r in red)

    @property
    def dim(self) -> int:
        return len(self.rows)

    def contains(self, v) -> bool:
        v = [as_scalar(c) for c in v]
        if all(c.is_zero for c in v):
            return True
        if not self.rows:
            return False
        stacked = [list(r) for r in self.rows] + [v]
        return linalg.rank(stacked, self.constraints) == self.dim

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(r) for r in other.rows)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        if self.ambient != other.ambient or self.dim != other.dim:
            return False
        if self.rows == other.rows:
            return True
        return self.contains_subspace(other) and other.contains_subspace(self)

    def __hash__(self):
        return hash((self.ambient, self.rows))

    def __repr__(self):
        return f"<Subspace dim={self.dim} of R^{self.ambient}>"


# ----------------------------------------------------------------------
# weighted-sum parsing shared by bracket right-hand sides and 1-forms
# ----------------------------------------------------------------------

def weighted_terms(text: str, params=()):
    """Parse a Scalar-weighted sum of labels into [(Scalar, label), ...].

    Terms look like 'e1', '2 e2', '1/2 e2', '(1+p) e1', 't e5', '-e3';
    consecutive scalar factors multiply, labels may carry a trailing '*'
    which is kept verbatim, and a bare scalar '0' is allowed.
    """
    toks = _weighted_tokens(text, params)
    terms = []
    sign = 1
    i, n = 0, len(toks)
    while i < n:
        kind, val = toks[i]
        if kind == "op":
            sign = sign if val == "+" else -sign
            i += 1
            continue
        coeff = ONE
        label = None
        while i < n and toks[i][0] == "scalar":
            coeff = coeff * toks[i][1]
            i += 1
        if i < n and toks[i][0] == "label":
            label = toks[i][1]
            i += 1
        if label is None and not coeff.is_zero:
            raise ValueError(f"dangling coefficient in {text!r}")
        if label is not None:
            terms.append((coeff if sign == 1 else -coeff, label))
        sign = 1
    return terms


def _weighted_tokens(text, params):
    params = frozenset(params)
    toks = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch in "+-":
            toks.append(("op", ch))
            i += 1
        elif ch == "(":
            depth = 0
            j = i
            while j < n:
                if text[j] == "(":
                    depth += 1
                elif text[j] == ")":
                    depth -= 1
                    if depth == 0:
                        break
                j += 1
            if depth != 0:
                raise ValueError(f"unbalanced parentheses in {text!r}")
            toks.append(("scalar", parse_scalar(text[i:j + 1], params)))
            i = j + 1
        elif ch.isdigit():
            j = i
            while j < n and (text[j].isdigit() or text[j] == "/"):
                j += 1
            toks.append(("scalar", parse_scalar(text[i:j], params)))
            i = j
        elif ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            name = text[i:j]
            if j < n and text[j] == "*":
                toks.append(("label", name + "*"))
                j += 1
            elif name in params:
                toks.append(("scalar", Scalar.variable(name)))
            else:
                toks.append(("label", name))
            i = j
        else:
            raise ValueError(f"unexpected character {ch!r} in {text!r}")
    return toks


def parse_vector(text: str, alg: LieAlgebra):
    """Parse a Scalar-weighted sum of basis labels, e.g. 'e4 + t e5', '-2 e1'."""
    out = [ZERO] * alg.dim
    for coeff, label in weighted_terms(text, alg.params):
        if label.endswith("*"):
            raise ValueError(f"covector label {label!r} in a vector expression")
        k = alg.index_of(label)
        out[k] = out[k] + coeff
    return tuple(out)


# ----------------------------------------------------------------------
# convenience builders
# ----------------------------------------------------------------------

def algebra(basis, brackets, params=(), constraints=()) -> LieAlgebra:
    """Build a LieAlgebra from label-keyed bracket data.

    basis: "e1 e2 e3" or a sequence of labels.
    brackets: {"e1 e2": "e3 + t e5", ...}; unlisted pairs vanish.
    params: "p q" or a sequence; constraints: scalar expressions required nonzero.
    """
    if isinstance(basis, str):
        basis = basis.split()
    if isinstance(params, str):
        params = params.split()
    params = tuple(params)
    if isinstance(constraints, str):
        constraints = [constraints]
    cons = [parse_scalar(c, params) if isinstance(c, str) else as_scalar(c)
            for c in constraints]
    skeleton = LieAlgebra(basis, {}, params, cons)
    table = {}
    for key, rhs in brackets.items():
        if isinstance(key, str):
            la, lb = key.split()
        else:
            la, lb = key
        i, j = skeleton.index_of(la), skeleton.index_of(lb)
        if i == j:
            raise ValueError(f"bracket of {la} with itself")
        v = parse_vector(rhs, skeleton) if isinstance(rhs, str) else skeleton.vector(rhs)
        sign = 1
        if i > j:
            i, j, sign = j, i, -1
        for k, c in enumerate(v):
            if not c.is_zero:
                prev = table.get((i, j, k), ZERO)
                table[(i, j, k)] = prev + (c if sign == 1 else -c)
    return LieAlgebra(basis, table, params, cons)


def direct_sum(a: LieAlgebra, b: LieAlgebra) -> LieAlgebra:
    """Block-diagonal sum; colliding labels from b are suffixed."""
    labels = list(a.basis)
    used = set(labels)
    for lbl in b.basis:
        new = lbl
        n = 2
        while new in used:
            new = f"{lbl}_{n}"
            n += 1
        labels.append(new)
        used.add(new)
    table = dict(a.constants)
    off = a.dim
    for (i, j, k), c in b.constants.items():
        table[(i + off, j + off, k + off)] = c
    return LieAlgebra(labels, table, a.params + b.params,
                      a.constraints + b.constraints)


def opposite(a: LieAlgebra) -> LieAlgebra:
    return LieAlgebra(a.basis, {k: -c for k, c in a.constants.items()},
                      a.params, a.constraints)


def permute_basis(a: LieAlgebra, order) -> LieAlgebra:
    """Reorder the basis: new basis position k holds old basis vector order[k]."""
    if sorted(order) != list(range(a.dim)):
        raise ValueError("not a permutation of the basis indices")
    pos = {old: new for new, old in enumerate(order)}
    table = {}
    for (i, j, k), c in a.constants.items():
        ni, nj, nk = pos[i], pos[j], pos[k]
        if ni > nj:
            ni, nj, c = nj, ni, -c
        table[(ni, nj, nk)] = c
    return LieAlgebra([a.basis[i] for i in order], table, a.params, a.constraints)


def change_basis(a: LieAlgebra, columns) -> LieAlgebra:
    """Express the algebra in a new basis given by coordinate column vectors."""
    n = a.dim
    cols = [a.vector(c) for c in columns]
    if len(cols) != n:
        raise ValueError("need exactly dim basis vectors")
    mat = [[cols[j][i] for j in range(n)] for i in range(n)]
    table = {}
    for i in range(n):
        for j in range(i + 1, n):
            w = a.bracket(cols[i], cols[j])
            coeffs = linalg.solve(mat, list(w), a.constraints)
            for k, c in enumerate(coeffs):
                if not c.is_zero:
                    table[(i, j, k)] = c
    return LieAlgebra(a.basis, table, a.params, a.constraints)

"""Built-in library of named algebras: the golden-test corpus.

Brackets and claimed forms follow the source tables verbatim, in their
original basis order; construction-convention remaps (new vector last)
are stored as explicit permutations per entry.  Two printed tables in the
7-dimensional list fail the Jacobi identity as typeset and are corrected
here (see the entry notes): the second sl(2) module carries one flipped
sign, and the so(3) semidirect product is realized by quaternion left
multiplication, which reproduces all four claimed contact covectors.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .forms import parse_one_form
from .liealg import LieAlgebra, algebra
from .scalar import Scalar


@dataclass
class CatalogEntry:
    ident: str
    algebra: LieAlgebra
    contact_forms: tuple = ()         # claimed contact 1-forms
    frobenius_forms: tuple = ()       # claimed exact-symplectic 1-forms
    samples: tuple = ()               # parameter samples on the allowed locus
    excluded_samples: tuple = ()      # samples violating a stated constraint
    flags: frozenset = frozenset()    # solvable / nilpotent / nondecomposable
    description: str = ""
    notes: str = ""
    liouville: tuple = None           # expected Liouville vector, when pinned
    basis_permutation: tuple = None   # construction order -> table order

    @property
    def dim(self):
        return self.algebra.dim

    def sample_algebras(self):
        """Concrete specializations at every stored allowed sample."""
        if not self.algebra.params:
            return [(None, self.algebra)]
        return [(s, self.algebra.specialize(s)) for s in self.samples]


def _entry(ident, alg, contact=(), frobenius=(), samples=(), excluded=(),
           flags=(), description="", notes="", liouville=None, perm=None):
    forms_c = tuple(parse_one_form(t, alg) for t in contact)
    forms_f = tuple(parse_one_form(t, alg) for t in frobenius)
    samp = tuple({k: Fraction(v) for k, v in s.items()} for s in samples)
    exc = tuple({k: Fraction(v) for k, v in s.items()} for s in excluded)
    liou = tuple(alg.vector(liouville)) if liouville is not None else None
    return CatalogEntry(ident, alg, forms_c, forms_f, samp, exc,
                        frozenset(flags), description, notes, liou, perm)


SOLV = ("solvable",)
NILP = ("solvable", "nilpotent")
SOLV_ND = ("solvable", "nondecomposable")
NILP_ND = ("solvable", "nilpotent", "nondecomposable")


# ----------------------------------------------------------------------
# generators
# ----------------------------------------------------------------------

def gen_heisenberg(m: int) -> CatalogEntry:
    """H_{2m+1}: m dual pairs hitting a 1-dimensional center."""
    n = 2 * m + 1
    basis = [f"e{i+1}" for i in range(n)]
    brackets = {f"e{2*i+1} e{2*i+2}": f"e{n}" for i in range(m)}
    alg = algebra(basis, brackets)
    return _entry(f"heisenberg.{n}", alg, contact=(f"e{n}*",),
                  flags=NILP_ND, description=f"Heisenberg algebra H_{n}")


def _unit_matrix(size, i, j):
    m = [[Fraction(0)] * size for _ in range(size)]
    m[i][j] = Fraction(1)
    return m


def _commutator(a, b):
    size = len(a)
    ab = [[sum(a[i][k] * b[k][j] for k in range(size)) for j in range(size)]
          for i in range(size)]
    ba = [[sum(b[i][k] * a[k][j] for k in range(size)) for j in range(size)]
          for i in range(size)]
    return [[ab[i][j] - ba[i][j] for j in range(size)] for i in range(size)]


def _matrix_lie_algebra(labels, mats, coords_of) -> LieAlgebra:
    """Lie algebra of explicit matrices; coords_of reads coordinates back off
    a commutator (raising if it leaves the span)."""
    table = {}
    for i in range(len(mats)):
        for j in range(i + 1, len(mats)):
            coords = coords_of(_commutator(mats[i], mats[j]))
            for k, c in enumerate(coords):
                if c:
                    table[(i, j, k)] = Scalar.rational(c)
    return LieAlgebra(labels, table)


def gen_aff(n: int) -> CatalogEntry:
    """aff(R^n) = R^n + gl(n) with the principal-nilpotent Frobenius covector.

    Basis: translations t1..tn, then matrix units E11..Enn row-major,
    realized as (n+1)x(n+1) matrices with the translation column last.
    alpha = t1* + sum of subdiagonal duals; the Liouville vector is the
    diagonal matrix diag(-1, ..., -n).
    """
    if n < 1:
        raise ValueError("n >= 1")
    size = n + 1
    labels = [f"t{i+1}" for i in range(n)]
    mats = [_unit_matrix(size, i, n) for i in range(n)]
    for i in range(n):
        for j in range(n):
            labels.append(f"E{i+1}{j+1}")
            mats.append(_unit_matrix(size, i, j))

    def coords_of(c):
        if any(c[n][j] for j in range(size)):
            raise AssertionError("commutator left the affine algebra")
        return [c[i][n] for i in range(n)] + \
               [c[i][j] for i in range(n) for j in range(n)]

    alg = _matrix_lie_algebra(labels, mats, coords_of)
    alpha = "t1*" + "".join(f" + E{i+2}{i+1}*" for i in range(n - 1))
    liou = [0] * len(labels)
    for i in range(n):
        liou[n + i * n + i] = -(i + 1)
    return _entry(f"affn.{n}", alg, frobenius=(alpha,),
                  flags=SOLV + ("nondecomposable",) if n == 1 else ("nondecomposable",),
                  description=f"affine algebra of R^{n} with Frobenius covector",
                  liouville=liou)


def gen_matrix_affine(n: int, p: int) -> CatalogEntry:
    """M_{n,p} + gl(n): n x p matrices under left multiplication by gl(n),
    realized as (n+p)x(n+p) matrices with zero last p rows."""
    size = n + p
    labels = [f"t{i+1}{j+1}" for i in range(n) for j in range(p)]
    mats = [_unit_matrix(size, i, n + j) for i in range(n) for j in range(p)]
    for a in range(n):
        for b in range(n):
            labels.append(f"E{a+1}{b+1}")
            mats.append(_unit_matrix(size, a, b))

    def coords_of(c):
        if any(c[i][j] for i in range(n, size) for j in range(size)):
            raise AssertionError("commutator left the algebra")
        return [c[i][n + j] for i in range(n) for j in range(p)] + \
               [c[a][b] for a in range(n) for b in range(n)]

    alg = _matrix_lie_algebra(labels, mats, coords_of)
    return _entry(f"mnp.{n}.{p}", alg,
                  flags=("nondecomposable",),
                  description=f"M_{{{n},{p}}} semidirect gl({n})")


def gen_matrix_preserving(n: int, p: int) -> CatalogEntry:
    """Endomorphisms of R^n preserving a p-dim subspace, homothety on it.

    Basis: h (identity on the preserved block), the mixed block E_ij with
    i <= p < j, then the complementary gl(n-p) block.  The computed
    dimension is n(n-p)+1; the contact claim applies when p divides n.
    """
    if not (1 <= p <= n - 1):
        raise ValueError("need 1 <= p <= n-1")
    labels = ["h"]
    h = [[Fraction(1 if (i == j and i < p) else 0) for j in range(n)]
         for i in range(n)]
    mats = [h]
    mixed = [(i, j) for i in range(p) for j in range(p, n)]
    block = [(i, j) for i in range(p, n) for j in range(p, n)]
    for (i, j) in mixed + block:
        labels.append(f"E{i+1}{j+1}")
        mats.append(_unit_matrix(n, i, j))

    def coords_of(c):
        lam = c[0][0]
        for k in range(p):
            for l in range(p):
                if c[k][l] != (lam if k == l else 0):
                    raise AssertionError("preserved block is not a homothety")
        if any(c[i][j] for i in range(p, n) for j in range(p)):
            raise AssertionError("commutator does not preserve the subspace")
        return [lam] + [c[i][j] for (i, j) in mixed + block]

    alg = _matrix_lie_algebra(labels, mats, coords_of)
    divisible = n % p == 0
    return _entry(f"matrix.{n}.{p}", alg,
                  flags=("nondecomposable",),
                  description=f"endomorphisms of R^{n} preserving a {p}-plane "
                              f"(homothety restriction); p|n: {divisible}",
                  notes="contact claim applies exactly when p divides n")


def gen_Gt(t) -> CatalogEntry:
    """Member of the 7-dimensional nilpotent family at a rational parameter."""
    base = get("dim7.Gt")
    t = Fraction(t)
    alg = base.algebra.specialize({"t": t})
    return _entry(f"dim7.Gt[{t}]", alg, contact=("e7*",), flags=NILP_ND,
                  description=f"nilpotent 7-dim family member at t={t}")


def gen_rn_id(n: int) -> CatalogEntry:
    """R^n with a complementary line acting as the identity."""
    basis = [f"e{i+1}" for i in range(n + 1)]
    brackets = {f"e{i+1} e{n+1}": f"-e{i+1}" for i in range(n)}
    alg = algebra(basis, brackets)
    return _entry(f"rnid.{n}", alg, flags=SOLV + ("nondecomposable",),
                  description=f"R^{n} + line acting as identity "
                              "(rank-one bracket family)")


# ----------------------------------------------------------------------
# the 5-dimensional nondecomposable solvable list
# ----------------------------------------------------------------------
# item number -> (brackets, eta, params, constraints, samples, excluded, notes)

_DIM5_TABLE = {
    1: (dict([("e2 e4", "e1"), ("e3 e5", "e1")]), "e1*",
        "", (), (), (), ""),
    2: (dict([("e3 e4", "e1"), ("e2 e5", "e1"), ("e3 e5", "e2")]), "e1*",
        "", (), (), (), ""),
    3: (dict([("e3 e4", "e1"), ("e2 e5", "e1"), ("e3 e5", "e2"),
              ("e4 e5", "e3")]), "e1*", "", (), (), (), ""),
    4: (dict([("e2 e3", "e1"), ("e1 e5", "(1+p) e1"), ("e2 e5", "e2"),
              ("e3 e5", "p e3"), ("e4 e5", "q e4")]), "e1* + e4*",
        "p q", ("q", "p+1-q"),
        ({"p": 1, "q": 1}, {"p": 2, "q": 1}, {"p": -2, "q": 3}),
        ({"p": 1, "q": 2},), "excluded sample sits on q = p+1"),
    5: (dict([("e2 e3", "e1"), ("e1 e5", "(1+p) e1"), ("e2 e5", "e2"),
              ("e3 e5", "p e3"), ("e4 e5", "e1 + (1+p) e4")]), "e1*",
        "p", (), ({"p": 0}, {"p": 1}, {"p": -2}), (), ""),
    6: (dict([("e2 e3", "e1"), ("e1 e5", "2 e1"), ("e2 e5", "e2 + e3"),
              ("e3 e5", "e3 + e4"), ("e4 e5", "e4")]), "e1* + e4*",
        "", (), (), (), ""),
    7: (dict([("e2 e3", "e1"), ("e2 e5", "e3"), ("e4 e5", "e4")]),
        "e1* + e4*", "", (), (), (), ""),
    8: (dict([("e2 e3", "e1"), ("e1 e5", "2 e1"), ("e2 e5", "e2 + e3"),
              ("e3 e5", "e3"), ("e4 e5", "p e4")]), "e1* + e4*",
        "p", ("p", "p-2"),
        ({"p": 1}, {"p": -1}, {"p": 3}),
        ({"p": 2}, {"p": 0}),
        "form degenerates at p=2; p=0 is excluded structurally only"),
    9: (dict([("e2 e3", "e1"), ("e1 e5", "2 e1"), ("e2 e5", "e2 + e3"),
              ("e3 e5", "e3"), ("e4 e5", "eps e1 + 2 e4")]), "e1*",
        "", (), (), (), "sign eps = +/-1 expanded into twin entries"),
    10: (dict([("e2 e3", "e1"), ("e1 e5", "2 p e1"), ("e2 e5", "p e2 + e3"),
               ("e3 e5", "-e2 + p e3"), ("e4 e5", "q e4")]), "e1* + e4*",
         "p q", ("q - 2*p", "q"),
         ({"p": 1, "q": 1}, {"p": 0, "q": 1}, {"p": 2, "q": -1}),
         ({"p": 1, "q": 2}, {"p": 1, "q": 0}),
         "form degenerates at q = 2p; q=0 is excluded structurally only"),
    11: (dict([("e2 e3", "e1"), ("e1 e5", "2 p e1"), ("e2 e5", "p e2 + e3"),
               ("e3 e5", "-e2 + p e3"), ("e4 e5", "eps e1 + 2 p e4")]), "e1*",
         "p", (), ({"p": 0}, {"p": 1}, {"p": -1}), (),
         "sign eps = +/-1 expanded into twin entries"),
    12: (dict([("e2 e3", "e1"), ("e1 e5", "e1"), ("e3 e5", "e3 + e4"),
               ("e4 e5", "e1 + e4")]), "e1*", "", (), (), (), ""),
    13: (dict([("e2 e3", "e1"), ("e1 e5", "(1+p) e1"), ("e2 e5", "p e2"),
               ("e3 e5", "e3 + e4"), ("e4 e5", "e4")]), "e1* + e4*",
         "p", ("p",), ({"p": 1}, {"p": -1}, {"p": 2}), ({"p": 0},),
         "excluded sample sits on p = 0"),
    14: (dict([("e2 e3", "e1"), ("e1 e5", "e1"), ("e2 e5", "e2"),
               ("e3 e5", "e4")]), "e1* + e4*", "", (), (), (), ""),
    15: (dict([("e2 e4", "e1"), ("e3 e4", "e2"), ("e1 e5", "(2+p) e1"),
               ("e2 e5", "(1+p) e2"), ("e3 e5", "p e3"), ("e4 e5", "e4")]),
         "e1* + e3*", "p", (), ({"p": 0}, {"p": 1}, {"p": -1}), (),
         "stated covector mixes a vector into the sum; the dual reading "
         "e1* + e3* verifies (top coefficient 4, parameter-free)"),
    16: (dict([("e2 e4", "e1"), ("e3 e4", "e2"), ("e1 e5", "3 e1"),
               ("e2 e5", "2 e2"), ("e3 e5", "e3"), ("e4 e5", "e3 + e4")]),
         "e1* + e2*", "", (), (), (), ""),
    17: (dict([("e2 e4", "e1"), ("e3 e4", "e2"), ("e1 e5", "e1"),
               ("e2 e5", "e2"), ("e3 e5", "p e1 + e3")]),
         "e1* + (1-p) e3*", "p", (),
         ({"p": 1}, {"p": -1}, {"p": 3}), (),
         "form additionally degenerates on the unstated locus p = 0"),
    18: (dict([("e1 e4", "e1"), ("e3 e4", "p e3"), ("e2 e5", "e2"),
               ("e3 e5", "q e3")]), "e1* + e2* + e3*",
         "p q", ("p^2 + q^2", "p + q - 1"),
         ({"p": 1, "q": 1}, {"p": 2, "q": 0}, {"p": 0, "q": 2}),
         ({"p": 0, "q": 1}, {"p": 0, "q": 0}),
         "the p+q=1 exclusion is exact; (0,0) degenerates structurally only"),
    19: (dict([("e1 e4", "p e1"), ("e2 e4", "e2"), ("e3 e4", "e3"),
               ("e1 e5", "e1"), ("e3 e5", "e2")]), "e1* + e2*",
         "p", ("p - 1",), ({"p": 2}, {"p": 3}, {"p": -1}), ({"p": 1},),
         "form additionally degenerates on the unstated locus p = 0"),
    20: (dict([("e1 e4", "p e1"), ("e2 e4", "e2"), ("e3 e4", "e3"),
               ("e1 e5", "q e1"), ("e2 e5", "-e3"), ("e3 e5", "e2")]),
         "e1* + e2*", "p q", ("p^2 + q^2", "p - 1"),
         ({"p": 2, "q": 2}, {"p": 0, "q": 2}, {"p": 3, "q": -1}),
         ({"p": 1, "q": 2}, {"p": 0, "q": 0}),
         "form additionally degenerates on the unstated locus p+q = 1"),
    21: (dict([("e2 e3", "e1"), ("e1 e4", "e1"), ("e2 e4", "e2"),
               ("e2 e5", "-e2"), ("e3 e5", "e3")]), "e1* + e5*",
         "", (), (), (), ""),
    22: (dict([("e2 e3", "e1"), ("e1 e4", "2 e1"), ("e2 e4", "e2"),
               ("e3 e4", "e3"), ("e2 e5", "-e3"), ("e3 e5", "e2")]),
         "e1* + e5*", "", (), (), (), ""),
    23: (dict([("e1 e4", "e1"), ("e2 e5", "e2"), ("e4 e5", "e3")]),
         "e1* + e2* + e3*", "", (), (), (), ""),
    24: (dict([("e1 e4", "e1"), ("e2 e4", "e2"), ("e1 e5", "-e2"),
               ("e2 e5", "e1"), ("e4 e5", "e3")]), "e1* + e3*",
         "", (), (), (), ""),
}

_DIM5_NILPOTENT = {1, 2, 3}


def dim5_items():
    """Item number -> tuple of entry identifiers (twin entries for eps)."""
    out = {}
    for num in _DIM5_TABLE:
        if num in (9, 11):
            out[num] = (f"dim5.solv.{num:02d}a", f"dim5.solv.{num:02d}b")
        else:
            out[num] = (f"dim5.solv.{num:02d}",)
    return out


def _dim5_entries():
    basis = "e1 e2 e3 e4 e5"
    entries = []
    for num, (brackets, eta, params, cons, samples, excluded, notes) in \
            sorted(_DIM5_TABLE.items()):
        flags = NILP_ND if num in _DIM5_NILPOTENT else SOLV_ND
        desc = f"nondecomposable solvable, dim 5, item {num}"
        has_eps = any("eps" in v for v in brackets.values())
        if has_eps:
            # twin entries for the sign eps = +/- 1
            for tag, eps in (("a", "1"), ("b", "-1")):
                bk = {k: v.replace("eps", f"({eps})") for k, v in brackets.items()}
                alg = algebra(basis, bk, params=params, constraints=cons)
                entries.append(_entry(f"dim5.solv.{num:02d}{tag}", alg,
                                      contact=(eta,), samples=samples,
                                      excluded=excluded, flags=flags,
                                      description=desc + f" (eps={eps})",
                                      notes=notes))
        else:
            alg = algebra(basis, brackets, params=params, constraints=cons)
            entries.append(_entry(f"dim5.solv.{num:02d}", alg, contact=(eta,),
                                  samples=samples, excluded=excluded,
                                  flags=flags, description=desc, notes=notes))
    return entries


# ----------------------------------------------------------------------
# registry
# ----------------------------------------------------------------------

@lru_cache(maxsize=1)
def _registry():
    entries = []

    # dimension 1-3 basics
    entries.append(_entry("abelian.1", algebra("e1", {}),
                          contact=("e1*",), flags=SOLV + ("nilpotent",),
                          description="abelian line (trivially contact)"))
    for n in range(2, 7):
        entries.append(_entry(
            f"abelian.{n}", algebra(" ".join(f"e{i+1}" for i in range(n)), {}),
            flags=NILP, description=f"abelian R^{n}"))

    entries.append(_entry(
        "aff.1", algebra("e1 e2", {"e1 e2": "e2"}),
        frobenius=("e2*",), flags=SOLV + ("nondecomposable",),
        description="affine line algebra [e1,e2]=e2",
        liouville=(-1, 0)))

    entries.append(_entry(
        "sl2", algebra("h x y", {"h x": "2 x", "h y": "-2 y", "x y": "h"}),
        contact=("h*",), flags=("nondecomposable",),
        description="sl(2): split 3-dim simple"))
    entries.append(_entry(
        "so3", algebra("e1 e2 e3",
                       {"e1 e2": "e3", "e2 e3": "e1", "e1 e3": "-e2"}),
        contact=("e1*",), flags=("nondecomposable",),
        description="so(3): compact 3-dim simple"))

    entries.append(gen_heisenberg(1))   # heisenberg.3
    entries.append(gen_heisenberg(2))   # heisenberg.5
    entries.append(gen_heisenberg(3))   # heisenberg.7

    entries.append(_entry(
        "dim3.r2_id", gen_rn_id(2).algebra, flags=SOLV + ("nondecomposable",),
        description="R^2 + identity line: the non-contact 3-dim exception"))
    entries.append(_entry(
        "dim3.r2_rot",
        algebra("e1 e2 e3", {"e1 e3": "-e1 - e2", "e2 e3": "e1 - e2"}),
        contact=("e1*",), flags=SOLV + ("nondecomposable",),
        description="R^2 + rotation-like line (no real eigenvalue)"))
    entries.append(_entry(
        "dim3.r2_diag",
        algebra("e1 e2 e3", {"e1 e3": "-e1", "e2 e3": "-(lam) e2"},
                params="lam", constraints=("lam - 1",)),
        contact=("e1* + e2*",),
        samples=({"lam": 0}, {"lam": 2}, {"lam": -3}),
        excluded=({"lam": 1},),
        flags=SOLV + ("nondecomposable",),
        description="R^2 + diag(1, lam) line",
        notes="lam = 1 is the identity action: the non-contact exception"))
    entries.append(_entry(
        "dim3.e2",
        algebra("e1 e2 e3", {"e1 e3": "-e2", "e2 e3": "e1"}),
        contact=("e1*",), flags=SOLV + ("nondecomposable",),
        description="euclidean motions E(2)"))

    # dimension 4 exact symplectic bases used by the constructions
    entries.append(_entry(
        "dim4.frob.special",
        algebra("e1 e2 e3 e4",
                {"e1 e4": "-e1", "e2 e3": "-e1", "e2 e4": "e2",
                 "e3 e4": "-2 e3"}),
        frobenius=("e1*",), flags=SOLV + ("nondecomposable",),
        description="exact symplectic base of the special affine 5-dim algebra",
        liouville=(0, 0, 0, -1)))
    entries.append(_entry(
        "dim4.frob.goze",
        algebra("e1 e2 e3 e4",
                {"e1 e2": "e3", "e1 e4": "-e1", "e3 e4": "-e3"}),
        frobenius=("e3*",), flags=SOLV + ("nondecomposable",),
        description="Heisenberg extension with exact symplectic covector"))

    entries.extend(_dim5_entries())

    # dimension 5 nonsolvable
    entries.append(_entry(
        "dim5.aff_sl2",
        algebra("a1 a2 h x y",
                {"a1 a2": "a2", "h x": "2 x", "h y": "-2 y", "x y": "h"}),
        contact=("a2* + h*",), flags=(),
        description="aff(R) + sl(2) (decomposable nonsolvable)"))
    entries.append(_entry(
        "dim5.aff_so3",
        algebra("a1 a2 r1 r2 r3",
                {"a1 a2": "a2", "r1 r2": "r3", "r2 r3": "r1", "r1 r3": "-r2"}),
        contact=("a2* + r1*",), flags=(),
        description="aff(R) + so(3) (decomposable nonsolvable)"))
    entries.append(_entry(
        "dim5.r2_sl2",
        algebra("e1 e2 X Y H",
                {"e1 Y": "-e2", "e1 H": "-e1", "e2 X": "-e1", "e2 H": "e2",
                 "X Y": "H", "X H": "-2 X", "Y H": "2 Y"},
                params="s", constraints=("s",)),
        contact=("e1* + s Y*",),
        samples=({"s": 1}, {"s": -1}, {"s": 2}),
        excluded=({"s": 0},),
        flags=("nondecomposable",),
        description="special affine R^2 + sl(2) with its scale family of "
                    "contact forms",
        notes="algebra itself is parameter-free; s only scales the form",
        perm=(0, 1, 2, 4, 3)))

    # dimension 7
    entries.append(_entry(
        "dim7.Gt",
        algebra("e1 e2 e3 e4 e5 e6 e7",
                {"e1 e4": "e7", "e2 e5": "e7", "e3 e6": "e7",
                 "e1 e2": "e4 + t e5", "e1 e3": "e6", "e2 e3": "e5"},
                params="t"),
        contact=("e7*",),
        samples=({"t": -2}, {"t": 0}, {"t": 1}, {"t": 5}),
        flags=NILP_ND,
        description="7-dim nilpotent family, pairwise non-isomorphic in t"))
    entries.append(_entry(
        "dim7.sl2.a",
        algebra("e1 e2 e3 e4 e5 e6 e7",
                {"e1 e2": "2 e2", "e1 e3": "-2 e3", "e2 e3": "e1",
                 "e1 e4": "3 e4", "e2 e5": "3 e4", "e3 e4": "e5",
                 "e1 e5": "e5", "e2 e6": "2 e5", "e3 e5": "2 e6",
                 "e1 e6": "-e6", "e2 e7": "e6", "e3 e6": "3 e7",
                 "e1 e7": "-3 e7"}),
        contact=("e5* + e7*",), flags=("nondecomposable",),
        description="R^4 + sl(2), weight-3 module"))
    entries.append(_entry(
        "dim7.sl2.b",
        algebra("e1 e2 e3 e4 e5 e6 e7",
                {"e1 e2": "2 e2", "e1 e3": "-2 e3", "e2 e3": "e1",
                 "e1 e4": "e4", "e2 e5": "e4", "e3 e4": "e5", "e1 e5": "-e5",
                 "e1 e6": "e6", "e2 e7": "e6", "e3 e6": "e7", "e1 e7": "-e7"}),
        contact=("e4* + e7*",), flags=("nondecomposable",),
        description="R^4 + sl(2), two weight-1 modules",
        notes="printed table has [e2,e7] = -e6, which breaks the Jacobi "
              "identity; the sign is corrected here"))
    entries.append(_entry(
        "dim7.so3.mixed",
        algebra("e1 e2 e3 e4 e5 e6 e7",
                {"e1 e2": "e3", "e2 e3": "e1", "e1 e3": "-e2",
                 "e1 e5": "e6", "e2 e4": "-e6", "e3 e4": "e5",
                 "e1 e6": "-e5", "e2 e6": "e4", "e3 e5": "-e4",
                 "e4 e7": "e4", "e5 e7": "e5", "e6 e7": "e6"}),
        contact=("e1* + e4*",), flags=("nondecomposable",),
        description="so(3)-module with a scaling direction"))
    entries.append(_entry(
        "dim7.so3.semidirect",
        algebra("e1 e2 e3 e4 e5 e6 e7",
                {"e1 e2": "e3", "e2 e3": "e1", "e1 e3": "-e2",
                 "e1 e4": "1/2 e5", "e1 e5": "-1/2 e4",
                 "e1 e6": "1/2 e7", "e1 e7": "-1/2 e6",
                 "e2 e4": "1/2 e6", "e2 e5": "-1/2 e7",
                 "e2 e6": "-1/2 e4", "e2 e7": "1/2 e5",
                 "e3 e4": "1/2 e7", "e3 e5": "1/2 e6",
                 "e3 e6": "-1/2 e5", "e3 e7": "-1/2 e4"}),
        contact=("e4*", "e5*", "e6*", "e7*"), flags=("nondecomposable",),
        description="R^4 + so(3) by quaternion left multiplication; "
                    "four independent contact covectors",
        notes="printed table fails the Jacobi identity (all-positive signs); "
              "realized here by half-scaled quaternion multiplication, which "
              "verifies every claimed covector"))

    # generated families
    entries.append(gen_aff(1))
    entries.append(gen_aff(2))
    entries.append(gen_aff(3))
    entries.append(gen_matrix_preserving(2, 1))
    entries.append(gen_matrix_preserving(3, 1))
    entries.append(gen_matrix_preserving(3, 2))
    entries.append(gen_matrix_affine(2, 2))

    # obstruction specimens
    from .liealg import direct_sum as _ds
    h3 = algebra("e1 e2 e3", {"e1 e2": "e3"})
    r2 = algebra("f1 f2", {})
    entries.append(_entry(
        "obstruct.h3r2", _ds(h3, r2), flags=NILP,
        description="H_3 + R^2: center of dimension 3 blocks contact"))
    entries.append(_entry(
        "obstruct.scalar_n22",
        algebra("e1 e2 e3 e4 e5",
                {"e2 e3": "e1", "e1 e5": "-e1", "e2 e5": "-1/2 e2",
                 "e3 e5": "-1/2 e3", "e4 e5": "-e4"}),
        flags=SOLV + ("nondecomposable",),
        description="N_{2,2} extension acting as a scalar on Z(N): "
                    "blocked by the eigenspace criterion"))
    entries.append(_entry(
        "obstruct.zdim3",
        algebra("e1 e2 e3 e4 e5 e6 e7",
                {"e2 e4": "e1", "e3 e4": "e2",
                 "e1 e7": "-3 e1", "e2 e7": "-2 e2", "e3 e7": "-e3",
                 "e4 e7": "-e4", "e5 e7": "-e5", "e6 e7": "-e6"}),
        flags=SOLV + ("nondecomposable",),
        description="graded extension of N_{1,1} + R^2: Z(N) has dimension 3, "
                    "blocking contact"))

    reg = {}
    for e in entries:
        if e.ident in reg:
            raise AssertionError(f"duplicate catalog identifier {e.ident}")
        reg[e.ident] = e
    return reg


def get(ident: str) -> CatalogEntry:
    reg = _registry()
    try:
        return reg[ident]
    except KeyError:
        raise KeyError(f"unknown catalog identifier {ident!r}") from None


def identifiers():
    return sorted(_registry())


def entries(flt: str = ""):
    """Entries matching a comma-separated filter: flags, dim=N, contact, frobenius."""
    out = []
    conds = [c.strip() for c in flt.split(",") if c.strip()]
    for ident in identifiers():
        e = get(ident)
        keep = True
        for c in conds:
            if c.startswith("dim="):
                keep &= e.dim == int(c[4:])
            elif c == "contact":
                keep &= bool(e.contact_forms)
            elif c == "frobenius":
                keep &= bool(e.frobenius_forms)
            elif c.startswith("id="):
                keep &= c[3:] in e.ident
            else:
                keep &= c in e.flags
        if keep:
            out.append(e)
    return out

"""Exact linear algebra over Scalar matrices.

Rational matrices go through ordinary Gauss-Jordan elimination.  Matrices
with polynomial entries go through fraction-free elimination
(cross-multiplication, never leaving the ring); a pivot is only accepted
when it is certified nonzero - a nonzero rational, or a rational multiple
of a declared nonvanishing constraint.  Anything else raises
RankInstability carrying the discriminating polynomial, and the caller may
substitute sample parameters instead.
"""

from __future__ import annotations

from fractions import Fraction

from .scalar import ONE, ZERO, Scalar, as_scalar


class RankInstability(Exception):
    """Rank depends on the parameters; .pivot holds the discriminating polynomial."""

    def __init__(self, pivot: Scalar):
        super().__init__(
            f"rank is not stable over the parameters; pivot candidate: {pivot}")
        self.pivot = pivot


def _content_normalize(row):
    """Divide a row by its rational content and fix the sign of the first entry."""
    num_gcd = 0
    den_lcm = 1
    for s in row:
        for _, c in s.terms():
            num_gcd = _gcd(num_gcd, abs(c.numerator))
            den_lcm = den_lcm * c.denominator // _gcd(den_lcm, c.denominator)
    if num_gcd == 0:
        return list(row)
    factor = Fraction(den_lcm, num_gcd)
    out = [s * factor for s in row]
    for s in out:
        if not s.is_zero:
            lead = max(s.terms(), key=lambda t: (sum(t[0]), t[0]))[1] if not s.is_rational else s.as_fraction()
            if lead < 0:
                out = [-x for x in out]
            break
    return out


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def is_rational_matrix(rows) -> bool:
    return all(s.is_rational for row in rows for s in row)


def _normalized(s: Scalar):
    return _content_normalize([s])[0]


def certified_nonzero(s: Scalar, constraints=()) -> bool:
    """True when s is certainly nonzero on the constrained parameter locus."""
    if s.is_zero:
        return False
    if s.is_rational:
        return True
    ns = _normalized(s)
    for c in constraints:
        c = as_scalar(c)
        if c.is_rational:
            continue
        if ns == _normalized(c):
            return True
    return False


# ----------------------------------------------------------------------
# rational path
# ----------------------------------------------------------------------

def rref(rows):
    """Reduced row echelon form of a rational Scalar matrix.

    Returns (rows_without_zero_rows, pivot_columns).
    """
    m = [list(r) for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pr = None
        for i in range(r, len(m)):
            if not m[i][c].is_zero:
                pr = i
                break
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        inv = ONE / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and not m[i][c].is_zero:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


# ----------------------------------------------------------------------
# fraction-free path
# ----------------------------------------------------------------------

def echelon(rows, constraints=()):
    """Row echelon form staying inside the polynomial ring.

    Returns (rows_without_zero_rows, pivot_columns); raises RankInstability
    when no certified pivot exists in a column that is not identically zero.
    """
    m = [list(r) for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        best = None
        suspect = None
        for i in range(r, len(m)):
            s = m[i][c]
            if s.is_zero:
                continue
            if s.is_rational:
                best = i
                break
            if certified_nonzero(s, constraints):
                if best is None:
                    best = i
            else:
                suspect = s
        if best is None:
            if suspect is not None:
                raise RankInstability(suspect)
            continue
        m[r], m[best] = m[best], m[r]
        piv = m[r][c]
        for i in range(r + 1, len(m)):
            if m[i][c].is_zero:
                continue
            f = m[i][c]
            m[i] = _content_normalize(
                [piv * a - f * b for a, b in zip(m[i], m[r])])
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows, constraints=()) -> int:
    if not rows:
        return 0
    if is_rational_matrix(rows):
        return len(rref(rows)[0])
    return len(echelon(rows, constraints)[0])


def nullspace(rows, ncols, constraints=()):
    """Basis of the right nullspace, as a list of Scalar vectors."""
    if not rows:
        return [tuple(ONE if j == i else ZERO for j in range(ncols))
                for i in range(ncols)]
    if is_rational_matrix(rows):
        red, pivots = rref(rows)
    else:
        red, pivots = echelon(rows, constraints)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [ZERO] * ncols
        v[f] = ONE
        # back-substitute bottom-up; scale by the pivot to stay in the ring
        for i in range(len(red) - 1, -1, -1):
            c = pivots[i]
            piv = red[i][c]
            s = ZERO
            for j in range(c + 1, ncols):
                if not v[j].is_zero and not red[i][j].is_zero:
                    s = s + red[i][j] * v[j]
            if piv.is_rational:
                v[c] = -s / piv
            else:
                v = [x * piv for x in v]
                v[c] = -s
        basis.append(tuple(_content_normalize(v)))
    return basis


def solve(rows, rhs, constraints=()):
    """Unique solution of rows . x = rhs; raises ValueError when the system
    is singular or inconsistent, RankInstability on uncertifiable pivots."""
    if not rows:
        raise ValueError("empty system")
    ncols = len(rows[0])
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    if is_rational_matrix(aug):
        red, pivots = rref(aug)
    else:
        red, pivots = echelon(aug, constraints)
    if ncols in pivots:
        raise ValueError("inconsistent linear system")
    if len(pivots) != ncols:
        raise ValueError("linear system is singular")
    x = [ZERO] * ncols
    for i in range(len(red) - 1, -1, -1):
        c = pivots[i]
        s = red[i][ncols]
        for j in range(c + 1, ncols):
            s = s - red[i][j] * x[j]
        piv = red[i][c]
        if not piv.is_rational:
            raise RankInstability(piv)
        x[c] = s / piv
    return tuple(x)


def det(rows) -> Scalar:
    """Determinant by minor expansion with bitmask memoization (no division)."""
    n = len(rows)
    if n == 0:
        return ONE
    if any(len(r) != n for r in rows):
        raise ValueError("determinant of a non-square matrix")
    minors = {0: ONE}
    for k in range(1, n + 1):
        row = rows[k - 1]
        new = {}
        for mask, sub in minors.items():
            if sub.is_zero:
                continue
            pos = 0
            bit = 1
            for j in range(n):
                bit = 1 << j
                if mask & bit:
                    continue
                entry = row[j]
                if not entry.is_zero:
                    nm = mask | bit
                    term = sub * entry
                    if pos & 1:
                        term = -term
                    acc = new.get(nm)
                    new[nm] = term if acc is None else acc + term
                pos += 1
        minors = new
        if not minors:
            return ZERO
    return minors.get((1 << n) - 1, ZERO)


def matvec(rows, v):
    out = []
    for r in rows:
        s = ZERO
        for a, b in zip(r, v):
            if not a.is_zero and not b.is_zero:
                s = s + a * b
        out.append(s)
    return tuple(out)


def identity(n):
    return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]


def zero_vector(n):
    return tuple(ZERO for _ in range(n))

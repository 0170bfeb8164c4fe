"""Exact scalars: rationals and sparse multivariate polynomials over Q.

Every coefficient in the system is a Scalar.  A Scalar is canonical:
variables are sorted by name, variables that do not occur are dropped,
no zero coefficients are stored, and a constant polynomial collapses to
the rational variant (empty variable tuple).  All arithmetic is exact;
Python integers give arbitrary precision for free.
"""

from __future__ import annotations

from fractions import Fraction


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, Scalar):
        return x.as_fraction()
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


def _canonicalize(vars_, terms):
    clean = {e: c for e, c in terms.items() if c != 0}
    if not clean:
        return (), {}
    used = [False] * len(vars_)
    for exps in clean:
        for i, e in enumerate(exps):
            if e:
                used[i] = True
    if all(used):
        return tuple(vars_), clean
    keep = [i for i, u in enumerate(used) if u]
    newvars = tuple(vars_[i] for i in keep)
    newterms = {}
    for exps, c in clean.items():
        newterms[tuple(exps[i] for i in keep)] = c
    return newvars, newterms


def grlex_key(exps):
    """Graded lexicographic sort key (ascending)."""
    return (sum(exps), exps)


class Scalar:
    """Immutable exact scalar: rational, or polynomial with rational coefficients."""

    __slots__ = ("_vars", "_terms", "_hash")

    def __init__(self, vars_=(), terms=None, _canonical=False):
        if terms is None:
            terms = {}
        if not _canonical:
            vars_, terms = _canonicalize(tuple(vars_), dict(terms))
        self._vars = vars_
        self._terms = terms
        self._hash = None

    # -- constructors ------------------------------------------------

    @staticmethod
    def rational(num, den=1) -> "Scalar":
        c = Fraction(num, den)
        return Scalar((), {(): c} if c else {}, _canonical=True)

    @staticmethod
    def variable(name: str) -> "Scalar":
        return Scalar((name,), {(1,): Fraction(1)}, _canonical=True)

    # -- structure ---------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def is_rational(self) -> bool:
        return not self._vars

    @property
    def variables(self) -> tuple:
        return self._vars

    def as_fraction(self) -> Fraction:
        if self._vars:
            raise ValueError(f"{self} is not rational")
        return self._terms.get((), Fraction(0))

    def degree(self) -> int:
        """Total degree; zero polynomial has degree 0 by convention."""
        if not self._terms:
            return 0
        return max(sum(e) for e in self._terms)

    def max_exponent(self, name: str) -> int:
        if name not in self._vars:
            return 0
        i = self._vars.index(name)
        return max(e[i] for e in self._terms)

    def terms(self):
        """Iterate (exponent tuple, Fraction) in ascending graded-lex order."""
        for e in sorted(self._terms, key=grlex_key):
            yield e, self._terms[e]

    # -- alignment of variable universes ------------------------------

    def _aligned(self, other):
        if self._vars == other._vars:
            return self._vars, self._terms, other._terms
        merged = tuple(sorted(set(self._vars) | set(other._vars)))
        return merged, self._remap(merged), other._remap(merged)

    def _remap(self, merged):
        if self._vars == merged:
            return self._terms
        pos = [merged.index(v) for v in self._vars]
        out = {}
        m = len(merged)
        for exps, c in self._terms.items():
            ne = [0] * m
            for p, e in zip(pos, exps):
                ne[p] = e
            out[tuple(ne)] = c
        return out

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other):
        other = as_scalar(other)
        vars_, a, b = self._aligned(other)
        out = dict(a)
        for e, c in b.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Scalar(vars_, out)

    __radd__ = __add__

    def __neg__(self):
        return Scalar(self._vars, {e: -c for e, c in self._terms.items()},
                      _canonical=True)

    def __sub__(self, other):
        return self + (-as_scalar(other))

    def __rsub__(self, other):
        return as_scalar(other) + (-self)

    def __mul__(self, other):
        other = as_scalar(other)
        # fast path: rational times anything
        if not self._vars:
            c = self._terms.get((), None)
            if c is None:
                return ZERO
            return Scalar(other._vars,
                          {e: c * k for e, k in other._terms.items()},
                          _canonical=True)
        if not other._vars:
            return other * self
        vars_, a, b = self._aligned(other)
        out = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                s = out.get(e, 0) + ca * cb
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return Scalar(vars_, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __truediv__(self, other):
        other = as_scalar(other)
        c = other.as_fraction()  # raises on polynomial divisor
        if c == 0:
            raise ZeroDivisionError("division by zero Scalar")
        return self * Scalar((), {(): 1 / c}, _canonical=True)

    def __bool__(self):
        return not self.is_zero

    # -- substitution ---------------------------------------------------

    def substitute(self, assignment) -> "Scalar":
        """Evaluate at a full assignment name -> rational; result is rational."""
        for v in self._vars:
            if v not in assignment:
                raise ValueError(f"unassigned variable '{v}'")
        vals = [_as_fraction(assignment[v]) for v in self._vars]
        total = Fraction(0)
        for exps, c in self._terms.items():
            m = c
            for val, e in zip(vals, exps):
                if e:
                    m *= val ** e
            total += m
        return Scalar.rational(total)

    def specialize(self, assignment) -> "Scalar":
        """Substitute a subset of the variables, keeping the rest symbolic."""
        hit = [i for i, v in enumerate(self._vars) if v in assignment]
        if not hit:
            return self
        vals = {i: _as_fraction(assignment[self._vars[i]]) for i in hit}
        keep = [i for i in range(len(self._vars)) if i not in vals]
        out = {}
        for exps, c in self._terms.items():
            m = c
            for i, val in vals.items():
                if exps[i]:
                    m *= val ** exps[i]
            if not m:
                continue
            e = tuple(exps[i] for i in keep)
            s = out.get(e, 0) + m
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Scalar(tuple(self._vars[i] for i in keep), out)

    # -- comparison / printing ------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Scalar.rational(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        return self._vars == other._vars and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._vars, frozenset(self._terms.items())))
        return self._hash

    def _monomial_str(self, exps):
        parts = []
        for v, e in zip(self._vars, exps):
            if e == 1:
                parts.append(v)
            elif e > 1:
                parts.append(f"{v}^{e}")
        return "*".join(parts)

    def __str__(self):
        if not self._terms:
            return "0"
        # graded lex, highest first: deterministic canonical printing
        keys = sorted(self._terms, key=grlex_key, reverse=True)
        out = []
        for i, e in enumerate(keys):
            c = self._terms[e]
            mono = self._monomial_str(e)
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            if i == 0:
                out.append(("-" if c < 0 else "") + body)
            else:
                out.append((" - " if c < 0 else " + ") + body)
        return "".join(out)

    def __repr__(self):
        return f"Scalar({self})"


ZERO = Scalar.rational(0)
ONE = Scalar.rational(1)


def as_scalar(x) -> Scalar:
    """Coerce an int, Fraction, or Scalar."""
    if isinstance(x, Scalar):
        return x
    if isinstance(x, (int, Fraction)):
        return Scalar.rational(x)
    raise TypeError(f"cannot interpret {x!r} as a Scalar")


# ----------------------------------------------------------------------
# parsing of the textual syntax: integers, fractions a/b, parenthesized
# polynomial expressions over declared parameter names, e.g. (1+p), -2,
# 1/2, (p*q - 1).  Grammar:
#   expr   := term (('+'|'-') term)*
#   term   := factor (('*'|'/') factor)*
#   factor := ['-'] atom ['^' INT]
#   atom   := INT | NAME | '(' expr ')'
# ----------------------------------------------------------------------

class ScalarSyntaxError(ValueError):
    pass


def _tokenize(text):
    toks = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            toks.append(("int", text[i:j]))
            i = j
        elif ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            toks.append(("name", text[i:j]))
            i = j
        elif ch in "+-*/^()":
            toks.append(("op", ch))
            i += 1
        else:
            raise ScalarSyntaxError(f"unexpected character {ch!r} in {text!r}")
    toks.append(("end", ""))
    return toks


class _Parser:
    def __init__(self, toks, names):
        self.toks = toks
        self.pos = 0
        self.names = frozenset(names)

    def peek(self):
        return self.toks[self.pos]

    def take(self):
        t = self.toks[self.pos]
        self.pos += 1
        return t

    def expr(self):
        value = self.term()
        while True:
            kind, val = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                rhs = self.term()
                value = value + rhs if val == "+" else value - rhs
            else:
                return value

    def term(self):
        value = self.factor()
        while True:
            kind, val = self.peek()
            if kind == "op" and val in "*/":
                self.take()
                rhs = self.factor()
                value = value * rhs if val == "*" else value / rhs
            else:
                return value

    def factor(self):
        kind, val = self.peek()
        sign = 1
        while kind == "op" and val == "-":
            self.take()
            sign = -sign
            kind, val = self.peek()
        value = self.atom()
        kind, val = self.peek()
        if kind == "op" and val == "^":
            self.take()
            kind, val = self.take()
            if kind != "int":
                raise ScalarSyntaxError("exponent must be a literal integer")
            value = value ** int(val)
        return value if sign == 1 else -value

    def atom(self):
        kind, val = self.take()
        if kind == "int":
            return Scalar.rational(int(val))
        if kind == "name":
            if val not in self.names:
                raise ScalarSyntaxError(f"unknown parameter '{val}'")
            return Scalar.variable(val)
        if kind == "op" and val == "(":
            value = self.expr()
            kind, val = self.take()
            if not (kind == "op" and val == ")"):
                raise ScalarSyntaxError("missing ')'")
            return value
        raise ScalarSyntaxError(f"unexpected token {val!r}")


def parse_scalar(text: str, params=()) -> Scalar:
    p = _Parser(_tokenize(text), params)
    value = p.expr()
    kind, _ = p.peek()
    if kind != "end":
        raise ScalarSyntaxError(f"trailing input in scalar expression {text!r}")
    return value

"""The .lie text format: one statement per line, '#' comments.

    dim 5
    params p q
    constrain q
    basis e1 e2 e3 e4 e5
    bracket [e2,e3] = e1
    bracket [e1,e5] = (1+p) e1

An optional extension block supplies codimension-1 extension data:

    extend psi e1 -> 0 ; e2 -> 2 e1
    extend f = -e1*
    extend s = 1
    extend alpha = e2*

Right-hand sides are Scalar-weighted sums of basis labels; unlisted
brackets vanish; 'constrain' lines list polynomials required nonzero.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .forms import KForm, parse_one_form
from .liealg import LieAlgebra, algebra, parse_vector
from .scalar import Scalar, as_scalar, parse_scalar


class ParseError(ValueError):
    def __init__(self, lineno, message):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


@dataclass
class ExtensionBlock:
    """Raw extension statements resolved against the parsed algebra."""
    psi: tuple = None          # rows of the matrix (psi maps e_i to column i)
    f: KForm = None
    s: Scalar = None
    alpha: KForm = None


@dataclass
class ParsedFile:
    algebra: LieAlgebra
    extension: ExtensionBlock | None = None


def parse_algebra_text(text: str) -> ParsedFile:
    dim = None
    params = ()
    constraints = []
    basis = None
    brackets = []
    ext_raw = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, _, rest = line.partition(" ")
        rest = rest.strip()
        try:
            if head == "dim":
                dim = int(rest)
            elif head == "params":
                params = tuple(rest.split())
            elif head == "constrain":
                constraints.append(rest)
            elif head == "basis":
                basis = rest.split()
            elif head == "bracket":
                lhs, _, rhs = rest.partition("=")
                lhs = lhs.strip()
                if not (lhs.startswith("[") and lhs.endswith("]")):
                    raise ValueError("expected bracket [a,b] = ...")
                a, b = (s.strip() for s in lhs[1:-1].split(","))
                brackets.append((a, b, rhs.strip()))
            elif head == "extend":
                ext_raw.append((lineno, rest))
            else:
                raise ValueError(f"unknown statement '{head}'")
        except ParseError:
            raise
        except Exception as exc:
            raise ParseError(lineno, str(exc)) from None
    if basis is None:
        raise ParseError(0, "missing 'basis' statement")
    if dim is not None and dim != len(basis):
        raise ParseError(0, f"dim {dim} does not match {len(basis)} basis labels")
    try:
        alg = algebra(basis, {f"{a} {b}": rhs for a, b, rhs in brackets},
                      params=params, constraints=tuple(constraints))
    except Exception as exc:
        raise ParseError(0, str(exc)) from None
    ext = _parse_extension(ext_raw, alg) if ext_raw else None
    return ParsedFile(alg, ext)


def _parse_extension(ext_raw, alg) -> ExtensionBlock:
    block = ExtensionBlock()
    psi_cols = {}
    for lineno, rest in ext_raw:
        head, _, body = rest.partition(" ")
        body = body.strip()
        try:
            if head == "psi":
                for clause in body.split(";"):
                    lhs, _, rhs = clause.partition("->")
                    label = lhs.strip()
                    psi_cols[alg.index_of(label)] = parse_vector(rhs.strip(), alg)
            elif head == "f":
                block.f = parse_one_form(body.lstrip("= ").strip(), alg)
            elif head == "s":
                block.s = parse_scalar(body.lstrip("= ").strip(),
                                       alg.params + ("s",))
            elif head == "alpha":
                block.alpha = parse_one_form(body.lstrip("= ").strip(), alg)
            else:
                raise ValueError(f"unknown extension statement '{head}'")
        except ParseError:
            raise
        except Exception as exc:
            raise ParseError(lineno, str(exc)) from None
    n = alg.dim
    zero = [as_scalar(0)] * n
    cols = [list(psi_cols.get(i, zero)) for i in range(n)]
    block.psi = tuple(tuple(cols[j][i] for j in range(n)) for i in range(n))
    if block.f is None:
        block.f = KForm(n, 1)
    return block


def parse_algebra_file(path) -> ParsedFile:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_algebra_text(fh.read())


def format_algebra(alg: LieAlgebra) -> str:
    """Emit the .lie format; output round-trips through the parser."""
    lines = [f"dim {alg.dim}"]
    if alg.params:
        lines.append("params " + " ".join(alg.params))
    for c in alg.constraints:
        lines.append(f"constrain ({c})")
    lines.append("basis " + " ".join(alg.basis))
    pairs = sorted({(i, j) for (i, j, _k) in alg.constants})
    for i, j in pairs:
        v = alg.bracket_basis(i, j)
        lines.append(f"bracket [{alg.basis[i]},{alg.basis[j]}] = "
                     + alg.format_vector(v))
    return "\n".join(lines) + "\n"

"""Catalog-wide golden suite: every stored claim, re-verified.

One record per catalog assertion: Jacobi identically in the parameters,
claimed contact/Frobenius covectors at every stored sample, degeneracy of
claimed covectors on excluded loci (informational findings), the
bi-invariant-metric tripwire, and obstruction/decision agreement.
"""

from __future__ import annotations

from . import catalog, obstruct
from .contact import (contact_exists, contact_polynomial, frobenius_polynomial,
                      is_contact_form, is_exact_symplectic)
from .liealg import RankInstability
from .report import Report


def run_suite() -> Report:
    rep = Report("suite")
    for ident in catalog.identifiers():
        entry = catalog.get(ident)
        _entry_checks(rep, entry)
    _tripwire(rep)
    _obstruction_agreement(rep)
    return rep


def _entry_checks(rep, entry):
    alg = entry.algebra
    jac = alg.jacobi_check()
    rep.add(f"{entry.ident}.jacobi", "pass" if jac.passed else "fail",
            rule="jacobi-identity")
    for si, (sample, conc) in enumerate(entry.sample_algebras()):
        tag = f"{entry.ident}" + (f"@{_fmt_sample(sample)}" if sample else "")
        for fi, form in enumerate(entry.contact_forms):
            eta = form.substitute(sample) if sample else form
            v = is_contact_form(conc, eta)
            rep.add(f"{tag}.contact[{fi}]", "pass" if v.is_contact else "fail",
                    rule="volume-condition", top=v.top)
        for fi, form in enumerate(entry.frobenius_forms):
            alpha = form.substitute(sample) if sample else form
            ok = is_exact_symplectic(conc, alpha).passed
            rep.add(f"{tag}.frobenius[{fi}]", "pass" if ok else "fail",
                    rule="volume-condition")
    for sample in entry.excluded_samples:
        # informational: does the claimed covector degenerate on the stated
        # excluded locus?  Tightness is reported, never asserted.
        under = {p: sample[p] for p in alg.params}
        for fi, form in enumerate(entry.contact_forms):
            top = _top_at(alg, form, under)
            rep.add(f"{entry.ident}.excluded@{_fmt_sample(under)}", "info",
                    rule="constraint-tightness",
                    vanishes=top.is_zero, top=top)


def _top_at(alg, form, sample):
    table = {k: c.substitute(sample) for k, c in alg.constants.items()}
    from .liealg import LieAlgebra
    conc = LieAlgebra(alg.basis, table)
    eta = form.substitute(sample)
    n = (alg.dim - 1) // 2
    from .forms import ce_d
    return ce_d(conc, eta).power(n).wedge(eta).top_coefficient()


def _fmt_sample(sample):
    return ",".join(f"{k}={v}" for k, v in sorted(sample.items()))


def _tripwire(rep):
    both = []
    for ident in catalog.identifiers():
        entry = catalog.get(ident)
        alg = entry.algebra
        if alg.dim < 3:
            # dimension 1 is degenerate: the volume condition is vacuous and
            # the kernel of a nonzero covector is the zero subalgebra, so the
            # bi-invariant classification starts at dimension 3
            continue
        sample = entry.samples[0] if alg.params else None
        try:
            ortho = obstruct.orthogonal_exists(alg)
        except RankInstability:
            if sample is None:
                raise
            ortho = obstruct.orthogonal_exists(alg.specialize(sample))
        has_contact = False
        if alg.dim % 2 == 1:
            has_contact = contact_exists(alg, sample).exists
        if ortho.exists and has_contact:
            both.append(ident)
            cross = obstruct.orthogonal_contact_cross_check(alg, sample)
            rep.add(f"tripwire.{ident}",
                    "pass" if cross.passed and alg.dim == 3 else "fail",
                    rule="boothby-wang-extension")
    expected = {"sl2", "so3"}
    rep.add("tripwire.coexistence-set",
            "pass" if set(both) == expected else "fail",
            rule="boothby-wang-extension", found=",".join(sorted(both)))


def _obstruction_agreement(rep):
    disagreements = 0
    checked = 0
    for ident in catalog.identifiers():
        entry = catalog.get(ident)
        alg = entry.algebra
        sample = entry.samples[0] if alg.params else None
        conc = alg.specialize(sample) if sample else alg
        claims_none = []
        if conc.dim % 2 == 1:
            rep_c = obstruct.center_obstruction(conc)
            if not rep_c.passed:
                claims_none.append("center-dim")
        rep_r = obstruct.rank_one_bracket_detect(conc) if conc.dim >= 2 else None
        if rep_r is not None and not rep_r.passed:
            claims_none.append("rank-one")
        rep_a = obstruct.codim1_abelian_obstruction(conc)
        if not rep_a.passed:
            claims_none.append("codim1-abelian")
        if conc.is_solvable() and conc.derived_ideal().dim == conc.dim - 1:
            rep_d = obstruct.codim1_derived_criteria(conc)
            if not rep_d.passed:
                claims_none.append("codim1-derived")
        if not claims_none:
            continue
        checked += 1
        if conc.dim % 2 == 1:
            poly = contact_polynomial(conc).polynomial
        else:
            poly = frobenius_polynomial(conc).polynomial
        if not poly.is_zero:
            disagreements += 1
            rep.add(f"obstruction.{ident}", "fail",
                    rule="obstruction-decision-agreement",
                    claims=",".join(claims_none))
    rep.add("obstruction.agreement",
            "pass" if disagreements == 0 else "fail",
            rule="obstruction-decision-agreement",
            instances=checked, disagreements=disagreements)

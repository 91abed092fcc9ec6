"""Normal forms against a reduced standard basis under the local order.

The local order makes lower total degree GREATER, so leading monomials of
homogeneous polynomials are the lexicographically largest exponent tuples.
Reduction against the degree-2 Jacobian basis of the Lefschetz ideal is
degree-preserving and terminates without ecart bookkeeping; the reduced
remainder NF(f | G) is unique and vanishes exactly on ideal members,
which is cross-checked against the linear-algebra membership oracle.
"""

from .catalog import lefschetz_catalog
from .division import ideal_slice_echelon
from .exterior import FORM, GradedElement, enumerate_basis
from .polynomials import Polynomial


def leading_monomial(f):
    """(monomial, coefficient) maximal under the local order; error on zero."""
    return f.leading_term()


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


class OrderedIdealBasis:
    """Generator list whose reduced-ness is verified, not assumed."""

    __slots__ = ("generators", "reduced")

    def __init__(self, generators):
        if not generators or any(g.is_zero() for g in generators):
            raise ValueError("generators must be nonzero")
        self.generators = list(generators)
        self.reduced = self._verify_reduced()

    def _verify_reduced(self):
        lms = [g.leading_term() for g in self.generators]
        if any(c != 1 for _, c in lms):
            return False
        for i, (mi, _) in enumerate(lms):
            for j, (mj, _) in enumerate(lms):
                if i != j and _divides(mi, mj):
                    return False
        for g, (mg, cg) in zip(self.generators, lms):
            tail = g - Polynomial.monomial(g.n, mg, cg)
            for m in tail.terms:
                if any(_divides(mi, m) for mi, _ in lms):
                    return False
        return True

    def leading_monomials(self):
        return [g.leading_term()[0] for g in self.generators]


def lefschetz_ideal_basis(cat=None):
    cat = cat or lefschetz_catalog()
    return OrderedIdealBasis(cat.ideal_generators)


def normal_form(f, basis, with_certificate=False):
    """Unique reduced remainder of f against a reduced basis.

    With with_certificate=True also returns the quotients q_i with
    f = sum q_i g_i + NF(f | basis).
    """
    if not basis.reduced:
        raise ValueError("normal form needs a verified reduced basis")
    gens = basis.generators
    lms = [g.leading_term() for g in gens]
    quotients = [Polynomial.zero(f.n) for _ in gens]
    rest = f
    reduced_terms = {}
    while not rest.is_zero():
        m, c = rest.leading_term()
        hit = None
        for i, (mg, cg) in enumerate(lms):
            if _divides(mg, m):
                hit = (i, mg, cg)
                break
        if hit is None:
            reduced_terms[m] = c
            rest = rest - Polynomial.monomial(f.n, m, c)
            continue
        i, mg, cg = hit
        factor = Polynomial.monomial(f.n, tuple(a - b for a, b in zip(m, mg)),
                                     c / cg)
        quotients[i] = quotients[i] + factor
        rest = rest - factor * gens[i]
    r = Polynomial(f.n, reduced_terms)
    if with_certificate:
        return r, quotients
    return r


def is_reduced_wrt(f, basis):
    """No monomial of f divisible by a leading monomial of the basis."""
    lms = basis.leading_monomials()
    return all(not any(_divides(mg, m) for mg in lms) for m in f.terms)


def linear_membership(f, basis):
    """Degreewise linear-algebra ideal membership; f need not be reduced."""
    if f.is_zero():
        return True
    for d, part in f.homogeneous_parts().items():
        ech = ideal_slice_echelon(basis.generators, d, f.n)
        slice_basis = enumerate_basis(0, d, FORM, f.n)
        if not ech.contains(slice_basis.coords(GradedElement.from_polynomial(part))):
            return False
    return True


def membership_crosscheck(f, basis):
    """(nf_member, linalg_member, agree) for Corollary-style equivalence."""
    nf_member = normal_form(f, basis).is_zero()
    lin_member = linear_membership(f, basis)
    return nf_member, lin_member, nf_member == lin_member


def casimir_intersection_check(d_max, cat=None):
    """Slicewise intersection checks of the Jacobian ideal with the Casimir
    ring and the module <x_1..x_4> over R[[x2^2, x4]].

    Verifies, for every degree d <= d_max:
      * J_d intersect span(f-monomials) = span((f1^2+f2^2) * f-monomials),
      * the same after enlarging by the module slice M_d,
      * span(f-monomials) intersect M_d = 0.
    Returns (ok, table of per-degree dimension data).
    """
    from .homology import a_monomials, f_monomials
    cat = cat or lefschetz_catalog()
    x = [Polynomial.variable(4, i) for i in range(1, 5)]
    ff = cat.f1 * cat.f1 + cat.f2 * cat.f2
    ok = True
    table = []
    for d in range(d_max + 1):
        slice_basis = enumerate_basis(0, d, FORM, 4)

        def coords(p):
            return slice_basis.coords(GradedElement.from_polynomial(p))

        j_ech = ideal_slice_echelon(cat.ideal_generators, d, 4)
        f_vecs = [coords(p) for _, p in f_monomials(cat, d)]
        m_vecs = [coords(a * xi) for xi in x for a in a_monomials(d - 1)]
        expect_vecs = [coords(ff * p) for _, p in f_monomials(cat, d - 4)]

        dim_f = _span_dim(f_vecs)
        dim_m = _span_dim(m_vecs)
        dim_fm = _span_dim(f_vecs + m_vecs)
        dim_j = j_ech.rank
        inter_f = dim_f + dim_j - _span_dim(f_vecs + _rows(j_ech))
        inter_fm = dim_fm + dim_j - _span_dim(f_vecs + m_vecs + _rows(j_ech))
        expected = _span_dim(expect_vecs)
        expected_inside = all(j_ech.contains(v) for v in expect_vecs)
        row_ok = (inter_f == expected and inter_fm == expected
                  and dim_f + dim_m == dim_fm and expected_inside)
        ok = ok and row_ok
        table.append({"degree": d, "dim_J": dim_j, "dim_F": dim_f,
                      "dim_M": dim_m, "intersection_F": inter_f,
                      "intersection_FM": inter_fm, "expected": expected,
                      "ok": row_ok})
    return ok, table


def _rows(ech):
    return [dict(main) for main, _ in ech.rows.values()]


def _span_dim(vectors):
    from .linalg import QEchelon
    ech = QEchelon()
    for v in vectors:
        ech.insert(v)
    return ech.rank

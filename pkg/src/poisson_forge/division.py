"""de Rham-Saito division groups and regular-sequence checks.

For 1-forms a_1, ..., a_k the p-th division group is

    D^p(a_1,...,a_k) = { b in Omega^p : b ^ a_1 ^ ... ^ a_k = 0 }
                       / sum_i a_i ^ Omega^{p-1}.

All inputs here are weight-homogeneous, so the groups split into weight
slices and every dimension is a rank difference of exact matrices.  The
Lefschetz case (a_i = df_i) has D^1 = 0 but D^2 nonzero with explicit
generators c*beta_1 + (p*x1 + q1*x3 + q2)*beta_2, which is the measured
failure of the isolated-singularity depth bound.
"""

from math import comb

from .catalog import lefschetz_catalog
from .exterior import FORM, GradedElement, enumerate_basis, wedge, wedge_all
from .linalg import QEchelon
from .polynomials import Polynomial, monomials_of_degree


class DivisionProblem:
    """Forms a_1..a_k, exterior degree p, weight w of the tested slice."""

    __slots__ = ("forms", "p", "w")

    def __init__(self, forms, p, w):
        if not forms:
            raise ValueError("need at least one dividing 1-form")
        n = forms[0].n
        for a in forms:
            if a.kind != FORM or a.degree != 1 or a.n != n:
                raise ValueError("dividing elements must be 1-forms")
            if len(a.weights()) > 1:
                raise ValueError("dividing forms must be weight-homogeneous")
        if w < p:
            raise ValueError("weight below exterior degree")
        self.forms = list(forms)
        self.p = p
        self.w = w


def _wedge_kernel_echelon(prob):
    """Echelon data for the slice: returns (kernel_dim, submodule_rank)."""
    alpha = wedge_all(prob.forms)
    aw = alpha.weights()
    n = alpha.n
    p, w = prob.p, prob.w
    src = enumerate_basis(p, w, FORM, n)
    if len(src) == 0:
        return 0, 0
    if not aw or p + alpha.degree > n:   # wedging with alpha is the zero map
        kernel_dim = len(src)
    else:
        dst = enumerate_basis(p + alpha.degree, w + aw[0], FORM, n)
        ech = QEchelon()
        rank = 0
        for i in range(len(src)):
            img = wedge(src.element(i), alpha)
            if img and ech.insert(dst.coords(img)):
                rank += 1
        kernel_dim = len(src) - rank
    sub = QEchelon()
    for a in prob.forms:
        u = a.weights()[0]
        lower = enumerate_basis(p - 1, w - u, FORM, n)
        for i in range(len(lower)):
            img = wedge(a, lower.element(i))
            if img:
                sub.insert(src.coords(img))
    return kernel_dim, sub.rank


def division_group_dim(prob):
    """dim of the (p, w) slice of D^p(a_1,...,a_k)."""
    kernel_dim, sub_rank = _wedge_kernel_echelon(prob)
    return kernel_dim - sub_rank


def division_group_dim_via_kernel_basis(prob):
    """Second route: explicit kernel basis, then quotient by the submodule.

    Used as an independent cross-check of division_group_dim.
    """
    from .linalg import ExactMatrix, quotient_dim

    alpha = wedge_all(prob.forms)
    aw = alpha.weights()
    n = alpha.n
    p, w = prob.p, prob.w
    src = enumerate_basis(p, w, FORM, n)
    if len(src) == 0:
        return 0
    if not aw or p + alpha.degree > n:
        kernel = [{i: 1} for i in range(len(src))]
    else:
        dst = enumerate_basis(p + alpha.degree, w + aw[0], FORM, n)
        cols = [dst.coords(wedge(src.element(i), alpha)) for i in range(len(src))]
        mat = ExactMatrix.from_columns(cols, len(dst))
        kernel = mat.kernel_basis()
    sub = []
    for a in prob.forms:
        u = a.weights()[0]
        lower = enumerate_basis(p - 1, w - u, FORM, n)
        for i in range(len(lower)):
            img = wedge(a, lower.element(i))
            if img:
                sub.append(src.coords(img))
    return quotient_dim(kernel, sub)


def lefschetz_problem(p, w, cat=None):
    cat = cat or lefschetz_catalog()
    return DivisionProblem([cat.df1, cat.df2], p, w)


def division_group_basis(prob, cat=None):
    """Instantiated generators of D^2(df1, df2) at one coefficient degree.

    Images of the classification map (c, p, (q1, q2)) -> c*beta_1 +
    (p*x1 + q1*x3 + q2)*beta_2 at all parameter monomials of the slice,
    in deterministic order.
    """
    cat = cat or lefschetz_catalog()
    if prob.p != 2 or prob.forms != [cat.df1, cat.df2]:
        raise ValueError("basis instantiation only supports D^2(df1, df2)")
    d = prob.w - 2          # coefficient degree of the slice
    if d < 0:
        return []
    x1 = Polynomial.variable(4, 1)
    x2 = Polynomial.variable(4, 2)
    x3 = Polynomial.variable(4, 3)
    x4 = Polynomial.variable(4, 4)
    out = []
    if d == 0:
        out.append(cat.beta1)
    if d >= 1:
        out.append(cat.beta2 * (x2 ** (d - 1) * x1))
        for m in _xy_monomials(x2, x4, d - 1):
            out.append(cat.beta2 * (m * x3))
    for m in _xy_monomials(x2, x4, d):
        out.append(cat.beta2 * m)
    return out


def _xy_monomials(a, b, d):
    """Monomials a^i b^{d-i}, larger a-power first (the local tie-break)."""
    return [(a ** i) * (b ** (d - i)) for i in range(d, -1, -1)]


def verify_division_basis(prob, cat=None):
    """(count, dim, independent, all_in_kernel) for the instantiated basis."""
    cat = cat or lefschetz_catalog()
    reps = division_group_basis(prob, cat)
    dim = division_group_dim(prob)
    alpha = wedge_all(prob.forms)
    all_kernel = all(wedge(r, alpha).is_zero() for r in reps)
    src = enumerate_basis(prob.p, prob.w, FORM, 4)
    ech = QEchelon()
    for a in prob.forms:
        u = a.weights()[0]
        lower = enumerate_basis(prob.p - 1, prob.w - u, FORM, 4)
        for i in range(len(lower)):
            img = wedge(a, lower.element(i))
            if img:
                ech.insert(src.coords(img))
    independent = all(ech.insert(src.coords(r)) for r in reps)
    return len(reps), dim, independent, all_kernel


def submodule_contains(prob, form):
    """Is the form inside sum_i a_i ^ Omega^{p-1} on its slice?"""
    src = enumerate_basis(prob.p, prob.w, FORM, form.n)
    ech = QEchelon()
    for a in prob.forms:
        u = a.weights()[0]
        lower = enumerate_basis(prob.p - 1, prob.w - u, FORM, form.n)
        for i in range(len(lower)):
            img = wedge(a, lower.element(i))
            if img:
                ech.insert(src.coords(img))
    return ech.contains(src.coords(form))


# -- Jacobian ideal slices ----------------------------------------------------


def ideal_slice_echelon(generators, d, n=4):
    """Echelonized degree-d slice of the ideal generated by homogeneous polys."""
    basis = enumerate_basis(0, d, FORM, n)
    ech = QEchelon()
    for g in generators:
        gd = g.degree()
        if gd > d:
            continue
        for m in monomials_of_degree(n, d - gd):
            prod = g * Polynomial.monomial(n, m)
            ech.insert(basis.coords(GradedElement.from_polynomial(prod)))
    return ech


def ideal_slice_dim(d, cat=None):
    """(dim J_d, dim R_d / J_d) for the Lefschetz Jacobian ideal."""
    cat = cat or lefschetz_catalog()
    if d < 0:
        raise ValueError("degree must be non-negative")
    dim_j = ideal_slice_echelon(cat.ideal_generators, d).rank
    total = comb(d + 3, 3)
    return dim_j, total - dim_j


def ideal_dim_binomial_print(d):
    """The closed binomial count of dim J_d quoted in the source analysis."""
    if d < 2:
        return 0
    val = 2 * comb(d - 1, 1) + 2 * comb(d + 1, 3)
    if d >= 4:
        val -= comb(d - 1, 3)
    return val


def regular_sequence_check(seq, w_max, n=4):
    """Degreewise regular-sequence verification up to total degree w_max.

    For each step i the multiplication by seq[i] must be injective on
    R / <seq[0..i-1]> in every degree that fits below w_max.  Returns
    (ok, first failing (step, degree) or None).
    """
    for f in seq:
        if not f.is_homogeneous() or f.is_zero():
            raise ValueError("regular-sequence check needs homogeneous nonzero polys")
    for i, f in enumerate(seq):
        prev = seq[:i]
        e = f.degree()
        for d in range(0, w_max - e + 1):
            ideal_lo = ideal_slice_echelon(prev, d, n)
            ideal_hi = ideal_slice_echelon(prev, d + e, n)
            basis_hi = enumerate_basis(0, d + e, FORM, n)
            kills = 0
            ech = ideal_hi.clone()
            for m in monomials_of_degree(n, d):
                prod = f * Polynomial.monomial(n, m)
                if not ech.insert(basis_hi.coords(GradedElement.from_polynomial(prod))):
                    kills += 1
            # multiplication kernel on the quotient must be exactly the ideal slice
            if kills != ideal_lo.rank:
                return False, (i, d)
    return True, None

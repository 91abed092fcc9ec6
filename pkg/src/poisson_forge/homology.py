"""Slice-by-slice Poisson homology of the Lefschetz structure.

The Koszul-Brylinski differential commutes with the scaling action, so
the form complex splits into finite slices of fixed scaling weight w:

    (4,w) -> (3,w) -> (2,w) -> (1,w) -> (0,w)

Each slice map is assembled as an exact sparse matrix in the deterministic
monomial bases of exterior.py; homology dimensions are rank differences,
homology classes are handled through one cached echelonized boundary basis
per slice.

Besides dimensions this module instantiates and verifies the explicit
representative families (unique normal forms of classes), certifies the
module-structure relations over the Casimir ring as boundary memberships,
computes the de Rham complex induced on homology, and runs the
volume-deformation normalizer that rewrites g*pi as q*pi with q a Casimir
function, through a chosen weight.
"""

from .catalog import lefschetz_catalog
from .exterior import (FORM, GradedElement, contract, de_rham,
                       enumerate_basis, star, star_inv, wedge)
from .linalg import ExactMatrix, QEchelon
from .polynomials import Polynomial, monomial_key, monomials_of_degree
from .rationals import Q
from .series import H_SERIES, KERNEL3_PRINTED, KERNEL_SERIES


class InvariantViolation(Exception):
    """A certified step of a computation failed; never silently ignored."""


class SliceComplex:
    """All delta matrices acting within one scaling weight."""

    __slots__ = ("weight", "matrices")

    def __init__(self, weight, matrices):
        self.weight = weight
        self.matrices = matrices          # k -> ExactMatrix for delta on (k, w)

    def composition_is_zero(self):
        for k in range(2, 5):
            lower, upper = self.matrices[k - 1], self.matrices[k]
            if not lower.matmul(upper).is_zero():
                return False
        return True


class RepresentativeVerdict:
    __slots__ = ("degree", "weight", "count", "dimension",
                 "all_cycles", "independent")

    def __init__(self, degree, weight, count, dimension, all_cycles, independent):
        self.degree = degree
        self.weight = weight
        self.count = count
        self.dimension = dimension
        self.all_cycles = all_cycles
        self.independent = independent

    @property
    def ok(self):
        return self.all_cycles and self.independent and self.count == self.dimension

    def as_dict(self):
        return {"degree": self.degree, "weight": self.weight,
                "count": self.count, "dimension": self.dimension,
                "all_cycles": self.all_cycles, "independent": self.independent,
                "ok": self.ok}


class RelationResult:
    __slots__ = ("name", "degree", "weight", "is_boundary", "expect_boundary")

    def __init__(self, name, degree, weight, is_boundary, expect_boundary):
        self.name = name
        self.degree = degree
        self.weight = weight
        self.is_boundary = is_boundary
        self.expect_boundary = expect_boundary

    @property
    def ok(self):
        return self.is_boundary == self.expect_boundary

    def as_dict(self):
        return {"name": self.name, "degree": self.degree, "weight": self.weight,
                "is_boundary": self.is_boundary,
                "expect_boundary": self.expect_boundary, "ok": self.ok}


class DeformationStep:
    __slots__ = ("weight", "casimir_part", "corrector", "certified")

    def __init__(self, weight, casimir_part, corrector, certified):
        self.weight = weight
        self.casimir_part = casimir_part   # Polynomial in f1, f2
        self.corrector = corrector         # vector field X with d_pi(X) = (g_w - q_w) pi
        self.certified = certified


CASIMIR = "R[[f1,f2]]"
X2SQ_X4 = "R[[x2^2,x4]]"


class RepresentativeFamily:
    """One generator template of the unique-normal-form description.

    Instantiating the template at a parameter monomial of the right degree
    yields a weight-homogeneous cycle; the parameter space is either the
    Casimir ring or R[[x2^2, x4]].
    """

    __slots__ = ("degree", "label", "parameter_space", "weight_offset",
                 "builder", "cat")

    def __init__(self, degree, label, parameter_space, weight_offset, builder,
                 cat=None):
        self.degree = degree
        self.label = label
        self.parameter_space = parameter_space
        self.weight_offset = weight_offset
        self.builder = builder
        self.cat = cat

    def parameters(self, w):
        d = w - self.weight_offset
        if self.parameter_space == CASIMIR:
            return [p for _, p in f_monomials(self.cat, d)]
        return a_monomials(d)

    def instantiate(self, param):
        return self.builder(param)

    def instantiate_at_weight(self, w):
        return [self.builder(p) for p in self.parameters(w)]


class HomologyReport:
    """Per-weight dimension data of one homology degree plus verdicts."""

    __slots__ = ("degree", "rows", "hilbert", "expected", "series",
                 "representative_verdicts")

    def __init__(self, degree, rows, hilbert, expected, series, rep_verdicts):
        for _, dk, di, dh in rows:
            if dh != dk - di or dh < 0:
                raise InvariantViolation("inconsistent dimension row")
        self.degree = degree
        self.rows = rows                    # (weight, dim ker, dim im, dim H)
        self.hilbert = hilbert
        self.expected = expected
        self.series = series
        self.representative_verdicts = rep_verdicts

    @property
    def series_match(self):
        return self.hilbert == self.expected

    @property
    def ok(self):
        return self.series_match and all(v.ok for v in
                                         self.representative_verdicts)


def f_monomials(cat, degree):
    """Monomials f1^a f2^b of x-degree `degree`, largest (a,b) first."""
    if degree < 0 or degree % 2:
        return []
    half = degree // 2
    return [((a, half - a), (cat.f1 ** a) * (cat.f2 ** (half - a)))
            for a in range(half, -1, -1)]


def a_monomials(degree):
    """Monomials x2^{2s} x4^u with 2s + u = degree, largest exponent first."""
    if degree < 0:
        return []
    out = []
    for s in range(degree // 2, -1, -1):
        u = degree - 2 * s
        out.append(Polynomial.monomial(4, (0, 2 * s, 0, u)))
    return out


class HomologyEngine:
    """Cached slice computations for one Lefschetz catalog."""

    def __init__(self, cat=None):
        self.cat = cat or lefschetz_catalog()
        self._delta = {}
        self._rank = {}
        self._boundaries = {}
        self._families = {}
        self._x = [Polynomial.variable(4, i) for i in range(1, 5)]

    # -- matrices and dimensions ------------------------------------

    def basis(self, k, w):
        return enumerate_basis(k, w, FORM)

    def slice_dim(self, k, w):
        return len(self.basis(k, w))

    def delta_matrix(self, k, w):
        """Matrix of delta_pi from the (k, w) slice to the (k-1, w) slice."""
        if not 1 <= k <= 4:
            raise ValueError("degree out of range")
        key = (k, w)
        if key not in self._delta:
            from .poisson import delta_pi
            src = self.basis(k, w)
            dst = self.basis(k - 1, w)
            columns = []
            for i in range(len(src)):
                img = delta_pi(src.element(i), self.cat.poisson)
                columns.append(dst.coords(img))
            self._delta[key] = ExactMatrix.from_columns(columns, len(dst))
        return self._delta[key]

    def slice_complex(self, w):
        return SliceComplex(w, {k: self.delta_matrix(k, w) for k in range(1, 5)})

    def delta_rank(self, k, w):
        if k == 5:
            return 0
        key = (k, w)
        if key not in self._rank:
            if self.slice_dim(k, w) == 0:
                self._rank[key] = 0
            else:
                self._rank[key] = self.delta_matrix(k, w).rank()
        return self._rank[key]

    def kernel_dim(self, k, w):
        if k == 0:
            return self.slice_dim(0, w)
        return self.slice_dim(k, w) - self.delta_rank(k, w)

    def homology_dimension(self, k, w):
        if not 0 <= k <= 4:
            raise ValueError("degree out of range")
        return self.kernel_dim(k, w) - self.delta_rank(k + 1, w)

    def hilbert_function(self, k, w_max):
        return [self.homology_dimension(k, w) for w in range(w_max + 1)]

    def kernel_hilbert(self, k, w_max):
        return [self.kernel_dim(k, w) for w in range(w_max + 1)]

    def homology_report(self, k, w_max, with_representatives=True):
        rows = []
        for w in range(w_max + 1):
            kd = self.kernel_dim(k, w)
            im = self.delta_rank(k + 1, w)
            rows.append((w, kd, im, kd - im))
        verdicts = [self.verify_representatives(k, w)
                    for w in range(w_max + 1)] if with_representatives else []
        return HomologyReport(k, rows, self.hilbert_function(k, w_max),
                              H_SERIES[k].expand(w_max), H_SERIES[k], verdicts)

    # -- boundaries ---------------------------------------------------

    def boundary_echelon(self, k, w):
        """Echelonized image of delta inside the (k, w) slice; cached."""
        key = (k, w)
        if key not in self._boundaries:
            ech = QEchelon()
            if k < 4:
                mat = self.delta_matrix(k + 1, w)
                for col in mat.columns():
                    if col:
                        ech.insert(col)
            self._boundaries[key] = ech
        return self._boundaries[key]

    def is_boundary(self, form):
        ws = form.weights()
        if not ws:
            return True
        if len(ws) != 1:
            raise ValueError("boundary test needs a weight-homogeneous form")
        w = ws[0]
        coords = self.basis(form.degree, w).coords(form)
        return self.boundary_echelon(form.degree, w).contains(coords)

    # -- representative families --------------------------------------

    def representative_basis(self, k, w):
        """Instantiates the unique-normal-form families at every parameter
        monomial of weight w; each returned form is a weight-w cycle."""
        out = []
        for family in self.representative_families(k):
            out.extend(family.instantiate_at_weight(w))
        return out

    def representative_families(self, k):
        """The generator templates of one homology degree."""
        if k not in self._families:
            cat = self.cat
            x = self._x

            def scale(base):
                return lambda p: base * p

            def d_of(mult):
                return lambda a: de_rham(GradedElement.from_polynomial(a * mult))

            def d_wedge_df1(mult):
                return lambda a: wedge(
                    de_rham(GradedElement.from_polynomial(a * mult)), cat.df1)

            if k == 0:
                fams = [RepresentativeFamily(0, "p", CASIMIR, 0,
                        lambda p: GradedElement.from_polynomial(p))]
                fams += [RepresentativeFamily(
                    0, "a%d*x%d" % (i + 1, i + 1), X2SQ_X4, 1,
                    (lambda xi: lambda a: GradedElement.from_polynomial(a * xi))(x[i]))
                    for i in range(4)]
            elif k == 1:
                fams = [RepresentativeFamily(1, "p%d*zeta%d" % (j, j), CASIMIR,
                                             2, scale(z))
                        for j, z in ((1, cat.zeta1), (2, cat.zeta2))]
                fams += [RepresentativeFamily(1, "q%d*df%d" % (j, j), CASIMIR,
                                              2, scale(df))
                         for j, df in ((1, cat.df1), (2, cat.df2))]
                fams += [RepresentativeFamily(1, "d(a%d*x%d)" % (i + 1, i + 1),
                                              X2SQ_X4, 1, d_of(x[i]))
                         for i in range(4)]
                fams += [RepresentativeFamily(
                    1, "b%d*x%d*df1" % (i + 1, i + 1), X2SQ_X4, 3,
                    (lambda xi: lambda b: cat.df1 * (b * xi))(x[i]))
                    for i in range(4)]
            elif k == 2:
                fams = [RepresentativeFamily(2, "p*zeta1^zeta2", CASIMIR, 4,
                                             scale(wedge(cat.zeta1, cat.zeta2))),
                        RepresentativeFamily(2, "q*df1^df2", CASIMIR, 4,
                                             scale(cat.df1df2))]
                fams += [RepresentativeFamily(2, "p%d*d(f1*zeta%d)" % (j, j),
                                              CASIMIR, 4,
                                              scale(de_rham(z * cat.f1)))
                         for j, z in ((1, cat.zeta1), (2, cat.zeta2))]
                fams += [RepresentativeFamily(2, "q%d*d(zeta%d)" % (j, j),
                                              CASIMIR, 2, scale(b))
                         for j, b in ((1, cat.beta1), (2, cat.beta2))]
                fams += [RepresentativeFamily(2, "d(a%d*x%d)^df1" % (i + 1, i + 1),
                                              X2SQ_X4, 3, d_wedge_df1(x[i]))
                         for i in range(4)]
            elif k == 3:
                fams = [RepresentativeFamily(3, "p%d*zeta2^d(zeta%d)" % (j, j),
                                             CASIMIR, 4,
                                             scale(wedge(cat.zeta2, b)))
                        for j, b in ((1, cat.beta1), (2, cat.beta2))]
                fams += [RepresentativeFamily(3, "q%d*df1^d(zeta%d)" % (j, j),
                                              CASIMIR, 4,
                                              scale(wedge(cat.df1, b)))
                         for j, b in ((1, cat.beta1), (2, cat.beta2))]
            elif k == 4:
                fams = [RepresentativeFamily(4, "p*mu", CASIMIR, 4,
                                             scale(cat.mu))]
            else:
                raise ValueError("degree out of range")
            for fam in fams:
                fam.cat = cat
            self._families[k] = fams
        return self._families[k]

    def verify_representatives(self, k, w):
        """Cycles, independent modulo boundaries, count equals dimension."""
        from .poisson import delta_pi
        reps = self.representative_basis(k, w)
        dim = self.homology_dimension(k, w)
        all_cycles = all(delta_pi(r, self.cat.poisson).is_zero() for r in reps)
        basis = self.basis(k, w)
        ech = self.boundary_echelon(k, w).clone()
        independent = True
        for r in reps:
            if not r:
                independent = False
                break
            if not ech.insert(basis.coords(r)):
                independent = False
                break
        return RepresentativeVerdict(k, w, len(reps), dim, all_cycles, independent)

    # -- module structure over the Casimir ring ------------------------

    def module_structure_relations(self, w_max):
        """The certified relation list; each entry is weight-homogeneous."""
        cat = self.cat
        x = self._x
        rad = (x[1] * x[1] + x[3] * x[3]) * 2      # 2(x2^2 + x4^2)
        combos = [("f1*x1+f2*x2", cat.f1 * x[0] + cat.f2 * x[1]),
                  ("f2*x1-f1*x2", cat.f2 * x[0] - cat.f1 * x[1]),
                  ("f1*x3+f2*x4", cat.f1 * x[2] + cat.f2 * x[3]),
                  ("f2*x3-f1*x4", cat.f2 * x[2] - cat.f1 * x[3])]
        rels = []

        def form0(p):
            return GradedElement.from_polynomial(p)

        for i in range(4):
            mult = cat.f1 * x[i] + rad * x[i]
            rels.append(("H0: f1*x%d = -2(x2^2+x4^2)*x%d" % (i + 1, i + 1),
                         0, form0(mult), True))
            rels.append(("H1: f1*d(x%d) class = -2(x2^2+x4^2) class" % (i + 1),
                         1, de_rham(form0(mult)), True))
            rels.append(("H1: f1*x%d*df1 = -2(x2^2+x4^2)*x%d*df1" % (i + 1, i + 1),
                         1, cat.df1 * mult, True))
            rels.append(("H2: f1*d(x%d)^df1 class" % (i + 1),
                         2, wedge(de_rham(form0(mult)), cat.df1), True))
            rels.append(("H2: f1*d(x%d)^df2 class" % (i + 1),
                         2, wedge(de_rham(form0(mult)), cat.df2), True))
        for name, p in combos:
            rels.append(("H0: %s = 0" % name, 0, form0(p), True))
            rels.append(("H1: d(%s) = 0" % name, 1, de_rham(form0(p)), True))
            rels.append(("H1: (%s)*df1 = 0" % name, 1, cat.df1 * p, True))
            rels.append(("H2: d(%s)^df1 = 0" % name, 2,
                         wedge(de_rham(form0(p)), cat.df1), True))
            rels.append(("H2: d(%s)^df2 = 0" % name, 2,
                         wedge(de_rham(form0(p)), cat.df2), True))
        for i in range(4):
            rels.append(("H0: x%d itself is NOT a boundary" % (i + 1),
                         0, form0(x[i]), False))
        return [(name, k, form, expect) for name, k, form, expect in rels
                if not form or form.weights()[0] <= w_max]

    def module_structure_check(self, w_max):
        results = []
        for name, k, form, expect in self.module_structure_relations(w_max):
            w = form.weights()[0]
            results.append(RelationResult(name, k, w, self.is_boundary(form), expect))
        return results

    # -- induced de Rham complex on homology ----------------------------

    def _class_solver(self, k, w):
        """Tracked echelon over [representatives..., boundaries...] of (k, w)."""
        reps = self.representative_basis(k, w)
        basis = self.basis(k, w)
        ech = QEchelon(track=True)
        for r in reps:
            if not ech.insert(basis.coords(r)):
                raise InvariantViolation("dependent representatives at (%d, %d)"
                                         % (k, w))
        if k < 4:
            for col in self.delta_matrix(k + 1, w).columns():
                ech.insert(col)
        return reps, ech

    def induced_de_rham(self, w_max):
        """Dimension table of the de Rham cohomology of (H_., d) per (k, w)."""
        table = {}
        for w in range(w_max + 1):
            reps = {k: self.representative_basis(k, w) for k in range(5)}
            solver = {}
            ranks = {}
            for k in range(4):
                if not reps[k]:
                    ranks[k] = 0
                    continue
                if k + 1 not in solver:
                    solver[k + 1] = self._class_solver(k + 1, w)
                target_reps, ech = solver[k + 1]
                rows = QEchelon()
                for r in reps[k]:
                    dr = de_rham(r)
                    if dr.is_zero():
                        continue
                    coords = ech.solve(self.basis(k + 1, w).coords(dr))
                    if coords is None:
                        raise InvariantViolation(
                            "d of a cycle did not decompose at (%d, %d)" % (k, w))
                    vec = {i: c for i, c in coords.items() if i < len(target_reps)}
                    if vec:
                        rows.insert(vec)
                ranks[k] = rows.rank
            ranks[4] = 0
            for k in range(5):
                dim_h = len(reps[k])
                incoming = ranks[k - 1] if k else 0
                table[(k, w)] = dim_h - ranks[k] - incoming
        return table

    # -- transfer to cohomology ------------------------------------------

    def cohomology_transfer(self, h):
        """star_inv of a verified homology cycle; checks it is d_pi-closed."""
        from .poisson import d_pi, delta_pi
        if not delta_pi(h, self.cat.poisson).is_zero():
            raise ValueError("input is not a delta_pi cycle")
        v = star_inv(h)
        if not d_pi(v, self.cat.poisson).is_zero():
            raise InvariantViolation("transfer produced a non-closed multivector")
        return v

    # -- volume deformation normalizer ------------------------------------

    def normalize_volume_deformation(self, g, w_max):
        """Rewrite g*pi as q*pi modulo a formal diffeomorphism, weight by weight.

        At each weight i the residual slice g_i is split as q_i + d_pi-exact
        (q_i over the Casimir monomials), the correction field is certified
        exactly, and the running bivector is pulled back along the time-1
        flow, truncated above w_max.  Returns (q, transcript).
        """
        from .poisson import d_pi
        cat = self.cat
        if not isinstance(g, Polynomial):
            raise TypeError("g must be a Polynomial")
        c0 = g.constant_term()
        if c0 <= 0:
            raise ValueError("g must have positive constant term")
        g = g.truncate(w_max)
        current = g
        transcript = []
        for i in range(1, w_max + 1):
            gi = current.homogeneous_part(i)
            if gi.is_zero():
                continue
            fmonos = f_monomials(cat, i)
            target = cat.df1df2 * gi
            targ_basis = self.basis(2, i + 4)
            # first try: already a pure Casimir slice, no correction needed
            casimir_ech = QEchelon(track=True)
            for _, fm in fmonos:
                casimir_ech.insert(targ_basis.coords(cat.df1df2 * fm))
            direct = casimir_ech.solve(targ_basis.coords(target))
            if direct is not None:
                continue
            qi, corrector = self._solve_deformation_step(gi, i)
            # exact certificates, never trusted silently
            residual = gi - qi
            if d_pi(corrector, cat.poisson) != cat.pi * residual:
                raise InvariantViolation("correction field certificate failed "
                                         "at weight %d" % i)
            for df in (cat.df1, cat.df2):
                if not contract(corrector, df).is_zero():
                    raise InvariantViolation("correction field is not tangent "
                                             "to the fibration at weight %d" % i)
            transcript.append(DeformationStep(i, qi, corrector, True))
            # pull the bivector back along the time-1 flow of -corrector/g
            flow_field = (corrector * current.inverse(w_max)) * Q(-1)
            flow_field = flow_field.truncate_weight(w_max)
            bivec = self._exp_lie(flow_field, cat.pi * current, w_max)
            current = self._conformal_factor(bivec, w_max)
        q = current
        for d, part in q.homogeneous_parts().items():
            if d == 0:
                continue
            fmonos = f_monomials(cat, d)
            span = QEchelon()
            basis0 = self.basis(0, d)
            for _, fm in fmonos:
                span.insert(basis0.coords(GradedElement.from_polynomial(fm)))
            if not span.contains(basis0.coords(GradedElement.from_polynomial(part))):
                raise InvariantViolation("normalized factor is not a Casimir "
                                         "series at degree %d" % d)
        return q, transcript

    def _solve_deformation_step(self, gi, i):
        """Find q_i (Casimir slice) and X with d_pi(X) = (g_i - q_i) pi,
        iota_X df1 = iota_X df2 = 0, by one augmented exact solve."""
        from .poisson import delta_pi
        cat = self.cat
        w = i + 4
        basis3 = self.basis(3, w)
        basis2 = self.basis(2, w)
        fun_basis = self.basis(0, i + 2)
        n2, n0 = len(basis2), len(fun_basis)

        def extended(two_form, c1, c2):
            vec = dict(basis2.coords(two_form))
            for off, fn in ((n2, c1), (n2 + n0, c2)):
                if fn is None:
                    continue
                for idx, val in fun_basis.coords(fn).items():
                    vec[off + idx] = val
            return vec

        fmonos = f_monomials(cat, i)
        gens = []
        for _, fm in fmonos:
            gens.append(extended(cat.df1df2 * fm, None, None))
        tau_elems = []
        for j in range(len(basis3)):
            tau = basis3.element(j)
            xt = star_inv(tau)
            gens.append(extended(delta_pi(tau, cat.poisson),
                                 GradedElement.from_polynomial(
                                     contract(xt, cat.df1).coefficient(())),
                                 GradedElement.from_polynomial(
                                     contract(xt, cat.df2).coefficient(()))))
            tau_elems.append(tau)
        ech = QEchelon(track=True)
        for vec in gens:
            ech.insert(vec)
        coords = ech.solve(extended(cat.df1df2 * gi, None, None))
        if coords is None:
            raise InvariantViolation("deformation step unsolvable at weight %d "
                                     "(contradicts the classification)" % i)
        qi = Polynomial.zero(4)
        tau = GradedElement.zero(4, 3, FORM)
        for gen_index, coeff in coords.items():
            if gen_index < len(fmonos):
                qi = qi + fmonos[gen_index][1] * coeff
            else:
                tau = tau + tau_elems[gen_index - len(fmonos)] * coeff
        return qi, star_inv(tau)

    def _exp_lie(self, field, bivec, w_max):
        """Pullback of a bivector along the time-1 flow of a positive-weight field."""
        from .poisson import schouten
        result = bivec.truncate_weight(w_max)
        term = result
        fact = 1
        for m in range(1, w_max + 2):
            term = schouten(field, term).truncate_weight(w_max)
            if term.is_zero():
                break
            fact *= m
            result = result + term * Q(1, fact)
        return result

    def _conformal_factor(self, bivec, w_max):
        """Exact g with bivec = g * pi; raises if the bivector left the ray."""
        cat = self.cat
        two_form = star(bivec)
        out = Polynomial.zero(4)
        for w in sorted(set(two_form.weights())):
            d = w - 4
            if d < 0 or d > w_max:
                raise InvariantViolation("conformal factor outside range")
            basisw = self.basis(2, w)
            ech = QEchelon(track=True)
            monos = sorted(monomials_of_degree(4, d), key=monomial_key)
            for m in monos:
                ech.insert(basisw.coords(cat.df1df2 * Polynomial.monomial(4, m)))
            coords = ech.solve(basisw.coords(two_form.weight_slice(w)))
            if coords is None:
                raise InvariantViolation("flow pullback is not a multiple of pi")
            for idx, c in coords.items():
                out = out + Polynomial.monomial(4, monos[idx], c)
        return out


_ENGINE = None


def default_engine():
    global _ENGINE
    if _ENGINE is None:
        _ENGINE = HomologyEngine()
    return _ENGINE


def expected_homology_series(k):
    return H_SERIES[k]


def expected_kernel_series(k):
    return KERNEL_SERIES[k]


def printed_kernel3_series():
    return KERNEL3_PRINTED

"""Exterior algebra of formal forms and multivector fields on R^n.

A graded element of exterior degree k is a sparse map from strictly
increasing axis tuples (i_1 < ... < i_k, axes 1-based) to polynomial
coefficients.  Forms are spanned by dx_{i_1} ^ ... ^ dx_{i_k}, multivectors
by e_{i_1} ^ ... ^ e_{i_k} with e_i = d/dx_i.

Grading: the scaling weight of a term is (coefficient degree + k) for
forms and (coefficient degree - k) for multivectors, i.e. the eigenvalue
of pullback under scalar multiplication.

Contraction pairs the two kinds through the determinant pairing
<e_J, dx_I> = det(delta_{j,i}); equivalently iota_{u_1^...^u_k} applies
the single-factor insertions first factor innermost.  With this
convention star(v) := iota_v(mu) sends e_1^...^e_n to 1 and the Lefschetz
bivector to df_1 ^ df_2.
"""

from itertools import combinations

from .polynomials import Polynomial, monomial_key, monomials_of_degree


FORM = "form"
MULTIVECTOR = "multivector"


def _merge_sign(a, b):
    """Sorted union of disjoint index tuples and the sign of the merge; None if overlap."""
    if set(a) & set(b):
        return None, 0
    sign = 1
    for x in b:
        # count members of a greater than x: each is one transposition
        bigger = sum(1 for y in a if y > x)
        if bigger & 1:
            sign = -sign
    return tuple(sorted(a + b)), sign


class GradedElement:
    """Exterior-degree-k form or multivector with Polynomial coefficients."""

    __slots__ = ("n", "degree", "kind", "comps")

    def __init__(self, n, degree, kind, comps=None):
        if kind not in (FORM, MULTIVECTOR):
            raise ValueError("kind must be form or multivector")
        if not 0 <= degree <= n:
            raise ValueError("exterior degree out of range")
        self.n = n
        self.degree = degree
        self.kind = kind
        clean = {}
        if comps:
            for idx, p in comps.items():
                idx = tuple(idx)
                if len(idx) != degree or list(idx) != sorted(set(idx)) \
                        or (idx and not (1 <= idx[0] and idx[-1] <= n)):
                    raise ValueError("bad exterior index %r" % (idx,))
                if not isinstance(p, Polynomial):
                    p = Polynomial.constant(n, p)
                if p:
                    clean[idx] = p
        self.comps = clean

    # -- constructors --------------------------------------------------

    @classmethod
    def zero(cls, n, degree, kind):
        return cls(n, degree, kind)

    @classmethod
    def from_polynomial(cls, p, kind=FORM):
        return cls(p.n, 0, kind, {(): p})

    @classmethod
    def basis(cls, n, kind, idx, coeff=None):
        idx = tuple(idx)
        c = coeff if coeff is not None else Polynomial.constant(n, 1)
        return cls(n, len(idx), kind, {idx: c})

    # -- structure -----------------------------------------------------

    def is_zero(self):
        return not self.comps

    def __bool__(self):
        return bool(self.comps)

    def coefficient(self, idx):
        return self.comps.get(tuple(idx), Polynomial.zero(self.n))

    def _like(self, comps):
        out = GradedElement.__new__(GradedElement)
        out.n, out.degree, out.kind = self.n, self.degree, self.kind
        out.comps = {i: p for i, p in comps.items() if p}
        return out

    def __add__(self, other):
        self._check(other)
        comps = dict(self.comps)
        for idx, p in other.comps.items():
            s = comps.get(idx)
            s = p if s is None else s + p
            if s:
                comps[idx] = s
            else:
                comps.pop(idx, None)
        return self._like(comps)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return self._like({i: -p for i, p in self.comps.items()})

    def __mul__(self, scalar):
        """Multiplication by a Polynomial or rational scalar."""
        if isinstance(scalar, GradedElement):
            raise TypeError("use wedge() for exterior products")
        return self._like({i: p * scalar for i, p in self.comps.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        return (isinstance(other, GradedElement) and self.n == other.n
                and self.degree == other.degree and self.kind == other.kind
                and self.comps == other.comps)

    def __hash__(self):
        return hash((self.n, self.degree, self.kind,
                     frozenset(self.comps.items())))

    def _check(self, other, same_degree=True):
        if not isinstance(other, GradedElement):
            raise TypeError("expected a GradedElement")
        if self.n != other.n or self.kind != other.kind:
            raise ValueError("kind or dimension mismatch")
        if same_degree and self.degree != other.degree:
            raise ValueError("degree mismatch")

    # -- grading ---------------------------------------------------------

    def term_weight(self, coeff_degree):
        return coeff_degree + self.degree if self.kind == FORM else coeff_degree - self.degree

    def weights(self):
        ws = set()
        for p in self.comps.values():
            for d in p.homogeneous_parts():
                ws.add(self.term_weight(d))
        return sorted(ws)

    def weight_slice(self, w):
        """Component of scaling weight exactly w."""
        d = w - self.degree if self.kind == FORM else w + self.degree
        if d < 0:
            return GradedElement.zero(self.n, self.degree, self.kind)
        return self._like({i: p.homogeneous_part(d) for i, p in self.comps.items()})

    def map_coefficients(self, fn):
        return self._like({i: fn(p) for i, p in self.comps.items()})

    def truncate_weight(self, w_max):
        d = w_max - self.degree if self.kind == FORM else w_max + self.degree
        return self.map_coefficients(lambda p: p.truncate(d))

    def __str__(self):
        if not self.comps:
            return "0"
        atom = "dx" if self.kind == FORM else "e"
        bits = []
        for idx in sorted(self.comps):
            p = self.comps[idx]
            if idx:
                group = "[" + "^".join("%s%d" % (atom, i) for i in idx) + "]"
                bits.append("(%s)*%s" % (p, group))
            else:
                bits.append("(%s)" % p)
        return " + ".join(bits)

    __repr__ = __str__


# -- products and differentials -----------------------------------------


def wedge(a, b):
    """Exterior product; same kind required, degree overflow gives zero."""
    a._check(b, same_degree=False)
    k = a.degree + b.degree
    if k > a.n:
        return GradedElement.zero(a.n, a.n, a.kind)
    comps = {}
    for ia, pa in a.comps.items():
        for ib, pb in b.comps.items():
            idx, sign = _merge_sign(ia, ib)
            if idx is None:
                continue
            term = pa * pb
            if sign < 0:
                term = -term
            s = comps.get(idx)
            s = term if s is None else s + term
            if s:
                comps[idx] = s
            else:
                comps.pop(idx, None)
    return GradedElement(a.n, k, a.kind, comps)


def wedge_all(elems):
    out = elems[0]
    for e in elems[1:]:
        out = wedge(out, e)
    return out


def de_rham(a):
    """The de Rham differential on forms."""
    if a.kind != FORM:
        raise ValueError("de_rham acts on forms")
    if a.degree == a.n:
        return GradedElement.zero(a.n, a.n, FORM)
    comps = {}
    for idx, p in a.comps.items():
        for i in range(1, a.n + 1):
            if i in idx:
                continue
            dp = p.diff(i)
            if not dp:
                continue
            # insert dx_i in front: sign from moving past smaller indices
            pos = sum(1 for j in idx if j < i)
            new = tuple(sorted(idx + (i,)))
            if pos & 1:
                dp = -dp
            s = comps.get(new)
            s = dp if s is None else s + dp
            if s:
                comps[new] = s
            else:
                comps.pop(new, None)
    return GradedElement(a.n, a.degree + 1, FORM, comps)


def _insert_single(i, target_idx):
    """Contract a single axis-i factor into a sorted index tuple: (sign, rest) or None."""
    if i not in target_idx:
        return None
    pos = target_idx.index(i)
    rest = target_idx[:pos] + target_idx[pos + 1:]
    return (-1 if pos & 1 else 1), rest


def contract(u, v):
    """Interior product iota_u(v) of complementary kinds, deg(u) <= deg(v).

    The result has the kind of v.  Factors of u are inserted first factor
    innermost, which realizes the determinant pairing on equal degrees.
    """
    if not isinstance(u, GradedElement) or not isinstance(v, GradedElement):
        raise TypeError("expected GradedElements")
    if u.n != v.n or u.kind == v.kind:
        raise ValueError("contraction needs complementary kinds")
    if u.degree > v.degree:
        raise ValueError("contraction degree overflow")
    comps = {}
    for iu, pu in u.comps.items():
        for iv, pv in v.comps.items():
            sign = 1
            rest = iv
            ok = True
            for i in iu:
                hit = _insert_single(i, rest)
                if hit is None:
                    ok = False
                    break
                s, rest = hit
                sign *= s
            if not ok:
                continue
            term = pu * pv
            if sign < 0:
                term = -term
            acc = comps.get(rest)
            acc = term if acc is None else acc + term
            if acc:
                comps[rest] = acc
            else:
                comps.pop(rest, None)
    return GradedElement(v.n, v.degree - u.degree, v.kind, comps)


def volume_form(n):
    return GradedElement.basis(n, FORM, tuple(range(1, n + 1)))


def star(v, mu=None):
    """The volume isomorphism X -> iota_X(mu) from multivectors to forms."""
    if v.kind != MULTIVECTOR:
        raise ValueError("star acts on multivectors")
    if mu is None:
        mu = volume_form(v.n)
    return contract(v, mu)


def _star_signs(n):
    signs = {}
    for k in range(n + 1):
        for idx in combinations(range(1, n + 1), k):
            image = star(GradedElement.basis(n, MULTIVECTOR, idx))
            (im_idx, p), = image.comps.items()
            signs[im_idx] = (idx, p.constant_term())
    return signs


_STAR_INV_CACHE = {}


def star_inv(a):
    """Inverse of star: forms back to multivectors."""
    if a.kind != FORM:
        raise ValueError("star_inv acts on forms")
    if a.n not in _STAR_INV_CACHE:
        _STAR_INV_CACHE[a.n] = _star_signs(a.n)
    table = _STAR_INV_CACHE[a.n]
    comps = {}
    for idx, p in a.comps.items():
        target, sign = table[idx]
        comps[target] = p * sign
    return GradedElement(a.n, a.n - a.degree, MULTIVECTOR, comps)


def lie_derivative(v, g):
    """Lie derivative along a vector field of a Polynomial or a form (Cartan)."""
    if v.kind != MULTIVECTOR or v.degree != 1:
        raise ValueError("lie_derivative needs a vector field")
    if isinstance(g, Polynomial):
        out = contract(v, de_rham(GradedElement.from_polynomial(g)))
        return out.coefficient(())
    if g.kind != FORM:
        raise ValueError("lie_derivative acts on polynomials or forms")
    return contract(v, de_rham(g)) + de_rham(contract(v, g))


# -- weight-slice bases ------------------------------------------------------


class WeightSliceBasis:
    """Deterministic monomial basis of one (exterior degree, weight) slice.

    Elements are (index tuple, monomial) pairs, ordered lexicographically on
    the index tuple and then by the local monomial order, greatest first.
    """

    __slots__ = ("n", "degree", "weight", "kind", "elements", "_pos")

    def __init__(self, n, degree, weight, kind):
        self.n = n
        self.degree = degree
        self.weight = weight
        self.kind = kind
        elements = []
        if 0 <= degree <= n:
            d = weight - degree if kind == FORM else weight + degree
            if d >= 0:
                monos = sorted(monomials_of_degree(n, d), key=monomial_key)
                for idx in combinations(range(1, n + 1), degree):
                    for m in monos:
                        elements.append((idx, m))
        self.elements = elements
        self._pos = {e: i for i, e in enumerate(elements)}

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def element(self, i):
        idx, m = self.elements[i]
        return GradedElement.basis(self.n, self.kind, idx,
                                   Polynomial.monomial(self.n, m))

    def index_of(self, idx, m):
        return self._pos[(tuple(idx), tuple(m))]

    def coords(self, elem):
        """Sparse coordinates of a slice-homogeneous element; error if it leaves the slice."""
        if elem.kind != self.kind or elem.degree != self.degree or elem.n != self.n:
            raise ValueError("element does not match slice")
        out = {}
        for idx, p in elem.comps.items():
            for m, c in p.terms.items():
                key = (idx, m)
                if key not in self._pos:
                    raise ValueError("element has a term outside the (%d,%d) slice"
                                     % (self.degree, self.weight))
                out[self._pos[key]] = c
        return out

    def from_coords(self, vec):
        """Element from dense list or sparse dict of coordinates."""
        items = vec.items() if isinstance(vec, dict) else enumerate(vec)
        comps = {}
        for i, c in items:
            if not c:
                continue
            idx, m = self.elements[i]
            comps.setdefault(idx, {})[m] = c
        return GradedElement(self.n, self.degree, self.kind,
                             {idx: Polynomial(self.n, t) for idx, t in comps.items()})


_BASIS_CACHE = {}


def enumerate_basis(degree, weight, kind=FORM, n=4):
    """Cached WeightSliceBasis for the (degree, weight) slice."""
    key = (n, degree, weight, kind)
    if key not in _BASIS_CACHE:
        _BASIS_CACHE[key] = WeightSliceBasis(n, degree, weight, kind)
    return _BASIS_CACHE[key]

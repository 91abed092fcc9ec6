"""Multivariate polynomials with exact rational coefficients.

These are the finite truncations of the formal power series ring
R[[x_1, ..., x_n]].  A monomial is a tuple of n non-negative exponents;
a polynomial is a sparse map monomial -> nonzero rational.

Monomials carry the local ordering used for standard-basis reductions:
lower total degree is GREATER (so the constant monomial is the maximum),
and ties are broken on the first differing exponent, larger exponent
winning.  This is the ordering ">" used for leading monomials.
"""

from functools import cmp_to_key

from .rationals import QONE, QZERO, as_q

Monomial = tuple


def monomial_degree(m):
    return sum(m)


def monomial_mul(a, b):
    if len(a) != len(b):
        raise ValueError("monomial dimension mismatch")
    return tuple(x + y for x, y in zip(a, b))


def monomial_cmp(a, b):
    """Local order: return 1 if a > b, -1 if a < b, 0 if equal."""
    if len(a) != len(b):
        raise ValueError("monomial dimension mismatch")
    da, db = sum(a), sum(b)
    if da != db:
        return 1 if da < db else -1
    for x, y in zip(a, b):
        if x != y:
            return 1 if x > y else -1
    return 0


# Sorting with this key lists monomials in decreasing local order
# (greatest first), which is the canonical term order everywhere.
monomial_key = cmp_to_key(lambda a, b: -monomial_cmp(a, b))


def monomials_of_degree(n, d):
    """All degree-d monomials in n variables, greatest first under the local order."""
    if d < 0:
        return []
    out = []

    def rec(prefix, rest, left):
        if rest == 1:
            out.append(prefix + (left,))
            return
        for e in range(left, -1, -1):
            rec(prefix + (e,), rest - 1, left - e)

    rec((), n, d)
    # same degree, so the local order is plain exponent-lex, largest first
    return out


class Polynomial:
    """Immutable sparse polynomial over the rationals."""

    __slots__ = ("n", "terms", "_hash")

    def __init__(self, n, terms=None):
        self.n = n
        clean = {}
        if terms:
            for m, c in terms.items():
                if len(m) != n or any(e < 0 for e in m):
                    raise ValueError("bad monomial %r for dimension %d" % (m, n))
                c = as_q(c)
                if c != 0:
                    clean[m] = c
        self.terms = clean
        self._hash = None

    # -- constructors ------------------------------------------------

    @classmethod
    def zero(cls, n):
        return cls(n)

    @classmethod
    def constant(cls, n, c):
        return cls(n, {(0,) * n: as_q(c)})

    @classmethod
    def variable(cls, n, i):
        """x_i, with i in 1..n."""
        if not 1 <= i <= n:
            raise ValueError("variable index out of range")
        m = tuple(1 if j == i - 1 else 0 for j in range(n))
        return cls(n, {m: QONE})

    @classmethod
    def monomial(cls, n, m, c=QONE):
        return cls(n, {tuple(m): as_q(c)})

    # -- queries -----------------------------------------------------

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def degree(self):
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def is_homogeneous(self):
        degs = {sum(m) for m in self.terms}
        return len(degs) <= 1

    def homogeneous_part(self, d):
        return Polynomial(self.n, {m: c for m, c in self.terms.items() if sum(m) == d})

    def homogeneous_parts(self):
        """Map degree -> homogeneous component, nonzero components only."""
        parts = {}
        for m, c in self.terms.items():
            parts.setdefault(sum(m), {})[m] = c
        return {d: Polynomial(self.n, t) for d, t in sorted(parts.items())}

    def constant_term(self):
        return self.terms.get((0,) * self.n, QZERO)

    def coefficient(self, m):
        return self.terms.get(tuple(m), QZERO)

    def leading_term(self):
        """(monomial, coefficient) maximal under the local order; error on zero."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        m = min(self.terms, key=monomial_key)
        return m, self.terms[m]

    # -- arithmetic --------------------------------------------------

    def _check(self, other):
        if self.n != other.n:
            raise ValueError("polynomial dimension mismatch")

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(self.n, other)
        self._check(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            s = terms.get(m, QZERO) + c
            if s:
                terms[m] = s
            else:
                terms.pop(m, None)
        out = Polynomial.__new__(Polynomial)
        out.n, out.terms, out._hash = self.n, terms, None
        return out

    __radd__ = __add__

    def __neg__(self):
        out = Polynomial.__new__(Polynomial)
        out.n = self.n
        out.terms = {m: -c for m, c in self.terms.items()}
        out._hash = None
        return out

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(self.n, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            c = as_q(other)
            if c == 0:
                return Polynomial.zero(self.n)
            out = Polynomial.__new__(Polynomial)
            out.n = self.n
            out.terms = {m: v * c for m, v in self.terms.items()}
            out._hash = None
            return out
        self._check(other)
        terms = {}
        for ma, ca in self.terms.items():
            for mb, cb in other.terms.items():
                m = monomial_mul(ma, mb)
                s = terms.get(m, QZERO) + ca * cb
                if s:
                    terms[m] = s
                else:
                    del terms[m]
        out = Polynomial.__new__(Polynomial)
        out.n, out.terms, out._hash = self.n, terms, None
        return out

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative exponent")
        out = Polynomial.constant(self.n, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    def diff(self, i):
        """Partial derivative with respect to x_i (i in 1..n)."""
        if not 1 <= i <= self.n:
            raise ValueError("variable index out of range")
        j = i - 1
        terms = {}
        for m, c in self.terms.items():
            e = m[j]
            if e:
                dm = m[:j] + (e - 1,) + m[j + 1:]
                terms[dm] = terms.get(dm, QZERO) + c * e
        return Polynomial(self.n, terms)

    def truncate(self, d):
        """Drop every term of total degree > d."""
        return Polynomial(self.n, {m: c for m, c in self.terms.items() if sum(m) <= d})

    def inverse(self, d):
        """Power-series inverse 1/self through total degree d; nonzero constant term required."""
        c = self.constant_term()
        if c == 0:
            raise ValueError("not invertible: zero constant term")
        u = (Polynomial.constant(self.n, 1) - self * (QONE / c)).truncate(d)
        # 1/self = (1/c) * sum u^m, u has positive valuation
        acc = Polynomial.constant(self.n, 1)
        pw = Polynomial.constant(self.n, 1)
        for _ in range(d):
            pw = (pw * u).truncate(d)
            if pw.is_zero():
                break
            acc = acc + pw
        return acc * (QONE / c)

    # -- comparison / hashing / printing ------------------------------

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            if isinstance(other, float):
                return NotImplemented
            return self.terms == Polynomial.constant(self.n, other).terms
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, frozenset(self.terms.items())))
        return self._hash

    def sorted_terms(self):
        """Terms listed greatest-monomial-first under the local order."""
        return [(m, self.terms[m]) for m in sorted(self.terms, key=monomial_key)]

    def __str__(self):
        if not self.terms:
            return "0"
        bits = []
        for m, c in self.sorted_terms():
            factors = ["x%d%s" % (i + 1, "" if e == 1 else "^%d" % e)
                       for i, e in enumerate(m) if e]
            if not factors:
                bits.append(_coeff_str(c))
            elif c == 1:
                bits.append("*".join(factors))
            elif c == -1:
                bits.append("-" + "*".join(factors))
            else:
                bits.append(_coeff_str(c) + "*" + "*".join(factors))
        s = bits[0]
        for b in bits[1:]:
            s += " - " + b[1:] if b.startswith("-") else " + " + b
        return s

    def __repr__(self):
        return "Polynomial(%d, %s)" % (self.n, str(self))


def _coeff_str(c):
    return str(c.numerator) if c.denominator == 1 else "%s/%s" % (c.numerator, c.denominator)

"""Exact rational linear algebra over sparse data.

Everything here is exact: no floats, no unchecked modular shortcuts.
Rank, membership and solving all go through incremental rational echelon
rows (gmpy2 rationals keep entries reduced); columns are inserted sparsest
first, which is what keeps elimination fill-in tame on the banded slice
matrices.  Re-running with permuted input yields the same rank and an
equivalent kernel span.
"""

from bisect import insort

from .rationals import Q, QZERO, as_q


class QEchelon:
    """Rational echelon rows with optional coordinates over inserted generators."""

    __slots__ = ("rows", "track", "count", "pivots")

    def __init__(self, track=False):
        self.rows = {}     # pivot col -> (main dict, aug dict)
        self.track = track
        self.count = 0
        self.pivots = []

    @property
    def rank(self):
        return len(self.rows)

    def _reduce(self, vec, aug):
        # invariant: each stored row satisfies main = sum raug[i] * generator_i,
        # so reducing vec by t*main subtracts t*raug from its expansion
        for p in self.pivots:
            t = vec.get(p)
            if not t:
                continue
            main, raug = self.rows[p]
            t = t / main[p]
            for j, v in main.items():
                nv = vec.get(j, QZERO) - t * v
                if nv:
                    vec[j] = nv
                else:
                    vec.pop(j, None)
            if aug is not None:
                for j, v in raug.items():
                    nv = aug.get(j, QZERO) - t * v
                    if nv:
                        aug[j] = nv
                    else:
                        aug.pop(j, None)
        return vec, aug

    def insert(self, vec):
        """Insert generator; its coordinate index is the insertion count."""
        v = {j: as_q(c) for j, c in dict(vec).items() if c}
        aug = {self.count: Q(1)} if self.track else None
        self.count += 1
        v, aug = self._reduce(v, aug)
        if not v:
            return False
        p = min(v)
        self.rows[p] = (v, aug if aug is not None else {})
        insort(self.pivots, p)
        return True

    def solve(self, vec):
        """Coordinates of vec over the inserted generators, or None.

        Requires track=True.  The returned dict maps generator index ->
        rational coefficient with vec = sum coeff * generator.
        """
        if not self.track:
            raise ValueError("echelon was built without coordinate tracking")
        v = {j: as_q(c) for j, c in dict(vec).items() if c}
        v, aug = self._reduce(v, {})
        if v:
            return None
        return {j: -c for j, c in aug.items()}

    def clone(self):
        """Snapshot sharing the (immutable) stored rows."""
        out = QEchelon(track=self.track)
        out.rows = dict(self.rows)
        out.count = self.count
        out.pivots = list(self.pivots)
        return out

    def contains(self, vec):
        v = {j: as_q(c) for j, c in dict(vec).items() if c}
        v, _ = self._reduce(v, None)
        return not v

    def residual(self, vec):
        v = {j: as_q(c) for j, c in dict(vec).items() if c}
        v, _ = self._reduce(v, None)
        return v


class ExactMatrix:
    """Sparse exact matrix: entries (row, col) -> rational, no stored zeros."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows, cols, entries=None):
        self.rows = rows
        self.cols = cols
        clean = {}
        if entries:
            for (r, c), v in entries.items():
                if not (0 <= r < rows and 0 <= c < cols):
                    raise ValueError("entry out of bounds")
                v = as_q(v)
                if v:
                    clean[(r, c)] = v
        self.entries = clean

    @classmethod
    def from_columns(cls, columns, rows):
        """columns: list of sparse dicts row -> value."""
        entries = {}
        for c, col in enumerate(columns):
            for r, v in col.items():
                entries[(r, c)] = v
        return cls(rows, len(columns), entries)

    @classmethod
    def from_rows(cls, rowvecs, cols):
        entries = {}
        for r, row in enumerate(rowvecs):
            for c, v in enumerate(row):
                if v:
                    entries[(r, c)] = v
        return cls(len(rowvecs), cols, entries)

    def column(self, c):
        return {r: v for (r, cc), v in self.entries.items() if cc == c}

    def columns(self):
        cols = [{} for _ in range(self.cols)]
        for (r, c), v in self.entries.items():
            cols[c][r] = v
        return cols

    def transpose(self):
        return ExactMatrix(self.cols, self.rows,
                           {(c, r): v for (r, c), v in self.entries.items()})

    def is_zero(self):
        return not self.entries

    def matmul(self, other):
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        byrow = {}
        for (r, c), v in self.entries.items():
            byrow.setdefault(r, {})[c] = v
        bycol = {}
        for (r, c), v in other.entries.items():
            bycol.setdefault(c, {})[r] = v
        entries = {}
        for r, rv in byrow.items():
            for c, cv in bycol.items():
                s = QZERO
                if len(rv) <= len(cv):
                    for k, v in rv.items():
                        w = cv.get(k)
                        if w is not None:
                            s += v * w
                else:
                    for k, w in cv.items():
                        v = rv.get(k)
                        if v is not None:
                            s += v * w
                if s:
                    entries[(r, c)] = s
        return ExactMatrix(self.rows, other.cols, entries)

    def apply(self, vec):
        """Matrix times sparse column vector."""
        out = {}
        bycol = {}
        for (r, c), v in self.entries.items():
            bycol.setdefault(c, []).append((r, v))
        for c, x in vec.items():
            for r, v in bycol.get(c, ()):
                s = out.get(r, QZERO) + v * x
                if s:
                    out[r] = s
                else:
                    del out[r]
        return out

    def rank(self):
        ech = QEchelon()
        for col in sorted((c for c in self.columns() if c), key=len):
            ech.insert(col)
        return ech.rank

    def kernel_basis(self):
        """Exact basis of the right kernel, as sparse dicts col -> rational."""
        # Gauss-Jordan on the rows over Q, then read kernel off free columns.
        rows = {}
        for (r, c), v in self.entries.items():
            rows.setdefault(r, {})[c] = v
        reduced = []       # (pivot col, row dict) fully reduced rows
        for r in sorted(rows):
            vec = dict(rows[r])
            for p, prow in reduced:
                t = vec.get(p)
                if t:
                    t = t / prow[p]
                    for j, v in prow.items():
                        nv = vec.get(j, QZERO) - t * v
                        if nv:
                            vec[j] = nv
                        else:
                            vec.pop(j, None)
            if not vec:
                continue
            p = min(vec)
            # eliminate the new pivot from earlier rows (Jordan step)
            for q, prow in reduced:
                t = prow.get(p)
                if t:
                    t = t / vec[p]
                    for j, v in vec.items():
                        nv = prow.get(j, QZERO) - t * v
                        if nv:
                            prow[j] = nv
                        else:
                            prow.pop(j, None)
            reduced.append((p, vec))
        pivot_cols = {p for p, _ in reduced}
        basis = []
        for j in range(self.cols):
            if j in pivot_cols:
                continue
            vec = {j: Q(1)}
            for p, prow in reduced:
                coef = prow.get(j)
                if coef:
                    vec[p] = -coef / prow[p]
            basis.append(vec)
        return basis


def rank_kernel(m):
    """(rank, kernel basis) with rank + len(kernel) = cols."""
    kernel = m.kernel_basis()
    return m.cols - len(kernel), kernel


def membership(v, span):
    """Coordinates of v in the span of the given vectors, or None.

    Vectors may be dense sequences or sparse dicts of rationals.
    """
    ech = QEchelon(track=True)
    for s in span:
        ech.insert(_as_sparse(s))
    coords = ech.solve(_as_sparse(v))
    if coords is None:
        return None
    return [coords.get(i, QZERO) for i in range(len(span))]


def quotient_dim(ambient, sub):
    """dim span(ambient) - dim span(sub); sub must lie inside span(ambient)."""
    amb = QEchelon()
    for a in ambient:
        amb.insert(_as_sparse(a))
    sech = QEchelon()
    for s in sub:
        sv = _as_sparse(s)
        if not amb.contains(sv):
            raise ValueError("subspace vector outside the ambient span")
        sech.insert(sv)
    return amb.rank - sech.rank


def _as_sparse(v):
    if isinstance(v, dict):
        return v
    return {i: x for i, x in enumerate(v) if x}

"""Dense exact linear algebra over Q or a number field.

Echelon forms use the leftmost-pivot, scaled-to-monic convention so that
bases are canonical and can be compared exactly.
"""

from __future__ import annotations

from fractions import Fraction

from .numberfield import QQ, NFElement, minimal_polynomial
from .poly import UniPoly


def _is_zero(x):
    if isinstance(x, (int, Fraction)):
        return x == 0
    return x.is_zero()


class Matrix:
    """Row-major dense matrix over Q or a NumberField."""

    __slots__ = ("field", "rows", "cols", "entries")

    def __init__(self, field, entries, cols=None):
        self.field = field
        self.entries = [[field.coerce(x) for x in row] for row in entries]
        self.rows = len(self.entries)
        if self.rows:
            self.cols = len(self.entries[0])
            assert all(len(r) == self.cols for r in self.entries), "ragged rows"
        else:
            self.cols = cols if cols is not None else 0

    # -- constructors ---------------------------------------------------

    @staticmethod
    def identity(field, n):
        return Matrix(field, [[field.one if i == j else field.zero for j in range(n)]
                              for i in range(n)])

    @staticmethod
    def zero(field, rows, cols):
        return Matrix(field, [[field.zero] * cols for _ in range(rows)], cols=cols)

    def copy(self):
        m = Matrix.__new__(Matrix)
        m.field = self.field
        m.entries = [row[:] for row in self.entries]
        m.rows, m.cols = self.rows, self.cols
        return m

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other):
        return (isinstance(other, Matrix) and self.rows == other.rows
                and self.cols == other.cols and self.entries == other.entries)

    def __repr__(self):
        return f"Matrix({self.rows}x{self.cols} over {self.field!r})"

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        assert (self.rows, self.cols) == (other.rows, other.cols)
        return Matrix(self.field, [[a + b for a, b in zip(r1, r2)]
                                   for r1, r2 in zip(self.entries, other.entries)],
                      cols=self.cols)

    def __sub__(self, other):
        assert (self.rows, self.cols) == (other.rows, other.cols)
        return Matrix(self.field, [[a - b for a, b in zip(r1, r2)]
                                   for r1, r2 in zip(self.entries, other.entries)],
                      cols=self.cols)

    def __neg__(self):
        return Matrix(self.field, [[-a for a in r] for r in self.entries], cols=self.cols)

    def scale(self, c):
        c = self.field.coerce(c)
        return Matrix(self.field, [[a * c for a in r] for r in self.entries], cols=self.cols)

    def __mul__(self, other):
        if isinstance(other, Matrix):
            assert self.cols == other.rows, "size mismatch"
            zero = self.field.zero
            ot = list(zip(*other.entries)) if other.rows else []
            out = []
            for r in self.entries:
                row = []
                for c in ot:
                    acc = zero
                    for a, b in zip(r, c):
                        if not _is_zero(a) and not _is_zero(b):
                            acc = acc + a * b
                    row.append(acc)
                out.append(row)
            return Matrix(self.field, out, cols=other.cols)
        return self.scale(other)

    def apply(self, vec):
        """Matrix times column vector (vec a list)."""
        assert len(vec) == self.cols
        zero = self.field.zero
        out = []
        for r in self.entries:
            acc = zero
            for a, b in zip(r, vec):
                if not _is_zero(a) and not _is_zero(b):
                    acc = acc + a * b
            out.append(acc)
        return out

    def transpose(self):
        if not self.rows:
            return Matrix(self.field, [[] for _ in range(self.cols)] if self.cols else [],
                          cols=0)
        return Matrix(self.field, [list(r) for r in zip(*self.entries)], cols=self.rows)

    def pow(self, n: int):
        assert self.rows == self.cols
        result = Matrix.identity(self.field, self.rows)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def trace(self):
        assert self.rows == self.cols
        acc = self.field.zero
        for i in range(self.rows):
            acc = acc + self.entries[i][i]
        return acc

    # -- echelon form and friends -----------------------------------------

    def rref(self):
        """Reduced row echelon form; returns (matrix, pivot column list)."""
        m = [row[:] for row in self.entries]
        pivots = []
        r = 0
        for c in range(self.cols):
            pr = None
            for i in range(r, len(m)):
                if not _is_zero(m[i][c]):
                    pr = i
                    break
            if pr is None:
                continue
            m[r], m[pr] = m[pr], m[r]
            inv = m[r][c]
            if not (isinstance(inv, Fraction) and inv == 1):
                if isinstance(inv, Fraction):
                    inv = Fraction(1) / inv
                else:
                    inv = inv.inverse()
                m[r] = [a * inv for a in m[r]]
            for i in range(len(m)):
                if i != r and not _is_zero(m[i][c]):
                    f = m[i][c]
                    m[i] = [a - f * b for a, b in zip(m[i], m[r])]
            pivots.append(c)
            r += 1
            if r == len(m):
                break
        mat = Matrix(self.field, m[:len(pivots)] if pivots else [], cols=self.cols)
        return mat, pivots

    def rank(self) -> int:
        return len(self.rref()[1])

    def kernel(self) -> list:
        """Reduced echelon basis of the right kernel, as a list of vectors."""
        R, pivots = self.rref()
        pivset = set(pivots)
        free = [c for c in range(self.cols) if c not in pivset]
        basis = []
        for fc in free:
            v = [self.field.zero] * self.cols
            v[fc] = self.field.one
            for i, pc in enumerate(pivots):
                v[pc] = -R.entries[i][fc]
            basis.append(v)
        if not basis:
            return []
        return Matrix(self.field, basis, cols=self.cols).rref()[0].entries

    def solve(self, rhs):
        """One solution x of self * x = rhs; raises ValueError if inconsistent."""
        aug = Matrix(self.field, [row + [self.field.coerce(v)]
                                  for row, v in zip(self.entries, rhs)],
                     cols=self.cols + 1)
        R, pivots = aug.rref()
        if self.cols in pivots:
            raise ValueError("inconsistent linear system")
        x = [self.field.zero] * self.cols
        for i, pc in enumerate(pivots):
            x[pc] = R.entries[i][self.cols]
        return x

    def inverse(self):
        assert self.rows == self.cols
        n = self.rows
        aug = Matrix(self.field,
                     [self.entries[i] + Matrix.identity(self.field, n).entries[i]
                      for i in range(n)], cols=2 * n)
        R, pivots = aug.rref()
        if pivots[:n] != list(range(n)):
            raise ValueError("matrix is not invertible")
        return Matrix(self.field, [row[n:] for row in R.entries], cols=n)

    def is_scalar(self) -> bool:
        assert self.rows == self.cols
        d = self.entries[0][0]
        for i in range(self.rows):
            for j in range(self.cols):
                want = d if i == j else self.field.zero
                if self.entries[i][j] != want:
                    return False
        return True


# ---------------------------------------------------------------------------
# subspace utilities (bases are lists of row vectors)
# ---------------------------------------------------------------------------


def echelon_basis(field, vectors) -> list:
    """Canonical reduced-echelon basis of the span of the given vectors."""
    vecs = [v for v in vectors if any(not _is_zero(field.coerce(x)) for x in v)]
    if not vecs:
        return []
    return Matrix(field, vecs).rref()[0].entries


def kernel(m: Matrix) -> list:
    return m.kernel()


def intersect_subspaces(field, a: list, b: list) -> list:
    """Intersection of two row-span subspaces, as a reduced echelon basis."""
    if not a or not b:
        return []
    n = len(a[0])
    if len(b[0]) != n:
        raise ValueError("ambient dimension mismatch")
    # solve x*A - y*B = 0 over coefficient vectors (columns are A^T | -B^T)
    cols = []
    for row in a:
        cols.append([field.coerce(x) for x in row])
    for row in b:
        cols.append([-field.coerce(x) for x in row])
    m = Matrix(field, cols, cols=n).transpose()
    combos = m.kernel()
    vecs = []
    for combo in combos:
        v = [field.zero] * n
        for coef, row in zip(combo[:len(a)], a):
            if not _is_zero(coef):
                for j in range(n):
                    v[j] = v[j] + coef * field.coerce(row[j])
        vecs.append(v)
    return echelon_basis(field, vecs)


def subspace_contains(field, basis: list, vec) -> bool:
    if not basis:
        return all(_is_zero(field.coerce(x)) for x in vec)
    stacked = echelon_basis(field, list(basis) + [vec])
    return len(stacked) == len(echelon_basis(field, basis))


def solve_intertwiners(pairs) -> list:
    """Basis of {X : X*A_i = B_i*X for all i}, as a list of square matrices.

    All A_i, B_i must be square of equal size over the same field.
    """
    if not pairs:
        raise ValueError("at least one pair required")
    field = pairs[0][0].field
    d = pairs[0][0].rows
    for A, B in pairs:
        if A.rows != d or A.cols != d or B.rows != d or B.cols != d:
            raise ValueError("all matrices must be square of equal size")
    # unknowns X[r][t], flattened index d*r + t
    rows = []
    for A, B in pairs:
        for r in range(d):
            for s in range(d):
                row = [field.zero] * (d * d)
                for t in range(d):
                    row[d * r + t] = row[d * r + t] + A.entries[t][s]
                    row[d * t + s] = row[d * t + s] - B.entries[r][t]
                rows.append(row)
    ker = Matrix(field, rows, cols=d * d).kernel()
    out = []
    for v in ker:
        out.append(Matrix(field, [[v[d * r + t] for t in range(d)] for r in range(d)]))
    return out


def min_poly_of_matrix(m: Matrix) -> UniPoly:
    """Monic minimal polynomial of a square matrix (over Q for Q-matrices)."""
    assert m.rows == m.cols
    n = m.rows
    field = m.field
    # minimal polynomial = lcm of the minimal polynomials of iterates of basis vectors
    result = UniPoly.one()
    covered = []  # echelon basis of the Krylov span already annihilated
    for start in range(n):
        v = [field.one if j == start else field.zero for j in range(n)]
        if subspace_contains(field, covered, v):
            continue
        krylov = [v]
        while True:
            nxt = m.apply(krylov[-1])
            mat = Matrix(field, krylov + [nxt], cols=n).transpose()
            ker = mat.kernel()
            if ker:
                combo = ker[0]
                lead = combo[len(krylov)]
                assert not _is_zero(lead)
                if isinstance(lead, Fraction):
                    inv = Fraction(1) / lead
                else:
                    inv = lead.inverse()
                coeffs = [c * inv for c in combo]
                p = _poly_from_field_coeffs(field, coeffs)
                result = _poly_lcm(result, p)
                covered = echelon_basis(field, covered + krylov)
                break
            krylov.append(nxt)
        if len(covered) == n:
            break
    return result


def _poly_from_field_coeffs(field, coeffs) -> UniPoly:
    out = []
    for c in coeffs:
        if isinstance(c, Fraction):
            out.append(c)
        else:
            out.append(c.rational_value())
    return UniPoly(out)


def _poly_lcm(a: UniPoly, b: UniPoly) -> UniPoly:
    if a.is_zero() or b.is_zero():
        return UniPoly.zero()
    g = a.gcd(b)
    return ((a * b) // g).monic()


def charpoly_via_minpoly_check(m: Matrix) -> UniPoly:
    raise NotImplementedError

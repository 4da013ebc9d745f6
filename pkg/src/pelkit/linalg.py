"""Exact rational linear algebra.

Everything here is computed over Q (``fractions.Fraction``) or over the
Gaussian rationals Q(i); no floating point is used anywhere.  Matrices are
dense and immutable, sized for desk-scale inputs (dimension <= 64).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm


class NotSymmetricError(ValueError):
    pass


class NonIntegerError(ValueError):
    pass


class RankDeficientError(ValueError):
    pass


class NotComplexStructureError(ValueError):
    pass


class NotCommutingError(ValueError):
    pass


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot coerce {x!r} to a rational")


class Matrix:
    """Immutable dense matrix with Fraction entries."""

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, data):
        rows = tuple(tuple(_frac(x) for x in row) for row in data)
        if not rows:
            raise ValueError("matrix needs at least one row")
        width = len(rows[0])
        if width == 0 or any(len(r) != width for r in rows):
            raise ValueError("ragged or empty matrix rows")
        self.rows = len(rows)
        self.cols = width
        self._data = rows

    # -- construction helpers ------------------------------------------------

    @staticmethod
    def identity(n: int) -> "Matrix":
        return Matrix([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @staticmethod
    def zero(rows: int, cols: int) -> "Matrix":
        return Matrix([[0] * cols for _ in range(rows)])

    @staticmethod
    def from_columns(columns) -> "Matrix":
        cols = [list(c) for c in columns]
        return Matrix([[cols[j][i] for j in range(len(cols))] for i in range(len(cols[0]))])

    @staticmethod
    def block_diag(*blocks: "Matrix") -> "Matrix":
        n = sum(b.rows for b in blocks)
        m = sum(b.cols for b in blocks)
        out = [[Fraction(0)] * m for _ in range(n)]
        r = c = 0
        for b in blocks:
            for i in range(b.rows):
                for j in range(b.cols):
                    out[r + i][c + j] = b[i, j]
            r += b.rows
            c += b.cols
        return Matrix(out)

    def kron(self, other: "Matrix") -> "Matrix":
        out = []
        for i in range(self.rows):
            for k in range(other.rows):
                out.append(
                    [self[i, j] * other[k, l] for j in range(self.cols) for l in range(other.cols)]
                )
        return Matrix(out)

    # -- basics --------------------------------------------------------------

    def __getitem__(self, ij):
        i, j = ij
        return self._data[i][j]

    def row(self, i: int):
        return self._data[i]

    def column(self, j: int):
        return tuple(self._data[i][j] for i in range(self.rows))

    def tolist(self):
        return [list(r) for r in self._data]

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self._data == other._data
        )

    def __hash__(self):
        return hash(self._data)

    def __repr__(self):
        return f"Matrix({[ [str(x) for x in r] for r in self._data ]})"

    def __add__(self, other: "Matrix") -> "Matrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch in +")
        return Matrix(
            [
                [self[i, j] + other[i, j] for j in range(self.cols)]
                for i in range(self.rows)
            ]
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + (-other)

    def __neg__(self) -> "Matrix":
        return Matrix([[-x for x in r] for r in self._data])

    def scale(self, c) -> "Matrix":
        c = _frac(c)
        return Matrix([[c * x for x in r] for r in self._data])

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch in @")
        ocols = other.cols
        odata = other._data
        out = []
        for i in range(self.rows):
            ri = self._data[i]
            row = [Fraction(0)] * ocols
            for k in range(self.cols):
                a = ri[k]
                if a:
                    rk = odata[k]
                    for j in range(ocols):
                        row[j] += a * rk[j]
            out.append(row)
        return Matrix(out)

    def transpose(self) -> "Matrix":
        return Matrix([[self._data[i][j] for i in range(self.rows)] for j in range(self.cols)])

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_symmetric(self) -> bool:
        return self.is_square() and all(
            self[i, j] == self[j, i] for i in range(self.rows) for j in range(i)
        )

    def is_antisymmetric(self) -> bool:
        return self.is_square() and all(
            self[i, j] == -self[j, i] for i in range(self.rows) for j in range(i + 1)
        )

    def is_integer(self) -> bool:
        return all(x.denominator == 1 for r in self._data for x in r)

    def trace(self) -> Fraction:
        if not self.is_square():
            raise ValueError("trace of a non-square matrix")
        return sum((self[i, i] for i in range(self.rows)), Fraction(0))

    def denominator_lcm(self) -> int:
        out = 1
        for r in self._data:
            for x in r:
                out = lcm(out, x.denominator)
        return out

    def flatten(self):
        return tuple(x for r in self._data for x in r)

    # -- elimination-based operations ----------------------------------------

    def det(self) -> Fraction:
        if not self.is_square():
            raise ValueError("determinant of a non-square matrix")
        m = [list(r) for r in self._data]
        n = self.rows
        det = Fraction(1)
        for c in range(n):
            piv = next((r for r in range(c, n) if m[r][c]), None)
            if piv is None:
                return Fraction(0)
            if piv != c:
                m[c], m[piv] = m[piv], m[c]
                det = -det
            det *= m[c][c]
            inv = 1 / m[c][c]
            for r in range(c + 1, n):
                f = m[r][c] * inv
                if f:
                    for j in range(c, n):
                        m[r][j] -= f * m[c][j]
        return det

    def inv(self) -> "Matrix":
        if not self.is_square():
            raise ValueError("inverse of a non-square matrix")
        n = self.rows
        m = [list(r) + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(self._data)]
        for c in range(n):
            piv = next((r for r in range(c, n) if m[r][c]), None)
            if piv is None:
                raise ValueError("matrix is singular")
            m[c], m[piv] = m[piv], m[c]
            inv = 1 / m[c][c]
            m[c] = [x * inv for x in m[c]]
            for r in range(n):
                if r != c and m[r][c]:
                    f = m[r][c]
                    m[r] = [a - f * b for a, b in zip(m[r], m[c])]
        return Matrix([r[n:] for r in m])

    def rank(self) -> int:
        m = [list(r) for r in self._data]
        rank = 0
        for c in range(self.cols):
            piv = next((r for r in range(rank, self.rows) if m[r][c]), None)
            if piv is None:
                continue
            m[rank], m[piv] = m[piv], m[rank]
            inv = 1 / m[rank][c]
            for r in range(rank + 1, self.rows):
                f = m[r][c] * inv
                if f:
                    for j in range(c, self.cols):
                        m[r][j] -= f * m[rank][j]
            rank += 1
        return rank

    def solve(self, rhs: "Matrix") -> "Matrix":
        """Solve self @ X = rhs exactly; raises ValueError if inconsistent."""
        if self.rows != rhs.rows:
            raise ValueError("shape mismatch in solve")
        n, k, w = self.rows, self.cols, rhs.cols
        m = [list(self._data[i]) + list(rhs._data[i]) for i in range(n)]
        pivots = []
        r = 0
        for c in range(k):
            piv = next((i for i in range(r, n) if m[i][c]), None)
            if piv is None:
                continue
            m[r], m[piv] = m[piv], m[r]
            inv = 1 / m[r][c]
            m[r] = [x * inv for x in m[r]]
            for i in range(n):
                if i != r and m[i][c]:
                    f = m[i][c]
                    m[i] = [a - f * b for a, b in zip(m[i], m[r])]
            pivots.append(c)
            r += 1
            if r == n:
                break
        for i in range(r, n):
            if any(m[i][k + j] for j in range(w)):
                raise ValueError("inconsistent linear system")
        sol = [[Fraction(0)] * w for _ in range(k)]
        for ri, c in enumerate(pivots):
            for j in range(w):
                sol[c][j] = m[ri][k + j]
        return Matrix(sol)

    def column_space_basis(self) -> "Matrix":
        """Matrix whose columns are the pivot columns of self (a basis of the image)."""
        m = [list(r) for r in self._data]
        pivots = []
        r = 0
        for c in range(self.cols):
            piv = next((i for i in range(r, self.rows) if m[i][c]), None)
            if piv is None:
                continue
            m[r], m[piv] = m[piv], m[r]
            inv = 1 / m[r][c]
            for i in range(r + 1, self.rows):
                f = m[i][c] * inv
                if f:
                    for j in range(c, self.cols):
                        m[i][j] -= f * m[r][j]
            pivots.append(c)
            r += 1
        if not pivots:
            raise RankDeficientError("zero matrix has no column-space basis")
        return Matrix.from_columns([self.column(c) for c in pivots])


@dataclass(frozen=True)
class Signature:
    """Sylvester signature (positive, negative, zero) of a symmetric form."""

    positive: int
    negative: int
    zero: int

    @property
    def dimension(self) -> int:
        return self.positive + self.negative + self.zero

    def is_positive_definite(self) -> bool:
        return self.negative == 0 and self.zero == 0


def signature(gram: Matrix) -> Signature:
    """Sylvester signature of a symmetric rational form.

    Congruence diagonalization using the first nonzero diagonal pivot; when
    the remaining diagonal vanishes but an off-diagonal entry survives, the
    standard rank-2 fix-up (add row+column) restores a diagonal pivot.
    """
    if not gram.is_square():
        raise NotSymmetricError("gram matrix must be square")
    if not gram.is_symmetric():
        raise NotSymmetricError("gram matrix must equal its transpose")
    n = gram.rows
    m = [list(r) for r in gram._data]

    def add_rowcol(dst, src):
        for j in range(n):
            m[dst][j] += m[src][j]
        for i in range(n):
            m[i][dst] += m[i][src]

    def swap_rowcol(a, b):
        m[a], m[b] = m[b], m[a]
        for i in range(n):
            m[i][a], m[i][b] = m[i][b], m[i][a]

    pos = neg = zero = 0
    for k in range(n):
        if m[k][k] == 0:
            j = next((t for t in range(k + 1, n) if m[t][t]), None)
            if j is not None:
                swap_rowcol(k, j)
            else:
                j = next((t for t in range(k + 1, n) if m[k][t]), None)
                if j is None:
                    zero += 1
                    continue
                add_rowcol(k, j)  # makes m[k][k] = 2*m[k][j] != 0
        piv = m[k][k]
        if piv > 0:
            pos += 1
        else:
            neg += 1
        for r in range(k + 1, n):
            f = m[r][k] / piv
            if f:
                for j in range(n):
                    m[r][j] -= f * m[k][j]
                for i in range(n):
                    m[i][r] -= f * m[i][k]
    return Signature(pos, neg, zero)


def hnf(m: Matrix, allow_rank_deficient: bool = False) -> Matrix:
    """Column Hermite normal form of an integer matrix.

    The Z-span of the columns is preserved.  Zero columns are dropped; by
    default a rank-deficient input (fewer pivots than columns) is rejected.
    """
    if not m.is_integer():
        raise NonIntegerError("hnf requires integer entries")
    rows = [[int(x) for x in col] for col in zip(*m.tolist())]  # work on the transpose
    nr, nc = len(rows), m.rows
    r = 0
    for c in range(nc):
        while True:
            live = [i for i in range(r, nr) if rows[i][c]]
            if not live:
                break
            i0 = min(live, key=lambda i: abs(rows[i][c]))
            rows[r], rows[i0] = rows[i0], rows[r]
            done = True
            for i in range(r + 1, nr):
                if rows[i][c]:
                    q = rows[i][c] // rows[r][c]
                    rows[i] = [a - q * b for a, b in zip(rows[i], rows[r])]
                    if rows[i][c]:
                        done = False
            if done:
                break
        if r < nr and rows[r][c]:
            if rows[r][c] < 0:
                rows[r] = [-a for a in rows[r]]
            for i in range(r):
                q = rows[i][c] // rows[r][c]
                if q:
                    rows[i] = [a - q * b for a, b in zip(rows[i], rows[r])]
            r += 1
    if r < m.cols and not allow_rank_deficient:
        raise RankDeficientError(f"column span has rank {r} < {m.cols}")
    if r == 0:
        raise RankDeficientError("zero matrix has no Hermite form")
    return Matrix(rows[:r]).transpose()


@dataclass(frozen=True)
class GaussRat:
    """Element a + b*i of Q(i) with Fraction components."""

    re: Fraction
    im: Fraction

    @staticmethod
    def of(re, im=0) -> "GaussRat":
        return GaussRat(_frac(re), _frac(im))

    def __add__(self, o):
        return GaussRat(self.re + o.re, self.im + o.im)

    def __sub__(self, o):
        return GaussRat(self.re - o.re, self.im - o.im)

    def __neg__(self):
        return GaussRat(-self.re, -self.im)

    def __mul__(self, o):
        return GaussRat(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    def __truediv__(self, o):
        n = o.re * o.re + o.im * o.im
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(i)")
        return GaussRat((self.re * o.re + self.im * o.im) / n, (self.im * o.re - self.re * o.im) / n)

    def conj(self) -> "GaussRat":
        return GaussRat(self.re, -self.im)

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __str__(self):
        return f"{self.re}+{self.im}i"


GAUSS_ZERO = GaussRat(Fraction(0), Fraction(0))
GAUSS_ONE = GaussRat(Fraction(1), Fraction(0))
GAUSS_I = GaussRat(Fraction(0), Fraction(1))


def _kernel_basis(rows):
    """Null-space basis for a matrix given as a list of GaussRat rows."""
    if not rows:
        return []
    nc = len(rows[0])
    m = [list(r) for r in rows]
    nr = len(m)
    pivots = []
    r = 0
    for c in range(nc):
        piv = next((i for i in range(r, nr) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = GAUSS_ONE / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(nr):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(nc) if c not in pivots]
    basis = []
    for f in free:
        v = [GAUSS_ZERO] * nc
        v[f] = GAUSS_ONE
        for ri, c in enumerate(pivots):
            v[c] = -m[ri][f]
        basis.append(tuple(v))
    return basis


@dataclass(frozen=True)
class EigenSplit:
    """Simultaneous eigenspace bases over Q(i), ordered (++, +-, -+, --)."""

    pp: tuple
    pm: tuple
    mp: tuple
    mm: tuple

    @property
    def dims(self) -> tuple[int, int, int, int]:
        return (len(self.pp), len(self.pm), len(self.mp), len(self.mm))


def simult_eigensplit(a: Matrix, b: Matrix) -> EigenSplit:
    """Split Q(i)^n into the four joint eigenspaces of two commuting
    complex structures (eigenvalues +-i for each of a and b)."""
    n = a.rows
    if not a.is_square() or not b.is_square() or b.rows != n:
        raise ValueError("need square matrices of equal size")
    minus_id = Matrix.identity(n).scale(-1)
    if a @ a != minus_id:
        raise NotComplexStructureError("first matrix does not square to -I")
    if b @ b != minus_id:
        raise NotComplexStructureError("second matrix does not square to -I")
    if a @ b != b @ a:
        raise NotCommutingError("matrices do not commute")

    def gauss_rows(mat: Matrix, shift: GaussRat):
        return [
            [GaussRat(mat[i, j], Fraction(0)) - (shift if i == j else GAUSS_ZERO) for j in range(n)]
            for i in range(n)
        ]

    def joint_kernel(sa: GaussRat, sb: GaussRat):
        stacked = gauss_rows(a, sa) + gauss_rows(b, sb)
        return tuple(_kernel_basis(stacked))

    mi = -GAUSS_I
    split = EigenSplit(
        pp=joint_kernel(GAUSS_I, GAUSS_I),
        pm=joint_kernel(GAUSS_I, mi),
        mp=joint_kernel(mi, GAUSS_I),
        mm=joint_kernel(mi, mi),
    )
    if sum(split.dims) != n:
        raise AssertionError("eigenspace dimensions do not fill the space")
    return split


def integer_span_contains(basis: Matrix, vectors: Matrix) -> bool:
    """True if every column of ``vectors`` is an integral combination of the
    columns of ``basis`` (both integer matrices)."""
    try:
        sol = basis.solve(vectors)
    except ValueError:
        return False
    return sol.is_integer()

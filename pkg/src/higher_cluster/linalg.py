"""Exact dense linear algebra over the rationals or a prime field.

Deliberately small and dependency-free.  Matrices carry their shape
explicitly (zero-dimensional components are everywhere in the module
machinery, so shapes must never be inferred from row data), entries are
field elements supporting +, -, *, /, and no function mutates its input.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


class RationalField:
    """Exact rationals; the contract default for every computation."""

    name = "QQ"

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def from_int(self, k):
        return Fraction(k)


class FpElement:
    __slots__ = ("value", "p")

    def __init__(self, value, p):
        self.value = value % p
        self.p = p

    def __add__(self, other):
        return FpElement(self.value + other.value, self.p)

    def __sub__(self, other):
        return FpElement(self.value - other.value, self.p)

    def __mul__(self, other):
        return FpElement(self.value * other.value, self.p)

    def __truediv__(self, other):
        if other.value == 0:
            raise ZeroDivisionError("division by zero in prime field")
        return FpElement(self.value * pow(other.value, self.p - 2, self.p), self.p)

    def __neg__(self):
        return FpElement(-self.value, self.p)

    def __eq__(self, other):
        return isinstance(other, FpElement) and self.value == other.value and self.p == other.p

    def __hash__(self):
        return hash((self.value, self.p))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"{self.value} (mod {self.p})"


class PrimeField:
    """GF(p) for a prime p; the fast option for rank experiments."""

    def __init__(self, p):
        if p < 2:
            raise ValueError(f"not a usable modulus: {p}")
        self.p = p
        self.name = f"GF({p})"

    @property
    def zero(self):
        return FpElement(0, self.p)

    @property
    def one(self):
        return FpElement(1, self.p)

    def from_int(self, k):
        return FpElement(k, self.p)


QQ = RationalField()

# large enough that desk-scale 0/1 matrices never hit accidental torsion
DEFAULT_PRIME = 32003


@dataclass(frozen=True)
class Mat:
    """Immutable matrix with explicit shape; rows is a tuple of row tuples."""

    nrows: int
    ncols: int
    rows: tuple

    @staticmethod
    def from_rows(rows, ncols):
        rows = tuple(tuple(r) for r in rows)
        for r in rows:
            assert len(r) == ncols
        return Mat(len(rows), ncols, rows)

    @staticmethod
    def from_int_rows(rows, ncols, field=QQ):
        return Mat.from_rows(
            [[field.from_int(v) for v in r] for r in rows], ncols
        )

    @staticmethod
    def zeros(nrows, ncols, field=QQ):
        z = field.zero
        return Mat(nrows, ncols, tuple(tuple(z for _ in range(ncols)) for _ in range(nrows)))

    @staticmethod
    def identity(k, field=QQ):
        z, o = field.zero, field.one
        return Mat(k, k, tuple(tuple(o if i == j else z for j in range(k)) for i in range(k)))

    def mul(self, other: "Mat", field=QQ) -> "Mat":
        assert self.ncols == other.nrows
        z = field.zero
        out = []
        for i in range(self.nrows):
            row = []
            for j in range(other.ncols):
                s = z
                for k in range(self.ncols):
                    s = s + self.rows[i][k] * other.rows[k][j]
                row.append(s)
            out.append(tuple(row))
        return Mat(self.nrows, other.ncols, tuple(out))

    def mul_vec(self, vec, field=QQ):
        assert len(vec) == self.ncols
        z = field.zero
        out = []
        for i in range(self.nrows):
            s = z
            for k in range(self.ncols):
                s = s + self.rows[i][k] * vec[k]
            out.append(s)
        return tuple(out)

    def column(self, j):
        return tuple(self.rows[i][j] for i in range(self.nrows))

    def hstack(self, other: "Mat") -> "Mat":
        assert self.nrows == other.nrows
        return Mat(
            self.nrows,
            self.ncols + other.ncols,
            tuple(a + b for a, b in zip(self.rows, other.rows)),
        )

    def is_zero(self) -> bool:
        return all(not v for row in self.rows for v in row)


def rref(m: Mat):
    """Reduced row echelon form; returns (Mat, pivot column tuple)."""
    rows = [list(r) for r in m.rows]
    pivots = []
    pr = 0
    for pc in range(m.ncols):
        pivot_row = None
        for r in range(pr, m.nrows):
            if rows[r][pc]:
                pivot_row = r
                break
        if pivot_row is None:
            continue
        rows[pr], rows[pivot_row] = rows[pivot_row], rows[pr]
        piv = rows[pr][pc]
        rows[pr] = [v / piv for v in rows[pr]]
        for r in range(m.nrows):
            if r != pr and rows[r][pc]:
                factor = rows[r][pc]
                rows[r] = [a - factor * b for a, b in zip(rows[r], rows[pr])]
        pivots.append(pc)
        pr += 1
        if pr == m.nrows:
            break
    return Mat(m.nrows, m.ncols, tuple(tuple(r) for r in rows)), tuple(pivots)


def rank(m: Mat) -> int:
    return len(rref(m)[1])


def kernel_basis(m: Mat, field=QQ):
    """Basis of the right null space, one vector per free column, in column order."""
    reduced, pivots = rref(m)
    pivot_set = set(pivots)
    free = [c for c in range(m.ncols) if c not in pivot_set]
    basis = []
    for f in free:
        vec = [field.zero] * m.ncols
        vec[f] = field.one
        for i, p in enumerate(pivots):
            vec[p] = -reduced.rows[i][f]
        basis.append(tuple(vec))
    return basis


def solve_many(a: Mat, b: Mat, field=QQ):
    """Solve a X = b columnwise; free variables are set to zero.

    Returns the solution Mat, or None if any column is inconsistent.
    """
    assert a.nrows == b.nrows
    reduced, pivots = rref(a.hstack(b))
    if any(p >= a.ncols for p in pivots):
        return None
    cols = []
    for j in range(b.ncols):
        vec = [field.zero] * a.ncols
        for i, p in enumerate(pivots):
            vec[p] = reduced.rows[i][a.ncols + j]
        cols.append(vec)
    return Mat(
        a.ncols, b.ncols, tuple(tuple(cols[j][i] for j in range(b.ncols)) for i in range(a.ncols))
    )


def inverse(m: Mat, field=QQ):
    """Inverse of a square matrix, or None if singular.

    Singularity falls out of solve_many: the identity block has full rank,
    so a rank-deficient m forces a pivot into the augmented part.
    """
    assert m.nrows == m.ncols
    return solve_many(m, Mat.identity(m.nrows, field), field)

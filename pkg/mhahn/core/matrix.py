from fractions import (
    Fraction,
)
from typing import (
    Callable,
    List,
    Optional,
    Sequence,
    Tuple,
    Union,
)

import numpy as np

from mhahn.errors import (
    SingularMatrixError,
)

from .rational import (
    RationalLike,
    to_rational,
)

_to_fraction = np.frompyfunc(to_rational, 1, 1)

Vector = Tuple[Fraction, ...]


def _is_scalar(value) -> bool:
    return isinstance(value, (Fraction, int)) and not isinstance(value, bool)


class RMatrix:
    r"""Dense matrix of exact rationals.

    The entries live in a read-only numpy object array of
    :class:`fractions.Fraction`. All arithmetic is exact. Adding or
    subtracting a scalar :math:`c` adds :math:`c I` (square matrices
    only), so relations such as :math:`K_2 + \nu P + 1/2` read as written.

    Parameters
    ----------
    entries
        Nested rows, an existing object array or another RMatrix.
    shape : (int, int), optional
        Needed only when ``entries`` has no rows.
    """

    __slots__ = ("_data",)
    __hash__ = None  # type: ignore

    def __init__(
        self,
        entries: Union["RMatrix", np.ndarray, Sequence[Sequence[RationalLike]]],
        shape: Optional[Tuple[int, int]] = None,
    ):
        if isinstance(entries, RMatrix):
            data = entries._data
        else:
            if isinstance(entries, np.ndarray):
                raw = entries
            else:
                rows = [list(row) for row in entries]
                if shape is None:
                    shape = (len(rows), len(rows[0]) if len(rows) > 0 else 0)
                raw = np.empty(shape, dtype=object)
                for ii, row in enumerate(rows):
                    assert (
                        len(row) == shape[1]
                    ), f"Error: row {ii} has {len(row)} entries, expected {shape[1]}"
                    for jj, value in enumerate(row):
                        raw[ii, jj] = value
            assert raw.ndim == 2, f"Error: expected a 2-d array, got {raw.ndim}-d"
            data = np.empty(raw.shape, dtype=object)
            if raw.size > 0:
                data[...] = _to_fraction(raw)
        data.setflags(write=False)
        self._data = data

    # construction

    @classmethod
    def zeros(cls, nrows: int, ncols: Optional[int] = None) -> "RMatrix":
        ncols = nrows if ncols is None else ncols
        data = np.empty((nrows, ncols), dtype=object)
        data.fill(Fraction(0))
        return cls(data)

    @classmethod
    def identity(cls, dim: int) -> "RMatrix":
        return cls.diag([1] * dim)

    @classmethod
    def diag(cls, values: Sequence[RationalLike]) -> "RMatrix":
        dim = len(values)
        return cls.from_function(
            dim, dim, lambda ii, jj: values[ii] if ii == jj else 0
        )

    @classmethod
    def from_function(
        cls,
        nrows: int,
        ncols: int,
        func: Callable[[int, int], RationalLike],
    ) -> "RMatrix":
        data = np.empty((nrows, ncols), dtype=object)
        for ii in range(nrows):
            for jj in range(ncols):
                data[ii, jj] = func(ii, jj)
        return cls(data)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[RationalLike]]) -> "RMatrix":
        assert len(columns) > 0, "Error: no columns given"
        return cls([list(row) for row in zip(*columns)])

    # access

    @property
    def shape(self) -> Tuple[int, int]:
        return self._data.shape

    @property
    def nrows(self) -> int:
        return self._data.shape[0]

    @property
    def ncols(self) -> int:
        return self._data.shape[1]

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    @property
    def dim(self) -> int:
        self._check_square("dim")
        return self.nrows

    def __getitem__(self, key: Tuple[int, int]) -> Fraction:
        ii, jj = key
        return self._data[ii, jj]

    def row(self, ii: int) -> Vector:
        return tuple(self._data[ii, :])

    def column(self, jj: int) -> Vector:
        return tuple(self._data[:, jj])

    def diagonal(self) -> Vector:
        return tuple(self._data.diagonal())

    def block(self, rows: Sequence[int], cols: Sequence[int]) -> "RMatrix":
        return RMatrix(self._data[np.ix_(list(rows), list(cols))])

    def to_list(self) -> List[List[Fraction]]:
        return [list(row) for row in self._data]

    def array(self) -> np.ndarray:
        r"""A writable copy of the underlying object array."""
        return self._data.copy()

    def _check_square(self, what: str):
        if not self.is_square():
            raise ValueError(f"{what} requires a square matrix, shape is {self.shape}")

    def _check_same_shape(self, other: "RMatrix"):
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    # arithmetic

    def __add__(self, other) -> "RMatrix":
        if isinstance(other, RMatrix):
            self._check_same_shape(other)
            return RMatrix(self._data + other._data)
        if _is_scalar(other):
            return self + RMatrix.identity(self.dim) * other
        return NotImplemented

    def __radd__(self, other) -> "RMatrix":
        return self.__add__(other)

    def __sub__(self, other) -> "RMatrix":
        if isinstance(other, RMatrix):
            self._check_same_shape(other)
            return RMatrix(self._data - other._data)
        if _is_scalar(other):
            return self - RMatrix.identity(self.dim) * other
        return NotImplemented

    def __rsub__(self, other) -> "RMatrix":
        return (-self).__add__(other)

    def __neg__(self) -> "RMatrix":
        return RMatrix(-self._data)

    def __mul__(self, other) -> "RMatrix":
        if _is_scalar(other):
            return RMatrix(self._data * to_rational(other))
        if isinstance(other, RMatrix):
            raise TypeError("use @ for the matrix product")
        return NotImplemented

    def __rmul__(self, other) -> "RMatrix":
        return self.__mul__(other)

    def __truediv__(self, other) -> "RMatrix":
        if _is_scalar(other):
            return RMatrix(self._data / to_rational(other))
        return NotImplemented

    def __matmul__(self, other) -> "RMatrix":
        if not isinstance(other, RMatrix):
            return NotImplemented
        if self.ncols != other.nrows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        if self.ncols == 0:
            return RMatrix.zeros(self.nrows, other.ncols)
        return RMatrix(self._data.dot(other._data))

    def __pow__(self, exponent: int) -> "RMatrix":
        self._check_square("power")
        assert exponent >= 0, "Error: negative matrix power"
        ret = RMatrix.identity(self.dim)
        for _ in range(exponent):
            ret = ret @ self
        return ret

    def apply(self, vector: Sequence[RationalLike]) -> Vector:
        r"""Matrix times column vector."""
        assert len(vector) == self.ncols, "Error: vector length mismatch"
        vec = [to_rational(ii) for ii in vector]
        return tuple(
            sum((self._data[ii, jj] * vec[jj] for jj in range(self.ncols)), Fraction(0))
            for ii in range(self.nrows)
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, RMatrix):
            return NotImplemented
        if self.shape != other.shape:
            return False
        return bool(np.all(self._data == other._data)) if self._data.size else True

    def __repr__(self) -> str:
        rows = ", ".join(
            "[" + ", ".join(str(vv) for vv in row) + "]" for row in self._data
        )
        return f"RMatrix([{rows}])"

    @property
    def T(self) -> "RMatrix":
        return RMatrix(self._data.T)

    # properties

    def trace(self) -> Fraction:
        self._check_square("trace")
        return sum(self.diagonal(), Fraction(0))

    def is_zero(self) -> bool:
        return all(vv == 0 for vv in self._data.flat)

    def is_diagonal(self) -> bool:
        return self.bandwidth() == 0

    def scalar_value(self) -> Optional[Fraction]:
        r"""Return :math:`c` if the matrix equals :math:`c I`, otherwise None."""
        self._check_square("scalar_value")
        if self.dim == 0 or not self.is_diagonal():
            return None
        diag = self.diagonal()
        return diag[0] if all(vv == diag[0] for vv in diag) else None

    def bandwidth(self) -> int:
        r"""Smallest b with m[i][j] = 0 whenever :math:`|i-j| > b`."""
        ret = 0
        for (ii, jj), value in np.ndenumerate(self._data):
            if value != 0:
                ret = max(ret, abs(ii - jj))
        return ret

    def nonzero_count(self) -> int:
        return sum(1 for vv in self._data.flat if vv != 0)

    def max_abs(self) -> Fraction:
        return max((abs(vv) for vv in self._data.flat), default=Fraction(0))

    # elimination

    def row_reduce(self) -> Tuple["RMatrix", Tuple[int, ...]]:
        r"""Reduced row echelon form by exact Gauss-Jordan elimination.

        Returns
        -------
        rref : RMatrix
            The reduced row echelon form.
        pivots : tuple of int
            The pivot columns.
        """
        work = self._data.copy()
        nrows, ncols = work.shape
        pivots = []
        row = 0
        for col in range(ncols):
            if row == nrows:
                break
            sel = next((ii for ii in range(row, nrows) if work[ii, col] != 0), None)
            if sel is None:
                continue
            if sel != row:
                work[[row, sel]] = work[[sel, row]]
            work[row, :] = work[row, :] / work[row, col]
            for ii in range(nrows):
                if ii != row and work[ii, col] != 0:
                    work[ii, :] = work[ii, :] - work[ii, col] * work[row, :]
            pivots.append(col)
            row += 1
        return RMatrix(work), tuple(pivots)

    def rank(self) -> int:
        return len(self.row_reduce()[1])

    def nullspace(self) -> List[Vector]:
        r"""Exact basis of :math:`\{v : m v = 0\}`, empty iff m has full column rank.

        Each basis vector has a 1 at its free column.
        """
        rref, pivots = self.row_reduce()
        free = [jj for jj in range(self.ncols) if jj not in pivots]
        ret = []
        for ff in free:
            vec = [Fraction(0)] * self.ncols
            vec[ff] = Fraction(1)
            for rr, cc in enumerate(pivots):
                vec[cc] = -rref[rr, ff]
            ret.append(tuple(vec))
        return ret

    def solve(
        self, rhs: Sequence[RationalLike]
    ) -> Optional[Tuple[Vector, List[Vector]]]:
        r"""Every solution of :math:`m x = b`.

        Returns
        -------
        tuple or None
            A particular solution, zero at the free columns, together with
            :meth:`nullspace`; None if the system is inconsistent.
        """
        if len(rhs) != self.nrows:
            raise ValueError(
                f"right-hand side has {len(rhs)} entries, matrix has {self.nrows} rows"
            )
        ncols = self.ncols
        column = np.empty((self.nrows, 1), dtype=object)
        for ii, value in enumerate(rhs):
            column[ii, 0] = to_rational(value)
        rref, pivots = RMatrix(np.hstack((self._data, column))).row_reduce()
        if ncols in pivots:
            return None
        ret = [Fraction(0)] * ncols
        for rr, cc in enumerate(pivots):
            ret[cc] = rref[rr, ncols]
        return tuple(ret), self.nullspace()

    def inverse(self) -> "RMatrix":
        self._check_square("inverse")
        dim = self.dim
        augmented = RMatrix(np.hstack((self._data, RMatrix.identity(dim)._data)))
        rref, pivots = augmented.row_reduce()
        if pivots[:dim] != tuple(range(dim)):
            raise SingularMatrixError("matrix is singular")
        return rref.block(range(dim), range(dim, 2 * dim))

    def similarity(self, basis: "RMatrix") -> "RMatrix":
        r""":math:`B^{-1} M B`."""
        return basis.inverse() @ self @ basis

    def charpoly(self) -> Vector:
        r"""Characteristic polynomial :math:`\det(tI - M)`, highest degree first.

        Faddeev-LeVerrier recursion; exact over the rationals.
        """
        self._check_square("charpoly")
        dim = self.dim
        coeffs = [Fraction(1)]
        aux = RMatrix.zeros(dim)
        for kk in range(1, dim + 1):
            aux = self @ aux + coeffs[-1]
            coeffs.append(-(self @ aux).trace() / kk)
        return tuple(coeffs)


def commutator(aa: RMatrix, bb: RMatrix) -> RMatrix:
    return aa @ bb - bb @ aa


def anticommutator(aa: RMatrix, bb: RMatrix) -> RMatrix:
    return aa @ bb + bb @ aa


def poly_from_roots(roots: Sequence[RationalLike]) -> Vector:
    r"""Monic polynomial :math:`\prod_r (t - r)`, highest degree first."""
    coeffs = [Fraction(1)]
    for root in roots:
        root = to_rational(root)
        shifted = coeffs + [Fraction(0)]
        scaled = [Fraction(0)] + [root * cc for cc in coeffs]
        coeffs = [ss - tt for ss, tt in zip(shifted, scaled)]
    return tuple(coeffs)


def has_spectrum(mat: RMatrix, values: Sequence[RationalLike]) -> bool:
    r"""Multiset equality of the spectrum of ``mat`` with ``values``."""
    if len(values) != mat.dim:
        return False
    return mat.charpoly() == poly_from_roots(values)


def vector_is_zero(vector: Sequence[Fraction]) -> bool:
    return all(vv == 0 for vv in vector)

"""Exact GF(2) linear algebra on int-bitmask rows.

A length-n word over GF(2) is a plain Python int: bit i (0-based) holds
coordinate i+1.  The same int serves as a codeword, a square-free monomial
exponent vector, and a subset of {1,...,n}.  All user-facing I/O is 1-based
and renders coordinate 1 as the leftmost character of a bitstring; every
index inside this package is 0-based.

Addition is XOR, support size is int.bit_count(), containment of supports
is ``a & b == a``.  Row operations below are whole-word XORs; elimination
picks the leftmost available pivot first, so all outputs are deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass


def word_from_string(s: str) -> int:
    """Parse a bitstring like ``100001`` (coordinate 1 leftmost)."""
    word = 0
    for i, ch in enumerate(s):
        if ch == "1":
            word |= 1 << i
        elif ch != "0":
            raise ValueError(f"invalid bit {ch!r} in {s!r}")
    return word


def word_to_string(word: int, n: int) -> str:
    """Render a word as an n-character bitstring, coordinate 1 leftmost."""
    return "".join("1" if (word >> i) & 1 else "0" for i in range(n))


def bits_of(mask: int):
    """Yield the 0-based set-bit positions of mask, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def rank_of_words(words, ncols: int = 0) -> int:
    """GF(2) rank of a collection of int words (xor-basis elimination)."""
    basis: dict[int, int] = {}
    for v in words:
        while v:
            top = v.bit_length() - 1
            row = basis.get(top)
            if row is None:
                basis[top] = v
                break
            v ^= row
    return len(basis)


@dataclass(frozen=True)
class BinaryMatrix:
    """Row-major matrix over GF(2); each row is an int word of ncols bits."""

    rows: tuple[int, ...]
    ncols: int

    def __post_init__(self):
        if self.ncols < 0:
            raise ValueError("ncols must be nonnegative")
        mask = (1 << self.ncols) - 1
        for r in self.rows:
            if r & ~mask:
                raise ValueError("row has bits beyond ncols")

    @classmethod
    def from_strings(cls, rows: list[str]) -> "BinaryMatrix":
        if not rows:
            raise ValueError("matrix needs at least one row")
        ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise ValueError("all rows must have equal length")
        return cls(tuple(word_from_string(r) for r in rows), ncols)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    def row_strings(self) -> list[str]:
        return [word_to_string(r, self.ncols) for r in self.rows]

    def column(self, j: int) -> int:
        """Column j as a word over row indices."""
        out = 0
        for i, r in enumerate(self.rows):
            out |= ((r >> j) & 1) << i
        return out

    def mul_word(self, word: int) -> int:
        """Matrix-vector product m . word^T, result over row indices."""
        out = 0
        for i, r in enumerate(self.rows):
            out |= ((r & word).bit_count() & 1) << i
        return out


def rref(m: BinaryMatrix) -> tuple[BinaryMatrix, int, tuple[int, ...]]:
    """Reduced row echelon form over GF(2).

    Returns (reduced matrix with zero rows dropped, rank, pivot columns).
    Pivot columns are 0-based and ascend left to right; the row space is
    preserved and the result is idempotent under rref.
    """
    work = list(m.rows)
    pivots: list[int] = []
    pr = 0
    for col in range(m.ncols):
        piv = None
        for i in range(pr, len(work)):
            if (work[i] >> col) & 1:
                piv = i
                break
        if piv is None:
            continue
        work[pr], work[piv] = work[piv], work[pr]
        for i in range(len(work)):
            if i != pr and ((work[i] >> col) & 1):
                work[i] ^= work[pr]
        pivots.append(col)
        pr += 1
    return BinaryMatrix(tuple(work[:pr]), m.ncols), pr, tuple(pivots)


def kernel_basis(m: BinaryMatrix) -> BinaryMatrix:
    """Basis of the right kernel {v : m . v^T = 0}, one row per free column.

    The result has ncols - rank(m) rows and is canonical: it is derived
    from the rref of m, with free columns taken in ascending order.
    """
    red, _, pivots = rref(m)
    pivot_set = set(pivots)
    rows = []
    for j in range(m.ncols):
        if j in pivot_set:
            continue
        v = 1 << j
        for i, pc in enumerate(pivots):
            if (red.rows[i] >> j) & 1:
                v |= 1 << pc
        rows.append(v)
    return BinaryMatrix(tuple(rows), m.ncols)


def rank_of_columns(m: BinaryMatrix, cols: int) -> int:
    """Rank of the submatrix formed by the columns selected in the mask.

    Equals popcount(cols) exactly when the selected columns are linearly
    independent.  Monotone nondecreasing in the selection.
    """
    return rank_of_words(m.column(j) for j in bits_of(cols))

"""Reduced simplicial homology over a prime field, by boundary-matrix ranks.

The chain complex is augmented: the empty face spans degree -1 and every
vertex maps to it, so the dimensions reported here are reduced.  For a
complex with n_p faces of dimension p,

    dim H~_p = n_p - rank(d_p) - rank(d_{p+1}),

where d_p is the boundary map from p-chains to (p-1)-chains.  The void
complex has trivial homology everywhere; the irrelevant complex has a
single dimension 1 in degree -1.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt
from typing import Mapping

import numpy as np

from .complexes import DEFAULT_FACE_CAP, Face, SimplicialComplex, SizeCapError, faces_by_dim

DEFAULT_PRIME = 32003
MATRIX_ENTRY_CAP = 1 << 25


def is_prime(n: int) -> bool:
    if not isinstance(n, int) or n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for d in range(3, isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


def validate_prime(p: int) -> int:
    if not is_prime(p) or p >= 1 << 31:
        raise ValueError(f"field characteristic must be a prime below 2^31, got {p}")
    return p


class PrimeFieldMatrix:
    """Sparse integer matrix over GF(prime) with a deterministic rank.

    Entries are stored as a dict keyed by (row, col); values are reduced
    mod prime and zeros are dropped.  Rank runs by Gaussian elimination
    with partial pivoting in fixed column order: a packed-bitset XOR sweep
    for prime 2, dense int64 row reduction otherwise.  Matrices larger
    than MATRIX_ENTRY_CAP entries are rejected.
    """

    __slots__ = ("nrows", "ncols", "prime", "entries")

    def __init__(self, nrows: int, ncols: int, prime: int, entries: Mapping[tuple[int, int], int]):
        self.nrows = nrows
        self.ncols = ncols
        self.prime = prime
        cleaned: dict[tuple[int, int], int] = {}
        for (r, c), v in entries.items():
            if not (0 <= r < nrows and 0 <= c < ncols):
                raise ValueError(f"entry ({r},{c}) outside a {nrows}x{ncols} matrix")
            v %= prime
            if v:
                cleaned[(r, c)] = v
        self.entries = cleaned

    def _check_cap(self) -> None:
        if self.nrows * self.ncols > MATRIX_ENTRY_CAP:
            raise SizeCapError(
                f"boundary matrix with {self.nrows}x{self.ncols} entries exceeds the cap"
            )

    def to_dense(self) -> np.ndarray:
        self._check_cap()
        A = np.zeros((self.nrows, self.ncols), dtype=np.int64)
        for (r, c), v in self.entries.items():
            A[r, c] = v
        return A

    def rank(self) -> int:
        if not self.entries or self.nrows == 0 or self.ncols == 0:
            return 0
        self._check_cap()
        if self.prime == 2:
            return _rank_gf2(self)
        return _rank_modp(self.to_dense(), self.prime)


def _rank_gf2(M: PrimeFieldMatrix) -> int:
    nwords = (M.ncols + 63) // 64
    rows = np.zeros((M.nrows, nwords), dtype=np.uint64)
    for (r, c), _ in M.entries.items():
        rows[r, c >> 6] |= np.uint64(1 << (c & 63))
    rank = 0
    for col in range(M.ncols):
        w, b = col >> 6, col & 63
        colbits = (rows[rank:, w] >> np.uint64(b)) & np.uint64(1)
        nz = np.flatnonzero(colbits)
        if nz.size == 0:
            continue
        piv = rank + int(nz[0])
        if piv != rank:
            rows[[rank, piv]] = rows[[piv, rank]]
        below = rank + 1 + np.flatnonzero((rows[rank + 1:, w] >> np.uint64(b)) & np.uint64(1))
        if below.size:
            rows[below] ^= rows[rank]
        rank += 1
        if rank == M.nrows:
            break
    return rank


def _rank_modp(A: np.ndarray, p: int) -> int:
    # entries stay below p, so products fit comfortably in int64
    nrows, ncols = A.shape
    rank = 0
    for col in range(ncols):
        colvals = A[rank:, col]
        nz = np.flatnonzero(colvals)
        if nz.size == 0:
            continue
        piv = rank + int(nz[0])
        if piv != rank:
            A[[rank, piv]] = A[[piv, rank]]
        inv = pow(int(A[rank, col]), p - 2, p)
        A[rank, col:] = (A[rank, col:] * inv) % p
        factors = A[rank + 1:, col]
        hit = np.flatnonzero(factors)
        if hit.size:
            sub = A[rank + 1 + hit, col:]
            sub = (sub - np.outer(factors[hit], A[rank, col:])) % p
            A[rank + 1 + hit, col:] = sub
        rank += 1
        if rank == nrows:
            break
    return rank


def boundary_matrix(
    K: SimplicialComplex,
    p: int,
    prime: int = DEFAULT_PRIME,
    faces: dict[int, list[Face]] | None = None,
) -> PrimeFieldMatrix:
    """The boundary map from p-chains to (p-1)-chains as a matrix.

    Rows are (p-1)-faces and columns p-faces, both in lexicographic order.
    Degree 0 is the augmentation: every vertex maps to the empty face.
    """
    validate_prime(prime)
    if faces is None:
        faces = faces_by_dim(K)
    rows = faces.get(p - 1, [])
    cols = faces.get(p, [])
    row_index = {f: i for i, f in enumerate(rows)}
    entries: dict[tuple[int, int], int] = {}
    for j, face in enumerate(cols):
        for k in range(len(face)):
            sub = face[:k] + face[k + 1:]
            sign = 1 if k % 2 == 0 else prime - 1
            entries[(row_index[sub], j)] = sign
    return PrimeFieldMatrix(len(rows), len(cols), prime, entries)


@dataclass(frozen=True)
class HomologyProfile:
    """Reduced homology dimensions over GF(prime), nonzero degrees only."""

    prime: int
    dims: tuple[tuple[int, int], ...]

    def dim(self, p: int) -> int:
        for deg, d in self.dims:
            if deg == p:
                return d
        return 0

    def as_dict(self) -> dict[int, int]:
        return dict(self.dims)

    @property
    def is_trivial(self) -> bool:
        return not self.dims

    def __repr__(self) -> str:
        body = ", ".join(f"H~{p}={d}" for p, d in self.dims) or "trivial"
        return f"HomologyProfile({body}; GF({self.prime}))"


def reduced_homology_dims(
    K: SimplicialComplex,
    p_field: int = DEFAULT_PRIME,
    cap: int = DEFAULT_FACE_CAP,
) -> HomologyProfile:
    """Reduced homology dimensions of K over GF(p_field), all degrees.

    Degrees run from -1 through the dimension of K; everything outside
    that range is zero and omitted from the profile.
    """
    validate_prime(p_field)
    if K.is_void:
        return HomologyProfile(prime=p_field, dims=())
    faces = faces_by_dim(K, cap=cap)
    top = max(faces)
    ranks: dict[int, int] = {}
    for p in range(0, top + 1):
        ranks[p] = boundary_matrix(K, p, p_field, faces).rank()
    dims = []
    for p in range(-1, top + 1):
        d = len(faces.get(p, ())) - ranks.get(p, 0) - ranks.get(p + 1, 0)
        if d:
            dims.append((p, d))
    return HomologyProfile(prime=p_field, dims=tuple(dims))


def reduced_euler_characteristic(K: SimplicialComplex, cap: int = DEFAULT_FACE_CAP) -> int:
    """Alternating face-count sum including the empty face; 0 for void."""
    total = 0
    for p, fl in faces_by_dim(K, cap=cap).items():
        total += len(fl) if p % 2 == 0 else -len(fl)
    return total

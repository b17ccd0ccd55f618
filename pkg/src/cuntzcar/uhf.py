"""Matrix realizations.

Gauge-invariant polynomials live in the UHF tower: a balanced monomial
``(I, J)`` with ``|I| = |J| = k`` is the matrix unit ``E_{I,J}`` of
``M_{d^k}``, rows and columns indexed by words in lexicographic order (first
letter most significant).  With this convention ``rho(X) = 1 (x) X``,
``zeta(X) = Z (x) X`` and the level embedding is ``X -> X (x) 1``.

Non-gauge-invariant elements have no finite-dimensional model; for them we
compress the permutative representation ``psi_i e_n = e_{d n + i - 1}`` of
O_d on l^2(N) to ``span{e_0, ..., e_{d^L - 1}}``.  Compressions never
exceed the C*-norm, and they grow with ``L``.
"""

from __future__ import annotations

from typing import Iterable, Mapping

import numpy as np
import scipy.sparse as sp

from .algebra import Element, expand_to_level, require_gauge_invariant
from .config import DEFAULT, require_within
from .errors import LevelTooSmall
from .scalar import ONE, ZERO, Scalar

Entries = Mapping[tuple[int, int], Scalar]


class UhfMatrix:
    """Exact ``d^k x d^k`` matrix over Q(i, sqrt2), stored sparsely."""

    __slots__ = ("level", "d", "_entries")

    def __init__(self, level: int, entries: Entries | None = None, d: int = 2) -> None:
        self.level = level
        self.d = d
        n = d**level
        clean: dict[tuple[int, int], Scalar] = {}
        for (r, c), v in (entries or {}).items():
            if not (0 <= r < n and 0 <= c < n):
                raise IndexError(f"entry ({r}, {c}) outside a {n}x{n} matrix")
            v = Scalar.coerce(v)
            if not v.is_zero():
                clean[(r, c)] = v
        self._entries = clean

    @classmethod
    def _raw(cls, level: int, d: int, entries: dict[tuple[int, int], Scalar]) -> UhfMatrix:
        new = object.__new__(cls)
        new.level, new.d, new._entries = level, d, entries
        return new

    @classmethod
    def identity(cls, level: int, d: int = 2) -> UhfMatrix:
        return cls._raw(level, d, {(r, r): ONE for r in range(d**level)})

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable], d: int = 2) -> UhfMatrix:
        rows = [list(r) for r in rows]
        n = len(rows)
        level = 0
        while d**level < n:
            level += 1
        if d**level != n or any(len(r) != n for r in rows):
            raise ValueError(f"matrix must be square of size a power of {d}")
        return cls(level, {(i, j): v for i, r in enumerate(rows) for j, v in enumerate(r)}, d)

    @property
    def size(self) -> int:
        return self.d**self.level

    @property
    def entries(self) -> dict[tuple[int, int], Scalar]:
        return dict(self._entries)

    def entry(self, r: int, c: int) -> Scalar:
        return self._entries.get((r, c), ZERO)

    def _same_shape(self, other: UhfMatrix) -> None:
        if (self.level, self.d) != (other.level, other.d):
            raise ValueError("matrix shapes differ")

    def __add__(self, other: UhfMatrix) -> UhfMatrix:
        self._same_shape(other)
        acc = dict(self._entries)
        for k, v in other._entries.items():
            acc[k] = acc[k] + v if k in acc else v
        return UhfMatrix._raw(self.level, self.d, {k: v for k, v in acc.items() if v})

    def __neg__(self) -> UhfMatrix:
        return UhfMatrix._raw(self.level, self.d, {k: -v for k, v in self._entries.items()})

    def __sub__(self, other: UhfMatrix) -> UhfMatrix:
        return self + (-other)

    def scale(self, c) -> UhfMatrix:
        c = Scalar.coerce(c)
        return UhfMatrix._raw(self.level, self.d,
                              {k: v * c for k, v in self._entries.items() if not c.is_zero()})

    def __matmul__(self, other: UhfMatrix) -> UhfMatrix:
        self._same_shape(other)
        by_row: dict[int, list[tuple[int, Scalar]]] = {}
        for (r, c), v in other._entries.items():
            by_row.setdefault(r, []).append((c, v))
        acc: dict[tuple[int, int], Scalar] = {}
        for (r, k), v in self._entries.items():
            for c, w in by_row.get(k, ()):
                key = (r, c)
                p = v * w
                acc[key] = acc[key] + p if key in acc else p
        return UhfMatrix._raw(self.level, self.d, {k: v for k, v in acc.items() if v})

    def adjoint(self) -> UhfMatrix:
        """Conjugate transpose."""
        return UhfMatrix._raw(self.level, self.d,
                              {(c, r): v.conj() for (r, c), v in self._entries.items()})

    def kron(self, other: UhfMatrix) -> UhfMatrix:
        if self.d != other.d:
            raise ValueError("tensor factors must share d")
        n = other.size
        out = {}
        for (r1, c1), v in self._entries.items():
            for (r2, c2), w in other._entries.items():
                out[(r1 * n + r2, c1 * n + c2)] = v * w
        return UhfMatrix._raw(self.level + other.level, self.d, out)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, UhfMatrix):
            return NotImplemented
        return (self.level, self.d) == (other.level, other.d) and self._entries == other._entries

    def __hash__(self) -> int:
        return hash((self.level, self.d, frozenset(self._entries.items())))

    def is_zero(self) -> bool:
        return not self._entries

    def to_numpy(self) -> np.ndarray:
        out = np.zeros((self.size, self.size), dtype=complex)
        for (r, c), v in self._entries.items():
            out[r, c] = complex(v)
        return out

    def to_rows(self) -> list[list[Scalar]]:
        return [[self.entry(r, c) for c in range(self.size)] for r in range(self.size)]

    def __repr__(self) -> str:
        return f"UhfMatrix(level={self.level}, d={self.d}, nnz={len(self._entries)})"

    def __str__(self) -> str:
        rows = self.to_rows()
        cells = [[str(v) for v in row] for row in rows]
        width = max((len(s) for row in cells for s in row), default=1)
        return "\n".join("[" + " ".join(s.rjust(width) for s in row) + "]" for row in cells)


def word_index(word: tuple[int, ...], d: int = 2) -> int:
    idx = 0
    for letter in word:
        idx = idx * d + (letter - 1)
    return idx


def minimal_level(x: Element) -> int:
    return x.max_level()


def to_matrix_level(x: Element, level: int, max_level: int | None = None) -> UhfMatrix:
    """Matrix of a gauge-invariant polynomial at UHF level ``level``."""
    require_gauge_invariant(x)
    require_within("UHF level", level, DEFAULT.max_level if max_level is None else max_level)
    if level < x.max_level():
        raise LevelTooSmall(f"element needs level >= {x.max_level()}, got {level}")
    d = x.d
    expanded = expand_to_level(x, level)
    return UhfMatrix._raw(level, d, {
        (word_index(m.creators, d), word_index(m.annihilators, d)): c
        for m, c in expanded._terms.items()})


def _pauli_z() -> UhfMatrix:
    return UhfMatrix(1, {(0, 0): 1, (1, 1): -1})


def _raising() -> UhfMatrix:
    return UhfMatrix(1, {(0, 1): 1})


def jordan_wigner(n: int, N: int) -> UhfMatrix:
    """``Z^(n-1) (x) P (x) 1^(N-n)`` with ``Z = diag(1, -1)``, ``P = E_{1,2}``."""
    if not (1 <= n <= N):
        raise ValueError(f"need 1 <= n <= N, got n={n}, N={N}")
    out = UhfMatrix.identity(0)
    for _ in range(n - 1):
        out = out.kron(_pauli_z())
    out = out.kron(_raising())
    return out.kron(UhfMatrix.identity(N - n))


def operator_norm(m: np.ndarray | sp.spmatrix) -> float:
    """Largest singular value."""
    if sp.issparse(m):
        if m.nnz == 0:
            return 0.0
        if min(m.shape) <= 256:
            return float(np.linalg.norm(m.toarray(), 2))
        return _lanczos_norm(m.tocsr())
    return float(np.linalg.norm(m, 2)) if m.size else 0.0


def _lanczos_norm(m: sp.csr_matrix, max_dim: int = 400, rtol: float = 1e-11) -> float:
    """Top singular value by Rayleigh-Ritz on a Krylov space of ``m^* m``.

    Ritz values never exceed the true eigenvalue, so the result is always a
    valid lower bound.  Iteration stops once the Ritz residual is below
    ``rtol`` relative to the Ritz value, or when the Krylov space becomes
    invariant (then the Ritz values are exact).  Compressions of monomials
    have very few distinct singular values and land in the second case;
    ARPACK tends to stall on exactly these.
    """
    a = (m.conj().T @ m).tocsr()
    n = a.shape[0]
    dim = min(max_dim, n)
    v = np.random.default_rng(0).standard_normal(n).astype(a.dtype)
    q = np.empty((n, dim), dtype=a.dtype)
    aq = np.empty((n, dim), dtype=a.dtype)
    h = np.zeros((dim, dim), dtype=a.dtype)
    q[:, 0] = v / np.linalg.norm(v)
    for k in range(dim):
        aq[:, k] = a @ q[:, k]
        h[:k + 1, k] = q[:, :k + 1].conj().T @ aq[:, k]
        h[k, :k] = h[:k, k].conj()
        w = aq[:, k].copy()
        for _ in range(2):  # full reorthogonalization, twice
            w -= q[:, :k + 1] @ (q[:, :k + 1].conj().T @ w)
        norm_w = np.linalg.norm(w)
        # invariant subspace: the Ritz values are exact
        invariant = norm_w <= 1e-13 * max(np.linalg.norm(aq[:, k]), 1e-300)
        if invariant or k + 1 == dim or k % 8 == 7:
            vals, vecs = np.linalg.eigh(h[:k + 1, :k + 1])
            top, y = float(vals[-1]), vecs[:, -1]
            residual = aq[:, :k + 1] @ y - top * (q[:, :k + 1] @ y)
            if invariant or k + 1 == dim or np.linalg.norm(residual) <= rtol * max(top, 1e-300):
                break
        q[:, k + 1] = w / norm_w
    return float(np.sqrt(max(top, 0.0)))


def norm_gauge_invariant(x: Element) -> float:
    """C*-norm of a gauge-invariant polynomial (exact up to float SVD)."""
    require_gauge_invariant(x)
    if x.is_structurally_zero():
        return 0.0
    return operator_norm(to_matrix_level(x, x.max_level(), max_level=x.max_level()).to_numpy())


def min_eigenvalue_gauge_invariant(x: Element) -> float:
    """Smallest eigenvalue of the Hermitian part of ``x`` at its minimal level."""
    require_gauge_invariant(x)
    m = to_matrix_level(x, x.max_level(), max_level=x.max_level()).to_numpy()
    return float(np.linalg.eigvalsh((m + m.conj().T) / 2).min())


# -- permutative representation ----------------------------------------------

def permutative_compression(x: Element, depth: int, max_depth: int | None = None) -> sp.csr_matrix:
    """Compression of ``x`` to the first ``d^depth`` basis vectors."""
    if depth < 1:
        raise ValueError("depth must be positive")
    require_within("permutative depth", depth, DEFAULT.max_depth if max_depth is None else max_depth)
    d = x.d
    size = d**depth
    cols = np.arange(size, dtype=np.int64)
    rows_all, cols_all, vals_all = [], [], []
    for m, c in x._terms.items():
        n = cols.copy()
        alive = np.ones(size, dtype=bool)
        # psi_J^* = psi_{jn}^* ... psi_{j1}^*: psi_{j1}^* acts first
        for j in m.annihilators:
            alive &= (n % d) == (j - 1)
            n //= d
        for i in reversed(m.creators):
            n = n * d + (i - 1)
        alive &= n < size
        rows_all.append(n[alive])
        cols_all.append(cols[alive])
        vals_all.append(np.full(int(alive.sum()), complex(c)))
    if not rows_all:
        return sp.csr_matrix((size, size), dtype=complex)
    return sp.csr_matrix((np.concatenate(vals_all),
                          (np.concatenate(rows_all), np.concatenate(cols_all))),
                         shape=(size, size), dtype=complex)


def norm_lower_bound(x: Element, depth: int, max_depth: int | None = None) -> float:
    """Lower bound for the C*-norm of ``x`` from a depth-``depth`` compression."""
    return operator_norm(permutative_compression(x, depth, max_depth))


def lower_bound_sequence(x: Element, depth: int, max_depth: int | None = None) -> list[float]:
    """``[norm_lower_bound(x, L) for L in 1..depth]``."""
    return [norm_lower_bound(x, L, max_depth) for L in range(1, depth + 1)]

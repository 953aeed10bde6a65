"""Temperley-Lieb generators on matchings and the exact loop-model groundstate.

States are column vectors indexed by matchings in the canonical (lex
a-sequence) order.  The generator e_i replaces the arches at i and i+1 by
an arch (i, i+1) plus an arch joining the former partners; e_0 acts across
the boundary on positions 1 and 2n.  The Hamiltonian is
H = sum_i (1 - e_i), and the groundstate is its one-dimensional kernel,
normalized so the fully nested matching has component 1.  All components
are then positive integers summing to the total loop count a_n(n).

The kernel is found by symmetry reduction (the generator set is invariant
under rotation and mirror, so the groundstate is constant on dihedral
orbits), dense modular elimination on the lumped system for a few word-size
primes, CRT reconstruction, and an exact integer verification of the full
linear system.  The verification step is what makes the result exact;
the modular path is only a search strategy.
"""

from __future__ import annotations

import json
import os
import tempfile
import time
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .fpl import a_n
from .matchings import Matching, catalan, enumerate_matchings, nest

# The lumped elimination runs in float64 with deferred reduction: with
# p < 2^20, products of reduced entries are < 2^40, and a trailing entry
# absorbs at most ~2^12 of them before its row is reduced again, staying
# well inside the 2^53 window where float64 arithmetic is exact.
_PRIMES = [1048573, 1048571, 1048559, 1048549, 1048517, 1048507, 1048447, 1048433]

DEFAULT_PRACTICAL_BOUND = 12


class ResourceLimitError(RuntimeError):
    """Requested size exceeds the configured practical bound."""


def apply_e(i: int, pi: Matching) -> Matching:
    """Generator e_i: new arch at (i, i+1), former partners rejoined.

    Indices run 0..2n-1; e_0 creates the arch {1, 2n}.
    """
    n2 = 2 * pi.n
    if not 0 <= i <= n2 - 1:
        raise ValueError(f"generator index {i} out of range 0..{n2 - 1}")
    u, v = (n2, 1) if i == 0 else (i, i + 1)
    partner = list(pi.partner)
    if partner[u] == v:
        return pi
    a, b = partner[u], partner[v]
    partner[u], partner[v] = v, u
    partner[a], partner[b] = b, a
    return Matching(tuple(partner))


class SparseIntMatrix:
    """Square integer matrix held as per-row dicts {col: value}."""

    __slots__ = ("size", "rows")

    def __init__(self, size: int):
        self.size = size
        self.rows: list[dict[int, int]] = [dict() for _ in range(size)]

    def add(self, r: int, c: int, v: int) -> None:
        row = self.rows[r]
        w = row.get(c, 0) + v
        if w:
            row[c] = w
        else:
            row.pop(c, None)

    def matvec(self, vec):
        return [sum(v * vec[c] for c, v in row.items()) for row in self.rows]

    def column_sums(self) -> list[int]:
        out = [0] * self.size
        for row in self.rows:
            for c, v in row.items():
                out[c] += v
        return out

    def entries(self):
        for r, row in enumerate(self.rows):
            for c, v in row.items():
                yield r, c, v


def hamiltonian(n: int) -> SparseIntMatrix:
    """H = sum_{i=0}^{2n-1} (1 - e_i) on the size-n state space.

    Entry (pi, sigma) is 2n*[pi == sigma] - #{i : e_i sigma = pi}; columns
    sum to zero since each e_i maps sigma to exactly one matching.
    """
    ms = enumerate_matchings(n)
    index = {m: k for k, m in enumerate(ms)}
    H = SparseIntMatrix(len(ms))
    n2 = 2 * n
    for col, sigma in enumerate(ms):
        H.add(col, col, n2)
        for i in range(n2):
            H.add(index[apply_e(i, sigma)], col, -1)
    return H


# -- dihedral orbits and the lumped system ---------------------------------
#
# The solver works on raw 0-based partner tuples rather than Matching
# objects: at size 12 there are 208012 matchings and every one is hit by
# all 2n generators and the full dihedral group, so constructor overhead
# dominates otherwise.


def _partner_tuples(n: int) -> list[tuple[int, ...]]:
    """0-based partner tuples in the canonical (lex a-sequence) order."""
    out: list[tuple[int, ...]] = []
    partner = [0] * (2 * n)
    stack: list[int] = []

    def rec(pos: int, opens: int) -> None:
        if pos == 2 * n:
            out.append(tuple(partner))
            return
        if opens < n:  # '(' sorts before ')' and gives the lex a-order
            stack.append(pos)
            rec(pos + 1, opens + 1)
            stack.pop()
        if stack:
            j = stack.pop()
            partner[pos], partner[j] = j, pos
            rec(pos + 1, opens)
            stack.append(j)

    rec(0, 0)
    return out


def _rotate_t(t: tuple[int, ...]) -> tuple[int, ...]:
    n2 = len(t)
    out = [0] * n2
    for i in range(n2):
        out[i] = (t[(i + 1) % n2] - 1) % n2
    return tuple(out)


def _mirror_t(t: tuple[int, ...]) -> tuple[int, ...]:
    n2 = len(t)
    out = [0] * n2
    for i in range(n2):
        out[n2 - 1 - i] = n2 - 1 - t[i]
    return tuple(out)


def _apply_e_t(i: int, t: tuple[int, ...]) -> tuple[int, ...]:
    n2 = len(t)
    u, v = (n2 - 1, 0) if i == 0 else (i - 1, i)
    if t[u] == v:
        return t
    a, b = t[u], t[v]
    out = list(t)
    out[u], out[v] = v, u
    out[a], out[b] = b, a
    return tuple(out)


def _dihedral_orbits(tuples: list[tuple[int, ...]]) -> tuple[list[int], list[int]]:
    """(orbit id per index, orbit sizes) under rotation and mirror."""
    index = {t: k for k, t in enumerate(tuples)}
    orbit_of = [-1] * len(tuples)
    sizes: list[int] = []
    for k, t in enumerate(tuples):
        if orbit_of[k] >= 0:
            continue
        oid = len(sizes)
        members = set()
        cur = t
        for _ in range(len(t)):
            members.add(index[cur])
            members.add(index[_mirror_t(cur)])
            cur = _rotate_t(cur)
        for j in members:
            orbit_of[j] = oid
        sizes.append(len(members))
    return orbit_of, sizes


def _lumped_system(n: int) -> tuple[list[tuple[int, ...]], list[int], list[int], list[dict[int, int]]]:
    """Integer matrix K with K w = 0 iff the orbit weights w are a groundstate.

    K[r][c] = 2n*size[r]*[r == c] - sum over sigma in orbit c of
    #{i : e_i sigma in orbit r}.
    """
    tuples = _partner_tuples(n)
    orbit_of, sizes = _dihedral_orbits(tuples)
    nor = len(sizes)
    rows: list[dict[int, int]] = [dict() for _ in range(nor)]
    n2 = 2 * n
    index = {t: k for k, t in enumerate(tuples)}
    for k, sigma in enumerate(tuples):
        c = orbit_of[k]
        for i in range(n2):
            r = orbit_of[index[_apply_e_t(i, sigma)]]
            rows[r][c] = rows[r].get(c, 0) - 1
    for r in range(nor):
        rows[r][r] = rows[r].get(r, 0) + n2 * sizes[r]
    return tuples, orbit_of, sizes, rows


def _kernel_mod_p(rows: list[dict[int, int]], norm_idx: int, p: int) -> list[int] | None:
    """One-dimensional kernel of the lumped matrix mod p, scaled so the
    coordinate ``norm_idx`` equals 1.  None if the rank is not size-1 or
    the normalization coordinate vanishes.

    Forward elimination keeps trailing entries unreduced (exact in float64
    by the size bound on p) and reduces a row only when it pivots.
    """
    size = len(rows)
    assert size * p * p < 1 << 53, "deferred-reduction window exceeded"
    A = np.zeros((size, size), dtype=np.float64)
    for r, row in enumerate(rows):
        for c, v in row.items():
            A[r, c] = v % p
    piv_rows: list[tuple[int, int]] = []
    block = 256
    r = 0
    for c0 in range(0, size, block):
        c1 = min(c0 + block, size)
        r0 = r
        M = np.zeros((size, c1 - c0), dtype=np.float64)
        panel: list[tuple[int, int, int, int]] = []  # (row, col, local k, inv)
        for c in range(c0, c1):
            np.mod(A[r:, c], p, out=A[r:, c])
            nz = np.nonzero(A[r:, c])[0]
            if len(nz) == 0:
                continue
            pr = r + int(nz[0])
            if pr != r:
                A[[r, pr]] = A[[pr, r]]
                M[[r, pr]] = M[[pr, r]]
            np.mod(A[r, c:c1], p, out=A[r, c:c1])
            inv = pow(int(A[r, c]), p - 2, p)
            A[r, c:c1] *= inv
            np.mod(A[r, c:c1], p, out=A[r, c:c1])
            col = A[r + 1 :, c]
            k = len(panel)
            M[r + 1 :, k] = col
            if col.any():
                A[r + 1 :, c:c1] -= np.outer(col, A[r, c:c1])
            panel.append((r, c, k, inv))
            piv_rows.append((r, c))
            r += 1
            if r == size:
                break
        if c1 < size and panel:
            # finish the panel's pivot rows on the trailing columns, then
            # push one rank-m update to everything below (BLAS gemm)
            for rj, _, kj, inv_j in panel:
                if kj:
                    A[rj, c1:] -= M[rj, :kj] @ A[r0 : r0 + kj, c1:]
                np.mod(A[rj, c1:], p, out=A[rj, c1:])
                A[rj, c1:] *= inv_j
                np.mod(A[rj, c1:], p, out=A[rj, c1:])
            m = len(panel)
            if r < size:
                A[r:, c1:] -= M[r:, :m] @ A[r0 : r0 + m, c1:]
        if r == size:
            break
    free_cols = sorted(set(range(size)) - {c for _, c in piv_rows})
    if len(free_cols) != 1:
        return None
    free = free_cols[0]
    x = np.zeros(size, dtype=np.float64)
    x[free] = 1
    for r, c in reversed(piv_rows):
        acc = int(A[r, c + 1 :] @ x[c + 1 :]) % p
        x[c] = (-acc) % p
    if x[norm_idx] == 0:
        return None
    scale = pow(int(x[norm_idx]), p - 2, p)
    return [(int(v) * scale) % p for v in x]


def _crt(residues: list[list[int]], primes: list[int]) -> list[int]:
    M = 1
    for p in primes:
        M *= p
    coeffs = []
    for i, p in enumerate(primes):
        Mi = M // p
        coeffs.append(Mi * pow(Mi % p, p - 2, p))
    out = []
    for vals in zip(*residues):
        x = sum(v * c for v, c in zip(vals, coeffs)) % M
        out.append(x)
    return out


@dataclass
class GroundState:
    """Exact groundstate at size n: component map and its invariants."""

    n: int
    components: dict[Matching, int]

    @property
    def total(self) -> int:
        return sum(self.components.values())

    def __getitem__(self, pi: Matching) -> int:
        return self.components[pi]

    def vector(self) -> list[int]:
        return [self.components[m] for m in enumerate_matchings(self.n)]


def _solve_groundstate(n: int) -> list[int]:
    """Exact component vector in canonical order, via lumped modular solve
    plus integer verification."""
    tuples, orbit_of, sizes, rows = _lumped_system(n)
    nested = tuple(2 * n - 1 - i for i in range(2 * n))
    norm_idx = orbit_of[tuples.index(nested)]
    residues = []
    used: list[int] = []
    for p in _PRIMES:
        sol = _kernel_mod_p(rows, norm_idx, p)
        if sol is None:
            continue
        residues.append(sol)
        used.append(p)
        if len(used) == _primes_needed(n):
            break
    if len(used) < _primes_needed(n):
        raise AssertionError(
            f"kernel not one-dimensional modulo every prime tried at n={n}"
        )
    w = _crt(residues, used)
    # Exact checks: K w = 0 over the integers, normalization, positivity.
    for r, row in enumerate(rows):
        if sum(v * w[c] for c, v in row.items()) != 0:
            raise AssertionError(f"lumped system not satisfied exactly at n={n}")
    if w[norm_idx] != 1:
        raise AssertionError(f"normalization coordinate is {w[norm_idx]}, not 1")
    if any(v <= 0 for v in w):
        raise AssertionError(f"nonpositive groundstate component at n={n}")
    total = sum(s * v for s, v in zip(sizes, w))
    if total != a_n(n):
        raise AssertionError(
            f"groundstate sum {total} differs from product-formula total at n={n}"
        )
    return [w[orbit_of[k]] for k in range(len(tuples))]


def _primes_needed(n: int) -> int:
    bound = a_n(n)  # every component is below the total
    need = 1
    acc = _PRIMES[0]
    while acc <= 2 * bound:
        acc *= _PRIMES[need]
        need += 1
    return need


# -- cache ------------------------------------------------------------------

CACHE_ENV = "LOOPLAB_CACHE"


def cache_dir() -> str:
    return os.environ.get(
        CACHE_ENV, os.path.join(os.path.expanduser("~"), ".cache", "looplab")
    )


def _cache_path(n: int, directory: str | None) -> str:
    return os.path.join(directory or cache_dir(), f"groundstate_{n}.json")


def _write_atomic(path: str, payload: dict) -> None:
    os.makedirs(os.path.dirname(path), exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=os.path.dirname(path), suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            json.dump(payload, fh)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


_memory_cache: dict[int, list[int]] = {}


def groundstate_vector(
    n: int,
    directory: str | None = None,
    practical_bound: int | None = None,
) -> list[int]:
    """Component vector in canonical order, cached in memory and on disk."""
    bound = practical_bound if practical_bound is not None else DEFAULT_PRACTICAL_BOUND
    if n > bound:
        raise ResourceLimitError(
            f"groundstate size {n} exceeds the practical bound {bound} "
            f"(Catalan({n}) = {catalan(n)} states)"
        )
    if n in _memory_cache:
        return _memory_cache[n]
    path = _cache_path(n, directory)
    if os.path.exists(path):
        with open(path) as fh:
            payload = json.load(fh)
        if (
            payload.get("version") == 1
            and payload.get("n") == n
            and payload.get("order") == "lex-a-seq"
            and len(payload.get("components", ())) == catalan(n)
        ):
            vec = [int(v) for v in payload["components"]]
            _memory_cache[n] = vec
            return vec
    t0 = time.time()
    vec = _solve_groundstate(n)
    payload = {
        "version": 1,
        "n": n,
        "order": "lex-a-seq",
        "components": vec,
        "seconds": round(time.time() - t0, 3),
    }
    _write_atomic(path, payload)
    _memory_cache[n] = vec
    return vec


def groundstate(n: int, directory: str | None = None, practical_bound: int | None = None) -> GroundState:
    vec = groundstate_vector(n, directory, practical_bound)
    ms = enumerate_matchings(n)
    return GroundState(n=n, components=dict(zip(ms, vec)))


_index_cache: dict[int, dict[Matching, int]] = {}


def matching_index(n: int) -> dict[Matching, int]:
    """Position of each size-n matching in the canonical order (memoized)."""
    if n not in _index_cache:
        _index_cache[n] = {m: k for k, m in enumerate(enumerate_matchings(n))}
    return _index_cache[n]


def psi_of(
    pi: Matching,
    p: int = 0,
    directory: str | None = None,
    practical_bound: int | None = None,
) -> int:
    """Groundstate component at pi surrounded by p nested arches."""
    if p < 0:
        raise ValueError("p must be nonnegative")
    size = pi.n + p
    vec = groundstate_vector(size, directory, practical_bound)
    return vec[matching_index(size)[nest(pi, p)]]

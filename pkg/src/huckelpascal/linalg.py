"""Exact determinants, permanents and characteristic polynomials.

All algorithms work over whichever exact ring the matrix entries live in
(plain integers, Fraction, MultiPoly, CycInt, GaussInt); the only operation
a ring must provide beyond +,-,* is exact division, which integers do by
divmod-with-check and the custom rings via their ``exact_div``.

Determinant strategies (all return identical values where applicable):

* ``fraction-free-elimination``: one-step Bareiss with row swaps.  The
  workhorse; O(n^3) ring operations, every division exact by construction.
* ``sparse-minor-expansion``: row-by-row Laplace expansion memoized on the
  free-column bitmask; thrives on the very sparse adjacency matrices.
* ``bivariate-interpolation``: for matrices whose entries involve a single
  parameter pair and whose determinant is homogeneous of known degree d,
  sample at (1, t) for t = 0..d and solve the Vandermonde system exactly.
* ``permutation-expansion``: depth-first walk of nonzero supports tracking
  permutation parity; it doubles as the digraph loop-covering sum and
  powers the even-permutation census.

The permanent uses Ryser's inclusion-exclusion with Gray-code column
toggles.  Beyond dimension 20 the integer path switches to residues modulo
31-bit primes (a numba kernel) recombined by CRT against the rigorous bound
|perm| <= prod_i sum_j |a_ij|, so the result stays exact.
"""

from __future__ import annotations

import os
from fractions import Fraction
from typing import Sequence

from .cyclotomic import CycInt, GaussInt
from .matrices import PolyMatrix
from .poly import MultiPoly, NotDivisible

DET_STRATEGIES = (
    "fraction-free-elimination",
    "sparse-minor-expansion",
    "bivariate-interpolation",
    "permutation-expansion",
)


class StrategyPrecondition(ValueError):
    """The chosen determinant strategy cannot run on this matrix."""


class TooLarge(ValueError):
    """Cost guard tripped; raise HUCKEL_MAX_SIZE to override."""


class NotRankOne(ValueError):
    """rank1_factor input does not have the scaled rank-1 shape."""


def size_guard(dim: int, default_limit: int, what: str) -> None:
    limit = max(default_limit, int(os.environ.get("HUCKEL_MAX_SIZE", "0")))
    if dim > limit:
        raise TooLarge(
            f"{what} guard: dimension {dim} exceeds {limit} "
            "(set HUCKEL_MAX_SIZE to override)"
        )


# -- ring plumbing -----------------------------------------------------------


def ring_kind(M: PolyMatrix) -> str:
    kinds = set()
    for row in M.rows:
        for e in row:
            if isinstance(e, MultiPoly):
                kinds.add("poly")
            elif isinstance(e, CycInt):
                kinds.add("cyc")
            elif isinstance(e, GaussInt):
                kinds.add("gauss")
            elif isinstance(e, Fraction):
                kinds.add("fraction")
            elif isinstance(e, int):
                pass
            else:
                raise TypeError(f"unsupported entry type {type(e).__name__}")
    if len(kinds) > 1:
        raise TypeError(f"mixed entry rings {sorted(kinds)}")
    return kinds.pop() if kinds else "int"


_LIFTS = {
    "int": int,
    "poly": lambda c: MultiPoly.const(c),
    "cyc": CycInt,
    "gauss": GaussInt,
    "fraction": Fraction,
}


def _lift(c: int, kind: str):
    return _LIFTS[kind](c)


def _lift_rows(M: PolyMatrix, kind: str) -> list[list]:
    lift = _LIFTS[kind]
    return [
        [lift(e) if isinstance(e, int) else e for e in row] for row in M.rows
    ]


def _exact_div(a, b, kind: str):
    if kind == "int":
        q, r = divmod(a, b)
        if r:
            raise NotDivisible(f"{a} not divisible by {b}")
        return q
    if kind == "fraction":
        return a / b
    return a.exact_div(b)


def _nz(e) -> bool:
    return not (e == 0)


# -- determinants ----------------------------------------------------------------


def det(M: PolyMatrix, strategy: str = "fraction-free-elimination", degree: int | None = None):
    """Exact determinant of a square matrix via the chosen strategy."""
    n = M.dim
    kind = ring_kind(M)
    if strategy == "fraction-free-elimination":
        return _det_bareiss(_lift_rows(M, kind), kind)
    if strategy == "sparse-minor-expansion":
        return _det_minor(_lift_rows(M, kind), kind)
    if strategy == "bivariate-interpolation":
        return _det_interpolation(M, degree)
    if strategy == "permutation-expansion":
        return _det_permutation(_lift_rows(M, kind), kind)
    raise StrategyPrecondition(f"unknown strategy {strategy!r}")


def _det_bareiss(a: list[list], kind: str):
    n = len(a)
    if n == 0:
        return _lift(1, kind)
    sign = 1
    prev = _lift(1, kind)
    for c in range(n - 1):
        piv = next((r for r in range(c, n) if _nz(a[r][c])), None)
        if piv is None:
            # the trailing block has a zero column
            return _lift(0, kind)
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            sign = -sign
        pc = a[c][c]
        for i in range(c + 1, n):
            ric = a[i][c]
            row_i, row_c = a[i], a[c]
            for j in range(c + 1, n):
                row_i[j] = _exact_div(pc * row_i[j] - ric * row_c[j], prev, kind)
            row_i[c] = _lift(0, kind)
        prev = pc
    last = a[n - 1][n - 1]
    return last if sign > 0 else -last


def _det_minor(rows: list[list], kind: str):
    n = len(rows)
    if n == 0:
        return _lift(1, kind)
    memo: dict[int, object] = {}

    def rec(r: int, mask: int):
        if r == n:
            return _lift(1, kind)
        if mask in memo:
            return memo[mask]
        total = _lift(0, kind)
        pos = 0
        for j in range(n):
            if not (mask >> j) & 1:
                continue
            e = rows[r][j]
            if _nz(e):
                sub = rec(r + 1, mask & ~(1 << j))
                if _nz(sub):
                    term = e * sub
                    total = total + term if pos % 2 == 0 else total - term
            pos += 1
        memo[mask] = total
        return total

    return rec(0, (1 << n) - 1)


def _det_permutation(rows: list[list], kind: str):
    n = len(rows)
    total = _lift(0, kind)
    full = (1 << n) - 1

    def rec(r: int, free: int, inv: int, prod):
        nonlocal total
        if r == n:
            total = total + prod if inv % 2 == 0 else total - prod
            return
        used = full & ~free
        for j in range(n):
            if not (free >> j) & 1:
                continue
            e = rows[r][j]
            if _nz(e):
                crossings = (used >> (j + 1)).bit_count()
                rec(r + 1, free & ~(1 << j), inv + crossings, prod * e)

    rec(0, full, 0, _lift(1, kind))
    return total


def permutation_parity_census(M: PolyMatrix) -> tuple[int, int]:
    """Count permutations with entirely nonzero support, split by parity.

    Over symbolic entries "nonzero support" means no structurally zero
    factor, so (even, odd) counts the loop coverings of the underlying graph
    by contribution sign.
    """
    n = M.dim
    rows = M.rows
    even = odd = 0
    full = (1 << n) - 1

    def rec(r: int, free: int, inv: int):
        nonlocal even, odd
        if r == n:
            if inv % 2 == 0:
                even += 1
            else:
                odd += 1
            return
        used = full & ~free
        for j in range(n):
            if (free >> j) & 1 and _nz(rows[r][j]):
                rec(r + 1, free & ~(1 << j), inv + (used >> (j + 1)).bit_count())

    rec(0, full, 0)
    return even, odd


def _det_interpolation(M: PolyMatrix, degree: int | None):
    if degree is None:
        raise StrategyPrecondition("bivariate interpolation needs the degree")
    if ring_kind(M) not in ("poly", "int"):
        raise StrategyPrecondition("bivariate interpolation needs polynomial entries")
    names: set[str] = set()
    for row in M.rows:
        for e in row:
            if isinstance(e, MultiPoly):
                names |= e.used_variables()
    pairs = {nm[1:] for nm in names if nm != "z"}
    if "z" in names or len(pairs) != 1:
        raise StrategyPrecondition(
            f"need exactly one parameter pair, found {sorted(names)}"
        )
    idx = int(pairs.pop())
    xn, yn = f"x{idx}", f"y{idx}"

    def sample(xv: int, yv: int) -> int:
        rows = [
            [
                e.evaluate({xn: xv, yn: yv}) if isinstance(e, MultiPoly) else e
                for e in row
            ]
            for row in M.rows
        ]
        return _det_bareiss(rows, "int")

    d = degree
    values = [sample(1, t) for t in range(d + 1)]
    coeffs = _solve_vandermonde(values)
    # homogeneity guard: det(2x, 2y) must equal 2^d det(x, y)
    if sample(2, 2) != 2**d * sum(coeffs):
        raise StrategyPrecondition(
            f"determinant is not homogeneous of degree {d}"
        )
    terms = {}
    for k, c in enumerate(coeffs):
        if c:
            exp = [0] * (2 * (idx + 1) + 1)
            exp[idx] = d - k
            exp[idx + 1 + idx] = k
            terms[tuple(exp)] = c
    return MultiPoly(terms, idx + 1)


def _solve_vandermonde(values: Sequence[int]) -> list[int]:
    """Coefficients of the unique degree<len polynomial with p(t)=values[t]."""
    d = len(values) - 1
    rows = [
        [Fraction(t**k) for k in range(d + 1)] + [Fraction(values[t])]
        for t in range(d + 1)
    ]
    for c in range(d + 1):
        piv = next(r for r in range(c, d + 1) if rows[r][c])
        rows[c], rows[piv] = rows[piv], rows[c]
        inv = 1 / rows[c][c]
        rows[c] = [v * inv for v in rows[c]]
        for r in range(d + 1):
            if r != c and rows[r][c]:
                f = rows[r][c]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[c])]
    out = []
    for r in range(d + 1):
        v = rows[r][-1]
        if v.denominator != 1:
            raise StrategyPrecondition(f"non-integer coefficient {v} recovered")
        out.append(int(v))
    return out


# -- permanents ------------------------------------------------------------------

_SYMBOLIC_PERM_LIMIT = 16
_EXACT_INT_PERM_LIMIT = 20
_MODULAR_PERM_LIMIT = 28


def permanent(M: PolyMatrix):
    """Exact permanent via Ryser/Gray-code inclusion-exclusion."""
    n = M.dim
    kind = ring_kind(M)
    if kind == "int":
        size_guard(n, _MODULAR_PERM_LIMIT, "integer permanent")
        if n <= _EXACT_INT_PERM_LIMIT:
            return _ryser_exact(_lift_rows(M, kind), kind)
        return _permanent_int_crt([list(r) for r in M.rows])
    size_guard(n, _SYMBOLIC_PERM_LIMIT, "symbolic permanent")
    return _ryser_exact(_lift_rows(M, kind), kind)


def _ryser_exact(rows: list[list], kind: str):
    n = len(rows)
    if n == 0:
        return _lift(1, kind)
    zero = _lift(0, kind)
    cols = [
        [(i, rows[i][j]) for i in range(n) if _nz(rows[i][j])] for j in range(n)
    ]
    sums = [zero] * n
    zero_count = n
    total = zero
    gray = 0
    pop = 0
    for g in range(1, 1 << n):
        new = g ^ (g >> 1)
        diff = new ^ gray
        j = diff.bit_length() - 1
        adding = bool(new & diff)
        pop += 1 if adding else -1
        for i, e in cols[j]:
            before = _nz(sums[i])
            sums[i] = sums[i] + e if adding else sums[i] - e
            after = _nz(sums[i])
            zero_count += (not after) - (not before)
        gray = new
        if zero_count == 0:
            prod = _lift(1, kind)
            for s in sums:
                prod = prod * s
            total = total + prod if (n - pop) % 2 == 0 else total - prod
    return total


# deterministic Miller-Rabin, valid far beyond 64-bit inputs we use
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _MR_WITNESSES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _primes_downward(start: int):
    p = start
    while True:
        if _is_prime(p):
            yield p
        p -= 1


_ryser_mod_kernel = None


def _get_mod_kernel():
    """Compile (once) the modular Ryser kernel; None if numba is missing."""
    global _ryser_mod_kernel
    if _ryser_mod_kernel is not None:
        return _ryser_mod_kernel
    try:
        import numba
        import numpy as np
    except ImportError:
        return None

    @numba.njit(cache=True)
    def kernel(a, p):  # pragma: no cover - numba-compiled
        n = a.shape[0]
        sums = np.zeros(n, dtype=np.int64)
        total = 0
        gray = 0
        pop = 0
        for g in range(1, 1 << n):
            new = g ^ (g >> 1)
            diff = new ^ gray
            j = 0
            d = diff
            while d > 1:
                d >>= 1
                j += 1
            if new & diff:
                pop += 1
                for i in range(n):
                    sums[i] = (sums[i] + a[i, j]) % p
            else:
                pop -= 1
                for i in range(n):
                    sums[i] = (sums[i] - a[i, j]) % p
            gray = new
            prod = 1
            for i in range(n):
                s = sums[i]
                if s == 0:
                    prod = 0
                    break
                prod = prod * s % p
            if prod != 0:
                if (n - pop) % 2 == 0:
                    total = (total + prod) % p
                else:
                    total = (total - prod) % p
        return total % p

    _ryser_mod_kernel = kernel
    return kernel


def _permanent_int_crt(rows: list[list[int]]) -> int:
    import numpy as np

    kernel = _get_mod_kernel()
    if kernel is None:
        raise TooLarge(
            "integer permanent beyond dimension "
            f"{_EXACT_INT_PERM_LIMIT} needs the numba modular kernel"
        )
    n = len(rows)
    bound = 1
    for row in rows:
        s = sum(abs(e) for e in row)
        if s == 0:
            return 0
        bound *= s
    primes = []
    modulus = 1
    gen = _primes_downward(2**31 - 1)
    while modulus <= 2 * bound:
        p = next(gen)
        primes.append(p)
        modulus *= p
    residue = 0
    mod_so_far = 1
    for p in primes:
        a = np.array([[e % p for e in row] for row in rows], dtype=np.int64)
        r = int(kernel(a, p))
        # incremental CRT
        t = ((r - residue) * pow(mod_so_far, -1, p)) % p
        residue += mod_so_far * t
        mod_so_far *= p
    if residue > mod_so_far // 2:
        residue -= mod_so_far
    return residue


# -- characteristic polynomial ------------------------------------------------------


def charpoly(M: PolyMatrix) -> MultiPoly:
    """det(zI + M) for an integer matrix (note the +z convention: the
    coefficient list read off this polynomial is symmetric for matrices
    whose eigenvalues come in reciprocal pairs)."""
    if ring_kind(M) != "int":
        raise StrategyPrecondition("charpoly expects an integer matrix")
    n = M.dim
    z = MultiPoly({(1,): 1}, 0)
    rows = [
        [
            MultiPoly.const(M[i, j]) + (z if i == j else 0)
            for j in range(n)
        ]
        for i in range(n)
    ]
    return _det_bareiss(rows, "poly")


def coefficient_list(p: MultiPoly, var: str, degree: int) -> list[int]:
    """Coefficients [c_0..c_degree] of a univariate polynomial in ``var``."""
    return [p.coefficient({var: k}) for k in range(degree + 1)]


# -- rank-1 factorization -------------------------------------------------------------


def rank1_factor(W: PolyMatrix, denominator: MultiPoly | int = 1):
    """Decompose W = numerator * u u^T with u over {0, +1, -1}.

    ``W`` is the polynomial matrix ``denominator * M`` for the rational
    matrix M of interest; the return packages M = (numerator/denominator)
    u u^T.  u is normalized so its first nonzero entry is +1.
    Raises NotRankOne when the shape does not hold (including W = 0).
    """
    n = W.dim
    i0 = next((i for i in range(n) if any(_nz(e) for e in W.rows[i])), None)
    if i0 is None:
        raise NotRankOne("zero matrix")
    j0 = next(j for j in range(n) if _nz(W[i0, j]))
    scale = W[i0, j0]
    u = []
    for i in range(n):
        e = W[i, j0]
        if not _nz(e):
            u.append(0)
        elif e == scale:
            u.append(1)
        elif e == -scale:
            u.append(-1)
        else:
            raise NotRankOne(f"row {i} is not a sign multiple of row {i0}")
    # u[i0] = +1 and rows above i0 are zero, so u is already normalized
    numerator = scale if u[j0] > 0 else -scale
    for i in range(n):
        for j in range(n):
            s = u[i] * u[j]
            have = W[i, j]
            if s == 0:
                if _nz(have):
                    raise NotRankOne(f"entry ({i},{j}) should be zero")
            elif have != (numerator if s > 0 else -numerator):
                raise NotRankOne(f"entry ({i},{j}) breaks the rank-1 shape")
    return numerator, denominator, tuple(u)

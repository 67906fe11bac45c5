"""Finite-field oracle: enumerate flag-variety points and test semistability.

Two independent routes decide semistability of a type-A flag point:

* the subspace test walks every base-field-rational subspace and compares
  weighted-average jump slopes;
* the strata test walks rational translates of the vertex parabolics,
  computes the Bruhat position of the point by rank matrices, and evaluates
  the cell slope -(omega_i, w nu).

Field arithmetic uses Zech logarithm tables (exp/log plus log(1 + g^k)), so
addition and multiplication are single table lookups; fields up to 2^16
elements are supported. Elements are integers 0..q^m-1 whose base-p digits
are the coefficients of the residue polynomial. For very small fields dense
addition/multiplication tables are layered on top of the Zech data.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Sequence

from .errors import (
    BudgetExceeded,
    MalformedNu,
    SingularTransform,
    ValidationError,
    ZeroDimensional,
)
from .rootdata import build_root_system, inner_product, vector
from .weyl import WeylElement, permutation_element

Row = tuple[int, ...]
Matrix = tuple[Row, ...]

DEFAULT_MAX_ORDER = 1 << 16
_DENSE_LIMIT = 256


def _digits(value: int, p: int, n: int) -> list[int]:
    out = []
    for _ in range(n):
        out.append(value % p)
        value //= p
    return out


def _undigits(digits: Sequence[int], p: int) -> int:
    out = 0
    for d in reversed(digits):
        out = out * p + d
    return out


def _poly_mul_mod(a, b, f, p):
    prod = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] = (prod[i + j] + x * y) % p
    n = len(f) - 1
    for k in range(len(prod) - 1, n - 1, -1):
        c = prod[k]
        if c:
            prod[k] = 0
            for j in range(n):
                prod[k - n + j] = (prod[k - n + j] - c * f[j]) % p
    return prod[:n] + [0] * max(0, n - len(prod))


def _poly_pow_mod(base, exp, f, p):
    n = len(f) - 1
    result = [1] + [0] * (n - 1)
    cur = list(base[:n]) + [0] * max(0, n - len(base))
    while exp:
        if exp & 1:
            result = _poly_mul_mod(result, cur, f, p)
        cur = _poly_mul_mod(cur, cur, f, p)
        exp >>= 1
    return result


def _poly_gcd(a, b, p):
    a, b = list(a), list(b)
    while any(b):
        while b and b[-1] == 0:
            b.pop()
        if not b:
            break
        inv = pow(b[-1], p - 2, p)
        while len(a) >= len(b) and any(a):
            while a and a[-1] == 0:
                a.pop()
            if len(a) < len(b):
                break
            c = a[-1] * inv % p
            shift = len(a) - len(b)
            for i, x in enumerate(b):
                a[shift + i] = (a[shift + i] - c * x) % p
        a, b = b, a
    return a


def _is_irreducible(f, p, n) -> bool:
    if n == 1:
        return True
    x = [0, 1]
    xx = [0, 1] + [0] * (n - 2)  # the residue of x, padded to length n
    if _poly_pow_mod(x, p ** n, f, p) != xx:
        return False
    for r in _prime_divisors(n):
        xr = _poly_pow_mod(x, p ** (n // r), f, p)
        diff = [(u - v) % p for u, v in itertools.zip_longest(xr, xx, fillvalue=0)]
        if _poly_degree(_poly_gcd(list(f), diff, p)) > 0:
            return False
    return True


def _poly_degree(a) -> int:
    for k in range(len(a) - 1, -1, -1):
        if a[k]:
            return k
    return -1


def _prime_divisors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


class FiniteField:
    """F_{q^m} with q = p^e, with Zech-log arithmetic and subfield access.

    Elements are integers 0..order-1 (base-p digit encoding of residue
    polynomials); 0 and 1 are the field zero and one.
    """

    def __init__(self, p: int, e: int = 1, m: int = 1,
                 max_order: int = DEFAULT_MAX_ORDER):
        if not _is_prime(p):
            raise ValidationError(f"{p} is not prime")
        if e < 1 or m < 1:
            raise ValidationError("field degrees must be positive")
        self.p, self.e, self.m = p, e, m
        self.q = p ** e
        n = e * m
        self.degree = n
        self.order = p ** n
        if self.order > max_order:
            raise BudgetExceeded(
                f"field order {self.order} exceeds bound {max_order}")
        self._build_tables()
        self._subfields: dict[int, tuple[int, ...]] = {}

    def _build_tables(self):
        p, n, Q = self.p, self.degree, self.order
        # irreducible monic modulus of degree n (deterministic scan)
        modulus = None
        for c in range(Q):
            cand = _digits(c, p, n) + [1]
            if _is_irreducible(cand, p, n):
                modulus = cand
                break
        assert modulus is not None
        self.modulus = tuple(modulus)

        # primitive element by scan; build exp/log along the way
        if Q == 2:
            gen, exp = 1, [1]
            self.generator, self.exp = gen, exp
            self.log = [0, 0]
            self.zech = [None]
            self._neg_one = 1
            self._add_table = [[0, 1], [1, 0]]
            self._mul_table = [[0, 0], [0, 1]]
            return
        start = 2 if n == 1 else p
        for gen in range(start, Q):
            gvec = _digits(gen, p, n)
            exp = [1]
            cur = [1] + [0] * (n - 1)
            ok = True
            for _ in range(Q - 2):
                cur = _poly_mul_mod(cur, gvec, modulus, p)
                val = _undigits(cur, p)
                if val == 1:
                    ok = False
                    break
                exp.append(val)
            if ok and len(exp) == Q - 1:
                break
        else:
            raise AssertionError("no primitive element found")
        self.generator = gen
        self.exp = exp
        log = [0] * Q
        for k, v in enumerate(exp):
            log[v] = k
        self.log = log

        # zech[k] = log(1 + g^k), or None when 1 + g^k = 0
        zech: list[int | None] = []
        for k in range(Q - 1):
            v = exp[k]
            low = v % p
            plus_one = v - low + (low + 1) % p
            zech.append(None if plus_one == 0 else log[plus_one])
        self.zech = zech
        self._neg_one = 1 if p == 2 else exp[(Q - 1) // 2]

        self._add_table = None
        self._mul_table = None
        if Q <= _DENSE_LIMIT:
            self._add_table = [[self._add_zech(a, b) for b in range(Q)] for a in range(Q)]
            self._mul_table = [[self._mul_zech(a, b) for b in range(Q)] for a in range(Q)]

    def _add_zech(self, a: int, b: int) -> int:
        if a == 0:
            return b
        if b == 0:
            return a
        Q1 = self.order - 1
        la, lb = self.log[a], self.log[b]
        z = self.zech[(lb - la) % Q1]
        if z is None:
            return 0
        return self.exp[(la + z) % Q1]

    def _mul_zech(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self.exp[(self.log[a] + self.log[b]) % (self.order - 1)]

    def add(self, a: int, b: int) -> int:
        if self._add_table is not None:
            return self._add_table[a][b]
        return self._add_zech(a, b)

    def mul(self, a: int, b: int) -> int:
        if self._mul_table is not None:
            return self._mul_table[a][b]
        return self._mul_zech(a, b)

    def neg(self, a: int) -> int:
        return self.mul(a, self._neg_one) if self.p != 2 else a

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return self.exp[(-self.log[a]) % (self.order - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def frobenius(self, a: int) -> int:
        """The base-field Frobenius a -> a^q."""
        if a == 0:
            return 0
        return self.exp[(self.log[a] * self.q) % (self.order - 1)]

    def subfield(self, size: int) -> tuple[int, ...]:
        """Elements of the subfield with `size` elements, sorted."""
        if size in self._subfields:
            return self._subfields[size]
        if size < 2 or (self.order - 1) % (size - 1) != 0:
            raise ValidationError(f"no subfield of size {size} in F_{self.order}")
        step = (self.order - 1) // (size - 1)
        elems = tuple(sorted({0, 1} | {self.exp[k * step] for k in range(size - 1)}))
        if len(elems) != size:
            raise ValidationError(f"no subfield of size {size} in F_{self.order}")
        self._subfields[size] = elems
        return elems

    @property
    def base_elements(self) -> tuple[int, ...]:
        """The rational (degree-one) subfield F_q inside F_{q^m}."""
        return self.subfield(self.q)

    def __repr__(self):
        return f"FiniteField(p={self.p}, e={self.e}, m={self.m})"


@lru_cache(maxsize=None)
def finite_field(p: int, e: int = 1, m: int = 1,
                 max_order: int = DEFAULT_MAX_ORDER) -> FiniteField:
    return FiniteField(p, e, m, max_order=max_order)


def gaussian_binomial(n: int, k: int, q: int) -> int:
    """Number of k-dimensional subspaces of an n-space over F_q."""
    if k < 0 or k > n:
        return 0
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    assert num % den == 0
    return num // den


# ---------------------------------------------------------------------------
# linear algebra over a FiniteField


def rref(rows: Sequence[Sequence[int]], ff: FiniteField) -> tuple[Matrix, tuple[int, ...]]:
    """Canonical reduced row echelon form and pivot columns (zero rows dropped)."""
    mat = [list(r) for r in rows]
    if not mat:
        return (), ()
    ncols = len(mat[0])
    pivots: list[int] = []
    rank = 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(mat)) if mat[r][col]), None)
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        inv = ff.inv(mat[rank][col])
        mat[rank] = [ff.mul(inv, x) for x in mat[rank]]
        for r in range(len(mat)):
            if r != rank and mat[r][col]:
                c = mat[r][col]
                mat[r] = [ff.sub(x, ff.mul(c, y)) for x, y in zip(mat[r], mat[rank])]
        pivots.append(col)
        rank += 1
        if rank == len(mat):
            break
    return tuple(tuple(r) for r in mat[:rank]), tuple(pivots)


def _reduce_against(row: Sequence[int], basis: Matrix, pivots: Sequence[int],
                    ff: FiniteField) -> list[int]:
    out = list(row)
    for b, pc in zip(basis, pivots):
        c = out[pc]
        if c:
            out = [ff.sub(x, ff.mul(c, y)) for x, y in zip(out, b)]
    return out


def intersection_dim(u_rows: Matrix, w_rref: Matrix, w_pivots: Sequence[int],
                     ff: FiniteField) -> int:
    """dim(U cap W) with W given in reduced echelon form."""
    residues = []
    res_pivots = []
    dependent = 0
    for row in u_rows:
        r = _reduce_against(row, w_rref, w_pivots, ff)
        r = _reduce_against(r, tuple(residues), tuple(res_pivots), ff)
        pc = next((i for i, x in enumerate(r) if x), None)
        if pc is None:
            dependent += 1
        else:
            inv = ff.inv(r[pc])
            residues.append([ff.mul(inv, x) for x in r])
            res_pivots.append(pc)
    return dependent


def enumerate_rref(n: int, k: int, elements: Sequence[int],
                   ff: FiniteField) -> Iterator[Matrix]:
    """All canonical reduced echelon k x n matrices with entries in `elements`.

    `elements` must be a subfield (or the whole field); pivot columns run in
    lexicographic order, free entries in the order of `elements`.
    """
    nonzero_one = 1
    free_values = tuple(elements)
    for pivots in itertools.combinations(range(n), k):
        free_positions = []
        for i in range(k):
            for j in range(pivots[i] + 1, n):
                if j not in pivots:
                    free_positions.append((i, j))
        for values in itertools.product(free_values, repeat=len(free_positions)):
            mat = [[0] * n for _ in range(k)]
            for i in range(k):
                mat[i][pivots[i]] = nonzero_one
            for (i, j), v in zip(free_positions, values):
                mat[i][j] = v
            yield tuple(tuple(r) for r in mat)


@lru_cache(maxsize=None)
def _rational_subspaces(ff: FiniteField, n: int, k: int) -> tuple[Matrix, ...]:
    return tuple(enumerate_rref(n, k, ff.base_elements, ff))


# ---------------------------------------------------------------------------
# flags


@dataclass(frozen=True)
class FlagPoint:
    """A point of a type-A partial flag variety over the working field.

    `dims` are the proper step dimensions (the ambient space itself is
    implicit); `bases[i]` is the canonical reduced echelon basis of the
    i-th step. `jumps` optionally carries the full decreasing jump tuple
    (one more entry than dims, for the ambient step).
    """

    dims: tuple[int, ...]
    bases: tuple[Matrix, ...]
    jumps: tuple[Fraction, ...] | None = None


def run_lengths(nu) -> tuple[tuple[Fraction, ...], tuple[int, ...]]:
    """Decreasing jump values and multiplicities of a sorted type-A cocharacter."""
    x = vector(nu)
    if any(a < b for a, b in zip(x, x[1:])):
        raise MalformedNu(f"cocharacter is not sorted nonincreasing: {x}")
    jumps: list[Fraction] = []
    mults: list[int] = []
    for a in x:
        if jumps and a == jumps[-1]:
            mults[-1] += 1
        else:
            jumps.append(a)
            mults.append(1)
    return tuple(jumps), tuple(mults)


def flag_dims(nu) -> tuple[int, ...]:
    """Proper step dimensions of the flag variety attached to nu."""
    _, mults = run_lengths(nu)
    dims = []
    total = 0
    for m in mults[:-1]:
        total += m
        dims.append(total)
    return tuple(dims)


def flag_count(n: int, dims: Sequence[int], order: int) -> int:
    count = 1
    prev = 0
    for d in list(dims) + [n]:
        count *= gaussian_binomial(n - prev, d - prev, order)
        prev = d
    return count


def enumerate_flags(ff: FiniteField, ell: int, dims: Sequence[int],
                    max_points: int | None = None) -> Iterator[FlagPoint]:
    """All working-field points of the partial flag variety, each exactly once.

    Deterministic order: steps are extended recursively, quotient subspaces
    enumerated in canonical echelon order.
    """
    n = ell + 1
    dims = tuple(dims)
    if any(d1 >= d2 for d1, d2 in zip(dims, dims[1:])) or \
            any(not 1 <= d <= ell for d in dims):
        raise ValidationError(f"illegal step dimensions {dims} for ell={ell}")
    total = flag_count(n, dims, ff.order)
    if max_points is not None and total > max_points:
        raise BudgetExceeded(f"{total} flag points exceed budget {max_points}")
    all_elems = tuple(range(ff.order))

    def extend(step: int, rows: Matrix, pivots: tuple[int, ...]) -> Iterator[tuple[Matrix, ...]]:
        if step == len(dims):
            yield ()
            return
        k = dims[step] - len(rows)
        free_cols = [j for j in range(n) if j not in pivots]
        for quo in enumerate_rref(len(free_cols), k, all_elems, ff):
            lifted = []
            for qrow in quo:
                row = [0] * n
                for val, col in zip(qrow, free_cols):
                    row[col] = val
                lifted.append(row)
            new_rows, new_pivots = rref(list(rows) + lifted, ff)
            assert len(new_rows) == dims[step]
            for rest in extend(step + 1, new_rows, new_pivots):
                yield (new_rows,) + rest

    for chain in extend(0, (), ()):
        yield FlagPoint(dims=dims, bases=chain)


def slope(u_dim: int, induced_jump_dims: Sequence[int], nu) -> Fraction:
    """Weighted-average jump of the induced filtration on a subspace.

    `induced_jump_dims[b]` is dim(U cap F^{y_b}), cumulative over all jump
    steps including the ambient one (so the last entry equals u_dim).
    """
    if u_dim < 1:
        raise ZeroDimensional("slope of a zero-dimensional subspace")
    jumps, _ = run_lengths(nu)
    if len(induced_jump_dims) != len(jumps):
        raise ValidationError(
            f"{len(induced_jump_dims)} induced dims for {len(jumps)} jumps")
    total = Fraction(0)
    prev = 0
    for y, d in zip(jumps, induced_jump_dims):
        total += y * (d - prev)
        prev = d
    return total / u_dim


def _check_point(x: FlagPoint, nu) -> None:
    if x.dims != flag_dims(nu):
        raise ValidationError(
            f"flag dims {x.dims} do not match cocharacter dims {flag_dims(nu)}")


def is_semistable_subspace_test(x: FlagPoint, nu, ff: FiniteField,
                                max_subspaces: int | None = None) -> bool:
    """Subspace route: every rational subspace has slope at most the ambient slope."""
    nu = vector(nu)
    _check_point(x, nu)
    n = len(nu)
    ambient = Fraction(sum(nu), n)
    jumps, _ = run_lengths(nu)
    steps = [rref(b, ff) for b in x.bases]
    if max_subspaces is not None:
        count = sum(gaussian_binomial(n, k, ff.q) for k in range(1, n))
        if count > max_subspaces:
            raise BudgetExceeded(f"{count} rational subspaces exceed budget")
    for k in range(1, n):
        bound = ambient * k
        for u_rows in _rational_subspaces(ff, n, k):
            prev = 0
            total = Fraction(0)
            for y, (rows, pivots) in zip(jumps, steps):
                d = intersection_dim(u_rows, rows, pivots, ff)
                total += y * (d - prev)
                prev = d
            total += jumps[-1] * (k - prev)
            if total > bound:
                return False
    return True


@lru_cache(maxsize=65536)
def _check_invertible(g: Matrix, ff: FiniteField) -> tuple[Row, ...]:
    n = len(g)
    cols = tuple(tuple(g[r][c] for r in range(n)) for c in range(n))
    full_rank, _ = rref(cols, ff)
    if len(full_rank) != n:
        raise SingularTransform("basis change matrix is singular")
    return cols


def relative_position(x: FlagPoint, g: Sequence[Sequence[int]],
                      ff: FiniteField) -> WeylElement:
    """Bruhat position w with x in g.(BwP/P), as a minimal coset representative.

    Computed from the rank matrix dim(g E_a cap F^{y_b}) against the
    reference full flag of g's leading column spans.
    """
    bases = x.bases
    n = len(g)
    cols = _check_invertible(tuple(tuple(row) for row in g), ff)

    jump_sets = []
    for step_rows in bases:
        basis_rows = [list(r) for r in step_rows]
        pivots = [next(i for i, v in enumerate(r) if v) for r in basis_rows]
        jumps = set()
        for a, col in enumerate(cols, start=1):
            r = _reduce_against(col, tuple(map(tuple, basis_rows)), pivots, ff)
            pc = next((i for i, v in enumerate(r) if v), None)
            if pc is None:
                jumps.add(a)
            else:
                inv = ff.inv(r[pc])
                basis_rows.append([ff.mul(inv, v) for v in r])
                pivots.append(pc)
        jump_sets.append(jumps)
    jump_sets.append(set(range(1, n + 1)))

    one_line = [0] * n
    prev: set[int] = set()
    prev_dim = 0
    for d, js in zip(list(x.dims) + [n], jump_sets):
        block = sorted(js - prev)
        for offset, a in enumerate(block):
            one_line[prev_dim + offset] = a
        prev, prev_dim = js, d
    rs = build_root_system("A", n - 1)
    return permutation_element(rs, one_line)


def _complete_to_basis(t_rows: Matrix, ff: FiniteField, n: int) -> Matrix:
    """Invertible matrix over the working field whose first columns span t_rows."""
    cols = [list(r) for r in t_rows]
    basis, pivots = rref(cols, ff)
    basis = [list(r) for r in basis]
    pivots = list(pivots)
    for j in range(n):
        if len(cols) == n:
            break
        e = [0] * n
        e[j] = 1
        r = _reduce_against(e, tuple(map(tuple, basis)), pivots, ff)
        pc = next((i for i, v in enumerate(r) if v), None)
        if pc is not None:
            cols.append(e)
            inv = ff.inv(r[pc])
            basis.append([ff.mul(inv, v) for v in r])
            pivots.append(pc)
    assert len(cols) == n
    return tuple(tuple(cols[c][r] for c in range(n)) for r in range(n))


@lru_cache(maxsize=None)
def _vertex_translates(ff: FiniteField, n: int) -> tuple[tuple[Matrix, ...], ...]:
    """For each vertex i, one rational basis change per translate class g P_i."""
    out = []
    for i in range(1, n):
        out.append(tuple(_complete_to_basis(t, ff, n)
                         for t in _rational_subspaces(ff, n, i)))
    return tuple(out)


def is_semistable_strata_test(x: FlagPoint, nu, ff: FiniteField,
                              g_sample: int | None = None,
                              rng: random.Random | None = None,
                              max_translates: int | None = None) -> bool:
    """Strata route: no rational translate of a vertex stratum contains the point.

    With g_sample=None every translate class is checked (exhaustive, exact);
    with g_sample=N only N random rational basis changes are tried, which can
    only over-report semistability.
    """
    nu = vector(nu)
    _check_point(x, nu)
    n = len(nu)
    rs = build_root_system("A", n - 1)
    omegas = rs.fundamental_coweights
    predicate: dict[tuple, list[bool]] = {}

    def destabilizes(g: Matrix, vertices: Sequence[int]) -> bool:
        w = relative_position(x, g, ff)
        flags = predicate.get(w.root_perm)
        if flags is None:
            wnu = w.apply(nu)
            flags = [inner_product(om, wnu) > 0 for om in omegas]
            predicate[w.root_perm] = flags
        return any(flags[i - 1] for i in vertices)

    if g_sample is None:
        translate_families = _vertex_translates(ff, n)
        if max_translates is not None:
            count = sum(len(f) for f in translate_families)
            if count > max_translates:
                raise BudgetExceeded(f"{count} translates exceed budget")
        for i, family in enumerate(translate_families, start=1):
            for g in family:
                if destabilizes(g, (i,)):
                    return False
        return True

    rng = rng or random.Random(0)
    base = ff.base_elements
    all_vertices = tuple(range(1, n))
    for _ in range(g_sample):
        while True:
            g = tuple(tuple(rng.choice(base) for _ in range(n)) for _ in range(n))
            rows, _ = rref(g, ff)
            if len(rows) == n:
                break
        if destabilizes(g, all_vertices):
            return False
    return True


def count_semistable(ff: FiniteField, ell: int, nu,
                     max_points: int | None = None,
                     max_subspaces: int | None = None) -> int:
    """Number of semistable working-field points, by the subspace test."""
    nu = vector(nu)
    dims = flag_dims(nu)
    count = 0
    for x in enumerate_flags(ff, ell, dims, max_points=max_points):
        if is_semistable_subspace_test(x, nu, ff, max_subspaces=max_subspaces):
            count += 1
    return count


# ---------------------------------------------------------------------------
# restriction-of-scalars check for t=2, rank 1 (pairs of projective lines)


def projective_line_points(ff: FiniteField) -> tuple[Row, ...]:
    """P^1 over the working field, points as normalized (1, x) and (0, 1)."""
    return tuple((1, x) for x in range(ff.order)) + ((0, 1),)


def _frobenius_line(L: Row, ff: FiniteField) -> Row:
    return (L[0], ff.frobenius(L[1])) if L[0] == 1 else L


def _res_pair_weights(nu1, nu2) -> tuple[Fraction, Fraction]:
    a = vector(nu1)
    b = vector(nu2)
    for x in (a, b):
        if len(x) != 2 or sum(x) != 0 or x[0] < 0:
            raise MalformedNu(f"factor {x} is not a dominant sum-zero pair")
    return a[0], b[0]


def is_semistable_res_pair(ff: FiniteField, L1: Row, L2: Row, nu1, nu2) -> bool:
    """Semistability of a point of P^1 x P^1 for the degree-2 scalar restriction.

    The working field must contain the quadratic extension k' of the base
    field; rational translates are indexed by k'-rational lines T, matching
    the first factor directly and the second through the base Frobenius.
    """
    if ff.m % 2 != 0:
        raise ValidationError("working field must contain the quadratic extension")
    a, b = _res_pair_weights(nu1, nu2)
    kprime = set(ff.subfield(ff.q ** 2))
    for t in projective_line_points(ff):
        if not (t[1] in kprime if t[0] == 1 else True):
            continue
        value = (a if L1 == t else -a) + (b if L2 == _frobenius_line(t, ff) else -b)
        if value > 0:
            return False
    return True


def count_semistable_res_pair(ff: FiniteField, nu1, nu2) -> tuple[int, int]:
    """(semistable, total) point counts for the degree-2 restriction case."""
    a, b = _res_pair_weights(nu1, nu2)
    points = projective_line_points(ff)
    if a == 0 and b == 0:
        return 1, 1
    if b == 0:
        pairs = [(L, None) for L in points]
    elif a == 0:
        pairs = [(None, L) for L in points]
    else:
        pairs = [(L1, L2) for L1 in points for L2 in points]
    fixed = (1, 0)
    count = 0
    for L1, L2 in pairs:
        ok = is_semistable_res_pair(ff, L1 if L1 is not None else fixed,
                                    L2 if L2 is not None else fixed,
                                    nu1 if L1 is not None else (0, 0),
                                    nu2 if L2 is not None else (0, 0))
        if ok:
            count += 1
    return count, len(pairs)

"""Exact rational root-system realizations in Bourbaki coordinates.

Every vector is a tuple of `fractions.Fraction`; pairings, weights and chamber
tests are all exact. Floating point is never used anywhere in this package's
mathematical kernel.

Conventions: type A lives in the sum-zero hyperplane of Q^(l+1) with simple
roots e_i - e_{i+1}; the inner product is the Euclidean dot product of the
realization. Type G2 is realized in the sum-zero hyperplane of Q^3 with
alpha_1 = e_1 - e_2 and alpha_2 = -2e_1 + e_2 + e_3, which gives the Gram
values (w_1,w_1)=2, (w_1,w_2)=3, (w_2,w_2)=6.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import DimensionMismatch, IllegalType, MalformedNu

Vector = tuple[Fraction, ...]

SIMPLE_KINDS = ("A", "B", "C", "D", "E6", "E7", "E8", "F4", "G2")

FORM_SPLIT = "split"
FORM_UNITARY = "unitary"

_POSITIVE_COUNTS = {
    "A": lambda r: r * (r + 1) // 2,
    "B": lambda r: r * r,
    "C": lambda r: r * r,
    "D": lambda r: r * (r - 1),
    "E6": lambda r: 36,
    "E7": lambda r: 63,
    "E8": lambda r: 120,
    "F4": lambda r: 24,
    "G2": lambda r: 6,
}


def vector(entries: Iterable) -> Vector:
    """Coerce a sequence of ints/strings/Fractions to an exact vector."""
    return tuple(Fraction(x) for x in entries)


def inner_product(u: Vector, v: Vector) -> Fraction:
    """Euclidean pairing; the Weyl-invariant form of every realization here."""
    if len(u) != len(v):
        raise DimensionMismatch(f"vectors of length {len(u)} and {len(v)}")
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def coroot(alpha: Vector) -> Vector:
    """alpha^vee = 2*alpha/(alpha,alpha)."""
    norm = inner_product(alpha, alpha)
    return tuple(2 * a / norm for a in alpha)


def _add(u: Vector, v: Vector) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def _scale(v: Vector, c: Fraction) -> Vector:
    return tuple(c * a for a in v)


def _reflect(v: Vector, alpha: Vector, alphav: Vector) -> Vector:
    pairing = inner_product(v, alphav)
    return tuple(a - pairing * b for a, b in zip(v, alpha))


def invert_matrix(rows: Sequence[Sequence[Fraction]]) -> tuple[tuple[Fraction, ...], ...]:
    """Exact inverse of a square rational matrix (Gauss-Jordan)."""
    n = len(rows)
    aug = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(rows)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            raise DimensionMismatch("singular matrix")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = Fraction(1) / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


def solve_in_span(columns: Sequence[Vector], target: Vector) -> tuple[Fraction, ...]:
    """Coefficients c with sum c_j * columns[j] == target; target must lie in the span."""
    n = len(target)
    r = len(columns)
    aug = [[columns[j][i] for j in range(r)] + [target[i]] for i in range(n)]
    pivots: list[int] = []
    row = 0
    for col in range(r):
        piv = next((k for k in range(row, n) if aug[k][col] != 0), None)
        if piv is None:
            continue
        aug[row], aug[piv] = aug[piv], aug[row]
        inv = Fraction(1) / aug[row][col]
        aug[row] = [x * inv for x in aug[row]]
        for k in range(n):
            if k != row and aug[k][col] != 0:
                f = aug[k][col]
                aug[k] = [x - f * y for x, y in zip(aug[k], aug[row])]
        pivots.append(col)
        row += 1
    for k in range(row, n):
        if aug[k][r] != 0:
            raise DimensionMismatch("target vector not in span")
    coeffs = [Fraction(0)] * r
    for i, col in enumerate(pivots):
        coeffs[col] = aug[i][r]
    return tuple(coeffs)


@dataclass(frozen=True, eq=False)
class Realization:
    """Geometric data a reflection group acts on: simple roots plus weights.

    Instances are interned by the factory functions, so identity comparison
    and the default object hash are the intended semantics.
    """

    ambient_dim: int
    rank: int
    simple_roots: tuple[Vector, ...]
    fundamental_coweights: tuple[Vector, ...]
    positive_roots: tuple[Vector, ...]
    positive_coefficients: tuple[tuple[Fraction, ...], ...]


@dataclass(frozen=True, eq=False)
class RootSystemData(Realization):
    """A simple root system of kind A..G2 realized over exact rationals."""

    kind: str = ""
    cartan_pairings: tuple[tuple[Fraction, ...], ...] = ()
    opposition: tuple[int, ...] = ()


def _simple_root_table(kind: str, rank: int) -> tuple[int, tuple[Vector, ...]]:
    F = Fraction
    if kind == "A":
        n = rank + 1
        roots = []
        for i in range(rank):
            v = [F(0)] * n
            v[i], v[i + 1] = F(1), F(-1)
            roots.append(tuple(v))
        return n, tuple(roots)
    if kind in ("B", "C", "D"):
        n = rank
        roots = []
        for i in range(rank - 1):
            v = [F(0)] * n
            v[i], v[i + 1] = F(1), F(-1)
            roots.append(tuple(v))
        last = [F(0)] * n
        if kind == "B":
            last[-1] = F(1)
        elif kind == "C":
            last[-1] = F(2)
        else:
            last[-2], last[-1] = F(1), F(1)
        roots.append(tuple(last))
        return n, tuple(roots)
    if kind in ("E6", "E7", "E8"):
        n = 8
        half = F(1, 2)
        a1 = (half, -half, -half, -half, -half, -half, -half, half)
        a2 = (F(1), F(1)) + (F(0),) * 6
        roots = [a1, a2]
        for i in range(3, rank + 1):
            v = [F(0)] * n
            v[i - 3], v[i - 2] = F(-1), F(1)
            roots.append(tuple(v))
        return n, tuple(roots)
    if kind == "F4":
        half = F(1, 2)
        return 4, (
            (F(0), F(1), F(-1), F(0)),
            (F(0), F(0), F(1), F(-1)),
            (F(0), F(0), F(0), F(1)),
            (half, -half, -half, -half),
        )
    if kind == "G2":
        return 3, ((F(1), F(-1), F(0)), (F(-2), F(1), F(1)))
    raise IllegalType(f"unknown kind {kind!r}")


def _close_roots(simple: tuple[Vector, ...]):
    """All roots by reflection closure, with simple-root coefficient vectors."""
    r = len(simple)
    coroots = [coroot(a) for a in simple]
    known: dict[Vector, tuple[Fraction, ...]] = {
        simple[i]: tuple(Fraction(int(i == j)) for j in range(r)) for i in range(r)
    }
    frontier = list(simple)
    while frontier:
        fresh = []
        for root in frontier:
            c = known[root]
            for i in range(r):
                pairing = inner_product(root, coroots[i])
                if pairing == 0:
                    continue
                img = tuple(a - pairing * b for a, b in zip(root, simple[i]))
                if img not in known:
                    cc = list(c)
                    cc[i] -= pairing
                    known[img] = tuple(cc)
                    fresh.append(img)
        frontier = fresh
    positives = sorted(v for v, c in known.items() if all(x >= 0 for x in c))
    return tuple(positives), tuple(known[v] for v in positives)


def _w0_word(simple: tuple[Vector, ...], coweights: tuple[Vector, ...]) -> tuple[int, ...]:
    """A reduced word (1-based letters) for the longest element.

    Walks -rho back to the dominant chamber; the recorded letters, applied
    right to left, send rho to -rho.
    """
    coroots = [coroot(a) for a in simple]
    rho = coweights[0]
    for w in coweights[1:]:
        rho = _add(rho, w)
    v = tuple(-x for x in rho)
    word: list[int] = []
    while True:
        for i, (alpha, alphav) in enumerate(zip(simple, coroots)):
            if inner_product(v, alphav) < 0:
                v = _reflect(v, alpha, alphav)
                word.append(i + 1)
                break
        else:
            break
    assert v == rho
    return tuple(word)


def apply_word(word: Sequence[int], v: Vector, simple: tuple[Vector, ...]) -> Vector:
    """Apply s_{word[0]} o s_{word[1]} o ... to v (letters are 1-based)."""
    coroots = [coroot(a) for a in simple]
    for i in reversed(word):
        v = _reflect(v, simple[i - 1], coroots[i - 1])
    return v


@lru_cache(maxsize=None)
def _build_root_system(kind: str, rank: int) -> RootSystemData:
    ambient, simple = _simple_root_table(kind, rank)
    positives, coeffs = _close_roots(simple)
    assert len(positives) == _POSITIVE_COUNTS[kind](rank)

    pairing_matrix = [[inner_product(a, coroot(b)) for b in simple] for a in simple]
    inv = invert_matrix(pairing_matrix)
    coweights = []
    for i in range(rank):
        w = tuple(Fraction(0) for _ in range(ambient))
        for j in range(rank):
            w = _add(w, _scale(simple[j], inv[i][j]))
        coweights.append(w)
    coweights = tuple(coweights)
    for i in range(rank):
        for j in range(rank):
            assert inner_product(coweights[i], coroot(simple[j])) == int(i == j)

    word = _w0_word(simple, coweights)
    opposition = []
    for i in range(rank):
        img = tuple(-x for x in apply_word(word, simple[i], simple))
        opposition.append(simple.index(img) + 1)

    gram = tuple(tuple(inner_product(a, b) for b in simple) for a in simple)
    return RootSystemData(
        ambient_dim=ambient,
        rank=rank,
        simple_roots=simple,
        fundamental_coweights=coweights,
        positive_roots=positives,
        positive_coefficients=coeffs,
        kind=kind,
        cartan_pairings=gram,
        opposition=tuple(opposition),
    )


def _normalize_kind(kind: str, rank: int) -> str:
    kind = kind.strip().upper()
    if kind == "E":
        kind = f"E{rank}"
    elif kind == "F":
        kind = "F4"
    elif kind == "G":
        kind = "G2"
    return kind


def build_root_system(kind: str, rank: int) -> RootSystemData:
    """Interned exact realization of the (kind, rank) root system.

    Legal pairs: A (rank >= 1), B and C (rank >= 2), D (rank >= 3, with a
    warning at 3 since D3 = A3), E6/E7/E8, F4, G2.
    """
    kind = _normalize_kind(kind, rank)
    if kind == "A":
        ok = rank >= 1
    elif kind in ("B", "C"):
        ok = rank >= 2
    elif kind == "D":
        ok = rank >= 3
        if rank == 3:
            warnings.warn("D3 is an alias of A3; building the D-style realization",
                          stacklevel=2)
    elif kind in ("E6", "E7", "E8"):
        ok = rank == int(kind[1])
    elif kind == "F4":
        ok = rank == 4
    elif kind == "G2":
        ok = rank == 2
    else:
        raise IllegalType(f"unknown kind {kind!r}")
    if not ok:
        raise IllegalType(f"illegal pair kind={kind} rank={rank}")
    return _build_root_system(kind, rank)


@dataclass(frozen=True, eq=False)
class GroupDatum:
    """A k-simple adjoint group: base system, form, restriction-of-scalars degree.

    `absolute` is the realization the full Weyl machinery runs on: the base
    system itself when res_degree == 1, otherwise res_degree disjoint
    block-embedded copies. `galois_orbits[i-1]` lists the 1-based absolute
    simple-root indices restricting to relative vertex i.
    """

    base: RootSystemData
    form: str
    res_degree: int
    relative_rank: int
    galois_orbits: tuple[tuple[int, ...], ...]
    absolute: Realization


@dataclass(frozen=True)
class RelativeCoweight:
    """One relative cofundamental weight: vertex index plus its absolute vector."""

    index: int
    vector: Vector


def _block_embed(v: Vector, copy: int, t: int) -> Vector:
    n = len(v)
    zero = (Fraction(0),) * n
    return sum((v if j == copy else zero for j in range(t)), ())


def _product_realization(base: RootSystemData, t: int) -> Realization:
    n = base.ambient_dim
    r = base.rank
    simple = tuple(_block_embed(a, j, t) for j in range(t) for a in base.simple_roots)
    coweights = tuple(_block_embed(w, j, t) for j in range(t) for w in base.fundamental_coweights)
    positives = []
    coeffs = []
    zero_block = (Fraction(0),) * r
    for j in range(t):
        for root, c in zip(base.positive_roots, base.positive_coefficients):
            positives.append(_block_embed(root, j, t))
            coeffs.append(sum((c if h == j else zero_block for h in range(t)), ()))
    return Realization(
        ambient_dim=t * n,
        rank=t * r,
        simple_roots=simple,
        fundamental_coweights=coweights,
        positive_roots=tuple(positives),
        positive_coefficients=tuple(coeffs),
    )


def _base_orbits(base: RootSystemData, form: str) -> tuple[tuple[int, ...], ...]:
    ell = base.rank
    if form == FORM_SPLIT:
        return tuple((i,) for i in range(1, ell + 1))
    d = (ell + 1) // 2
    orbits = [tuple(sorted({i, ell + 1 - i})) for i in range(1, d)]
    if (ell + 1) % 2 == 0:
        orbits.append((d,))
    else:
        orbits.append((d, d + 1))
    return tuple(orbits)


@lru_cache(maxsize=None)
def _build_group(kind: str, rank: int, form: str, res_degree: int) -> GroupDatum:
    base = build_root_system(kind, rank)
    t = res_degree
    base_orbits = _base_orbits(base, form)
    d = len(base_orbits)
    orbits = tuple(
        tuple(sorted(j * base.rank + b for j in range(t) for b in orbit))
        for orbit in base_orbits
    )
    absolute = base if t == 1 else _product_realization(base, t)
    return GroupDatum(
        base=base,
        form=form,
        res_degree=t,
        relative_rank=d,
        galois_orbits=orbits,
        absolute=absolute,
    )


def build_group(kind: str, rank: int, form: str = FORM_SPLIT,
                res_degree: int = 1) -> GroupDatum:
    """Interned group datum for a k-simple adjoint group.

    `form` is "split" or "unitary" (quasi-split outer form; type A, rank >= 2
    only); `res_degree` is the degree t of the restriction of scalars, i.e.
    the number of absolute diagram copies.
    """
    kind = _normalize_kind(kind, rank)
    form = form.strip().lower()
    if form not in (FORM_SPLIT, FORM_UNITARY):
        raise IllegalType(f"unknown form {form!r}")
    if form == FORM_UNITARY and (kind != "A" or rank < 2):
        raise IllegalType("unitary form requires kind A with rank >= 2")
    if res_degree < 1:
        raise IllegalType("res_degree must be >= 1")
    build_root_system(kind, rank)  # validates the pair (and warns on D3)
    return _build_group(kind, rank, form, res_degree)


def relative_coweights(g: GroupDatum) -> tuple[RelativeCoweight, ...]:
    """Relative cofundamental weights: orbit sums of absolute fundamental coweights."""
    out = []
    for i, orbit in enumerate(g.galois_orbits, start=1):
        w = (Fraction(0),) * g.absolute.ambient_dim
        for b in orbit:
            w = _add(w, g.absolute.fundamental_coweights[b - 1])
        out.append(RelativeCoweight(index=i, vector=w))
    return tuple(out)


def decompose_in_coweights(nu: Sequence, rs: Realization) -> tuple[Fraction, ...]:
    """Coefficients n_i = (nu, alpha_i^vee); nu is dominant iff all are >= 0."""
    v = vector(nu)
    if len(v) != rs.ambient_dim:
        raise DimensionMismatch(
            f"vector of length {len(v)} in ambient dimension {rs.ambient_dim}")
    return tuple(inner_product(v, coroot(a)) for a in rs.simple_roots)


def split_nu(g: GroupDatum, nu) -> tuple[Vector, ...]:
    """Normalize a cocharacter input to a tuple of res_degree base-ambient vectors.

    Accepts a single flat vector when res_degree == 1, a sequence of
    res_degree vectors, or one already-flat block vector.
    """
    t = g.res_degree
    n = g.base.ambient_dim
    seq = list(nu)
    if seq and not isinstance(seq[0], (list, tuple)):
        flat = vector(seq)
        if len(flat) == n and t == 1:
            return (flat,)
        if len(flat) == t * n:
            return tuple(flat[j * n:(j + 1) * n] for j in range(t))
        raise DimensionMismatch(
            f"flat cocharacter of length {len(flat)}; expected {t} blocks of {n}")
    if len(seq) != t:
        raise MalformedNu(f"expected {t} cocharacter factors, got {len(seq)}")
    entries = tuple(vector(x) for x in seq)
    for x in entries:
        if len(x) != n:
            raise DimensionMismatch(
                f"factor of length {len(x)}; base ambient dimension is {n}")
    return entries


def assemble_nu(g: GroupDatum, nu) -> Vector:
    """Flat block vector of the cocharacter tuple in the absolute ambient space."""
    return sum(split_nu(g, nu), ())

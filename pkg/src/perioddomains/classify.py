"""Closed-form classification of pi_1 of the semistable locus.

No group enumeration happens here. The verdict is non-trivial exactly when
the base group is split of type A and some factor j of the cocharacter tuple
satisfies the margin inequality against the other factors:

    sum_{i != j} x_1^[i] < -x_2^[j]          (first jump step has multiplicity 1)
or  sum_{i != j} x_{l+1}^[i] > -x_l^[j]      (last jump step has multiplicity 1)

with x^[j] the sorted entries of factor j. At most one factor can satisfy
either inequality; in that case pi_1 is that of the Drinfeld space
Omega^(l+1) over the degree-t extension, and the unstable locus has
codimension one.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import MalformedNu, NotCodimOne
from .rootdata import (
    FORM_SPLIT,
    GroupDatum,
    Vector,
    decompose_in_coweights,
    split_nu,
)

VERDICT_TRIVIAL = "trivial"
VERDICT_DRINFELD = "drinfeld"

SIDE_FIRST = "first_step"
SIDE_LAST = "last_step"


@dataclass(frozen=True)
class NuTuple:
    """Validated cocharacter tuple: one dominant vector per diagram copy."""

    entries: tuple[Vector, ...]


def nu_tuple(g: GroupDatum, nu) -> NuTuple:
    """Validate a cocharacter input against the group's normal form.

    Type A entries must be weakly decreasing with coordinate sum zero; all
    entries must be dominant for the base system.
    """
    entries = split_nu(g, nu)
    for j, x in enumerate(entries, start=1):
        if g.base.kind == "A":
            if any(a < b for a, b in zip(x, x[1:])):
                raise MalformedNu(f"factor {j} is not sorted nonincreasing: {x}")
            if sum(x) != 0:
                raise MalformedNu(f"factor {j} has nonzero coordinate sum: {x}")
        coeffs = decompose_in_coweights(x, g.base)
        if any(c < 0 for c in coeffs):
            raise MalformedNu(f"factor {j} is not dominant: {x}")
    return NuTuple(entries=entries)


@dataclass(frozen=True)
class Classification:
    """Verdict plus the exact inequality values that produced it."""

    verdict: str
    ell: int | None
    factor_index: int | None
    codim_one: bool
    side: str | None
    details: dict[str, Fraction]
    near_miss_factors: tuple[int, ...]

    def pi1_label(self, res_degree: int = 1) -> str:
        if self.verdict == VERDICT_TRIVIAL:
            return "trivial"
        field = "k'" if res_degree > 1 else "k"
        return f"pi1(Omega^({self.ell + 1})/{field})"


def _fired_sides(entries: tuple[Vector, ...], j: int) -> list[str]:
    """Sides on which factor j (0-based) satisfies both step and margin conditions."""
    x = entries[j]
    sides = []
    sum_first = sum((e[0] for k, e in enumerate(entries) if k != j), Fraction(0))
    sum_last = sum((e[-1] for k, e in enumerate(entries) if k != j), Fraction(0))
    if x[1] < 0 and sum_first < -x[1]:
        sides.append(SIDE_FIRST)
    if x[-2] > 0 and sum_last > -x[-2]:
        sides.append(SIDE_LAST)
    return sides


def classify(g: GroupDatum, nu) -> Classification:
    """Decide pi_1 of the semistable locus for (g, nu)."""
    valid = nu if isinstance(nu, NuTuple) else nu_tuple(g, nu)
    entries = valid.entries
    ell = g.base.rank
    t = g.res_degree

    if g.base.kind != "A" or g.form != FORM_SPLIT:
        return Classification(VERDICT_TRIVIAL, None, None, False, None, {}, ())

    details: dict[str, Fraction] = {}
    fired: list[tuple[int, str]] = []
    near_miss: list[int] = []
    for j in range(t):
        x = entries[j]
        details[f"x2[{j + 1}]"] = x[1]
        details[f"xl[{j + 1}]"] = x[-2]
        details[f"sum_first_others[{j + 1}]"] = sum(
            (e[0] for k, e in enumerate(entries) if k != j), Fraction(0))
        details[f"sum_last_others[{j + 1}]"] = sum(
            (e[-1] for k, e in enumerate(entries) if k != j), Fraction(0))
        sides = _fired_sides(entries, j)
        if sides:
            fired.append((j + 1, sides[0]))
        elif x[1] < 0 or x[-2] > 0:
            near_miss.append(j + 1)

    if not fired:
        return Classification(VERDICT_TRIVIAL, ell, None, False, None, details,
                              tuple(near_miss))
    assert len({j for j, _ in fired}) == 1, "margin inequality fired for two factors"
    j, side = fired[0]
    return Classification(VERDICT_DRINFELD, ell, j, True, side, details,
                          tuple(near_miss))


@dataclass(frozen=True)
class SSLocusDescription:
    """Which jump step pins the semistable locus and where it projects."""

    side: str
    factor_index: int
    jump_value: Fraction
    graded_dim: int
    subspace_dim: int
    target: str            # "omega" or "omega_dual"
    ell: int
    res_degree: int
    other_factors: tuple[int, ...]
    whole_space: bool      # semistable locus equals the target itself


def _run_lengths(x: Vector) -> tuple[tuple[Fraction, ...], tuple[int, ...]]:
    jumps: list[Fraction] = []
    mults: list[int] = []
    for a in x:
        if jumps and a == jumps[-1]:
            mults[-1] += 1
        else:
            jumps.append(a)
            mults.append(1)
    return tuple(jumps), tuple(mults)


def describe_ss_locus(g: GroupDatum, nu) -> SSLocusDescription:
    """Describe the codimension-one semistable locus; raises NotCodimOne otherwise."""
    cls = classify(g, nu)
    if cls.verdict != VERDICT_DRINFELD:
        raise NotCodimOne("semistable locus has unstable complement of codim >= 2")
    entries = split_nu(g, nu)
    j = cls.factor_index
    jumps, mults = _run_lengths(entries[j - 1])
    ell = g.base.rank
    if cls.side == SIDE_FIRST:
        assert mults[0] == 1
        side_data = dict(jump_value=jumps[0], graded_dim=mults[0],
                         subspace_dim=1, target="omega")
    else:
        assert mults[-1] == 1
        side_data = dict(jump_value=jumps[-1], graded_dim=mults[-1],
                         subspace_dim=ell, target="omega_dual")
    return SSLocusDescription(
        side=cls.side,
        factor_index=j,
        ell=ell,
        res_degree=g.res_degree,
        other_factors=tuple(h for h in range(1, g.res_degree + 1) if h != j),
        whole_space=(len(jumps) == 2 and mults == (1, ell) and cls.side == SIDE_FIRST)
        or (len(jumps) == 2 and mults == (ell, 1) and cls.side == SIDE_LAST),
        **side_data,
    )

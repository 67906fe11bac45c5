"""Fundamental groups of period domains over finite fields.

Exact-rational root-system data, a closed-form classifier of pi_1 of the
semistable locus, and two independent brute-force oracles: Weyl-coset
enumeration of unstable Schubert strata, and finite-field flag-point
semistability enumeration.
"""

from .errors import (
    BudgetExceeded,
    DimensionMismatch,
    IllegalType,
    IndexOutOfRange,
    MalformedNu,
    NotCodimOne,
    NotDominant,
    ParseError,
    PeriodDomainError,
    SingularTransform,
    ValidationError,
    ZeroDimensional,
)
from .rootdata import (
    FORM_SPLIT,
    FORM_UNITARY,
    GroupDatum,
    Realization,
    RelativeCoweight,
    RootSystemData,
    build_group,
    build_root_system,
    decompose_in_coweights,
    inner_product,
    relative_coweights,
    vector,
)

__version__ = "0.1.0"

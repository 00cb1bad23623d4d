"""Exact k-coloured and plane partition counts via Bell polynomials."""

from .arith import (
    DivisorSumTable,
    PentagonalCoefficient,
    binomial,
    build_divisor_table,
    factorial,
    pentagonal_lambda,
    rising_factorial,
)
from .bell import (
    BellArgumentSequence,
    HessenbergSpec,
    PartialBellTable,
    complete_bell,
    dense_det_oracle,
    hessenberg_det,
    partial_bell_explicit,
    partial_bell_table,
)
from .counts import (
    CountResult,
    colored_counts,
    count,
    pk_complete_bell,
    pk_determinant,
    pk_partial_bell,
    pk_recurrence,
    plane_counts,
    pp_complete_bell,
    pp_determinant,
    pp_recurrence,
)
from .errors import DomainError, InconsistencyError, PartCountError, UnsupportedSizeError
from .oracles import oracle_enumerate_colored, oracle_enumerate_plane, oracle_series
from .series import TruncatedSeries

__version__ = "0.1.0"

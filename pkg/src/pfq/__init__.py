"""Generalized Schur P- and Q-functions with exact rational arithmetic."""

from .arith import SparsePoly, TruncSeries, exact_divide
from .bcd import bcd_q, weyl_oracle
from .partitions import StrictPartition, enumerate_strict
from .pfaffian import SkewMatrix, pfaffian
from .pfunc import dual_p, hl_tminus1, nimmo_p, p_function, schur_form_p
from .pieri import fac_pieri_product, morris_rule, pieri_det, pieri_direct
from .sequences import AdmissibleSeq, make_sequence, parse_sequence
from .skew import skew_p

__all__ = [
    "AdmissibleSeq", "SkewMatrix", "SparsePoly", "StrictPartition", "TruncSeries",
    "bcd_q", "dual_p", "enumerate_strict", "exact_divide", "fac_pieri_product",
    "hl_tminus1", "make_sequence", "morris_rule", "nimmo_p", "p_function",
    "parse_sequence", "pfaffian", "pieri_det", "pieri_direct", "schur_form_p",
    "skew_p", "weyl_oracle",
]

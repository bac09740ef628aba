"""Exact composita arithmetic for generating functions and prime-only integrality congruences."""

from .composita import (
    CompositaTable,
    artanh_composita,
    composita_by_compositions,
    composita_by_power,
    poly3_composita,
    stirling2_composita,
)
from .composition import (
    compose,
    compose_coeffs,
    compose_egf_egf,
    compose_ogf_egf,
    integrality_of_composition,
)
from .congruence import (
    CongruenceReport,
    Verdict,
    WitnessCertificate,
    corollary1_sum,
    corollary1_via_g,
    euler_congruence,
    general_prime_congruence,
    scan,
    theorem1_check,
    theorem2_congruence,
    touchard_general,
    touchard_k0,
)
from .series import (
    ExactRational,
    Kind,
    Series,
    builtin,
    egf_coefficient,
    series_add,
    series_mul,
    series_pow,
)

__version__ = "0.1.0"

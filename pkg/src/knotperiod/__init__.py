"""Twisted Alexander polynomials and periodicity obstructions for knots.

The package takes knot diagrams in the common textual notations, builds
Wirtinger presentations, computes classical and twisted Alexander
polynomials over exact coefficient rings, and applies congruence, orbit,
and factorization tests that rule out symmetries of the knot.
"""

__version__ = "0.1.0"

from .corpus import knot_diagram, knot_names, load_corpus, resolve_diagram
from .diagrams import (
    Diagram,
    PDCode,
    braid_closure_diagram,
    h1_double_branched_cover,
    parse_braid,
    parse_dt,
    parse_pd,
    wirtinger_presentation,
)
from .factor import factor_mod_p, factor_over_cyclotomic, factor_over_q
from .laurent import LaurentPoly, exact_divide, laurent_gcd, normalize_up_to_unit
from .obstruct import (
    FreePeriodReport,
    ObstructionVerdict,
    degree_feasibility,
    free_period_report,
    hartley_screen,
    murasugi_modp,
    murasugi_zeta,
    orbit_criterion,
    period_obstruction_pipeline,
    transfer_fixed_bound,
)
from .reps import (
    Representation,
    dihedral_classes,
    enumerate_perm_rep_classes,
    enumerate_perm_reps,
    trivial_representation,
)
from .rings import Fp, QQ, ZZ, cyclotomic_field, cyclotomic_ring
from .twisted import classical_alexander, delta0, twisted_alexander, wada_pair

__all__ = [
    "Diagram",
    "PDCode",
    "FreePeriodReport",
    "LaurentPoly",
    "ObstructionVerdict",
    "Representation",
    "ZZ",
    "QQ",
    "Fp",
    "braid_closure_diagram",
    "classical_alexander",
    "cyclotomic_field",
    "cyclotomic_ring",
    "degree_feasibility",
    "delta0",
    "dihedral_classes",
    "enumerate_perm_rep_classes",
    "enumerate_perm_reps",
    "exact_divide",
    "factor_mod_p",
    "factor_over_cyclotomic",
    "factor_over_q",
    "free_period_report",
    "h1_double_branched_cover",
    "hartley_screen",
    "knot_diagram",
    "knot_names",
    "laurent_gcd",
    "load_corpus",
    "murasugi_modp",
    "murasugi_zeta",
    "normalize_up_to_unit",
    "orbit_criterion",
    "parse_braid",
    "parse_dt",
    "parse_pd",
    "period_obstruction_pipeline",
    "resolve_diagram",
    "transfer_fixed_bound",
    "trivial_representation",
    "twisted_alexander",
    "wada_pair",
    "wirtinger_presentation",
]

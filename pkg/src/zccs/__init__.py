"""Z-complementary code sets from Boolean functions, verified exactly.

The package constructs complete complementary codes and optimal
Z-complementary code sets of length p * 2**m (p prime) from second-order
Boolean functions, and decides every correlation property in exact
cyclotomic-integer arithmetic.
"""

from .algebra import CycInt, cyclotomic_poly, is_prime
from .boolfn import (
    FunctionGraph,
    GeneralizedBooleanFunction,
    PathCertificate,
    PbfSpec,
    RootSequence,
    check_path_after_deletion,
    codeword_function,
    graph_of,
    parse_gbf,
    pbf_sequence,
    sequence_of,
)
from .construct import (
    Code,
    CodeLabel,
    CodeSet,
    CodeSetParams,
    build_ccc,
    build_zccs,
    build_zccs_by_concatenation,
    min_blocks_exponent,
)
from .correlate import CorrelationProfile, accf, code_accf, profile, root_sum
from .verify import (
    VerificationReport,
    ZccsCheck,
    check_ccc,
    check_optimal,
    check_zccs,
    max_zcz,
    verify_code_set,
)
from . import errors

__all__ = [
    "CycInt",
    "cyclotomic_poly",
    "is_prime",
    "FunctionGraph",
    "GeneralizedBooleanFunction",
    "PathCertificate",
    "PbfSpec",
    "RootSequence",
    "check_path_after_deletion",
    "codeword_function",
    "graph_of",
    "parse_gbf",
    "pbf_sequence",
    "sequence_of",
    "Code",
    "CodeLabel",
    "CodeSet",
    "CodeSetParams",
    "build_ccc",
    "build_zccs",
    "build_zccs_by_concatenation",
    "min_blocks_exponent",
    "CorrelationProfile",
    "accf",
    "code_accf",
    "profile",
    "root_sum",
    "VerificationReport",
    "ZccsCheck",
    "check_ccc",
    "check_optimal",
    "check_zccs",
    "max_zcz",
    "verify_code_set",
    "errors",
]

__version__ = "0.1.0"

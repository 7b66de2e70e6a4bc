"""Composition tableaux, an RSK analogue on them, and 0-Hecke modules with filtrations."""

from .comb_core import Composition, compositions, complement, lambda_sort, reverse
from .errors import (
    CertificateError,
    DomainError,
    MalformedFillingError,
    PreconditionError,
    QHeckeError,
    ResourceLimitError,
)
from .filtration import (
    FiltrationReport,
    K_alpha,
    K_characterizations,
    Y_module,
    closure_check,
    filtration_V,
    filtration_X,
    m_equiv,
    seq12,
    surjection_chain,
    tau_prime,
    verify_appendix,
)
from .greene import longest_k_increasing, mies, predict_shape
from .hecke import (
    CombModule,
    ModuleMap,
    characteristic,
    hom_check,
    interval_module,
    iso_check,
    module_V,
    module_X,
    theta_V,
    theta_X,
    verify_relations,
)
from .insertion import TwoLineArray, build_PQ, insert, rsk, rsk_hat
from .permutation import Perm, interval, leq_L, parse_perm
from .qsym import (
    QSym,
    dual_immaculate_F,
    expand_in,
    extended_schur_F,
    quasischur_F,
    schur_F,
    young_quasischur_F,
)
from .tableaux import Filling, canonical, enumerate_tableaux, row_word

__version__ = "0.1.0"

__all__ = [
    "build_PQ",
    "canonical",
    "CertificateError",
    "characteristic",
    "closure_check",
    "CombModule",
    "complement",
    "Composition",
    "compositions",
    "DomainError",
    "dual_immaculate_F",
    "enumerate_tableaux",
    "expand_in",
    "extended_schur_F",
    "Filling",
    "filtration_V",
    "filtration_X",
    "FiltrationReport",
    "hom_check",
    "insert",
    "interval",
    "interval_module",
    "iso_check",
    "K_alpha",
    "K_characterizations",
    "lambda_sort",
    "leq_L",
    "longest_k_increasing",
    "m_equiv",
    "MalformedFillingError",
    "mies",
    "module_V",
    "module_X",
    "ModuleMap",
    "parse_perm",
    "Perm",
    "PreconditionError",
    "predict_shape",
    "QHeckeError",
    "QSym",
    "quasischur_F",
    "ResourceLimitError",
    "reverse",
    "row_word",
    "rsk",
    "rsk_hat",
    "schur_F",
    "seq12",
    "surjection_chain",
    "tau_prime",
    "theta_V",
    "theta_X",
    "TwoLineArray",
    "verify_appendix",
    "verify_relations",
    "Y_module",
    "young_quasischur_F",
    "__version__",
]

"""Exact branching laws, theta-lift parameter maps, and K-type ledgers
for quaternionic real forms of the exceptional groups."""

from .rootdata import (
    HalfInt,
    QuaternionicStructure,
    RootSystem,
    Weight,
    build_root_system,
    dominant_representative,
    half,
    highest_root,
    highest_root_coefficients,
    is_dominant,
    quaternionic_structure,
    weight,
    weyl_orbit,
)
from .charoracle import (
    CharMultiset,
    EmbeddingMap,
    Irrep,
    IsoDecomp,
    OracleCapError,
    adams,
    char_weights,
    convolve,
    dim_cap,
    embedding,
    irrep,
    restrict,
    strip_dominant,
    tensor_decompose,
    weyl_dim,
)
from .branchrules import (
    InterlacingCert,
    Spin2Module,
    branch_sp,
    branch_spin_even,
    branch_spin_odd,
    cg_mult,
    cg_product,
    clebsch_gordan,
    f4_to_spin9,
    f4_to_spin9_table,
    gz_chain,
    restrict_e7_to_su2_spin12,
    u2_to_torus,
)
from .quaternionic import (
    KTypeLedger,
    QuatModule,
    check_lemma_surjectivity,
    inf_char,
    ktype_dimension,
    ktypes,
    minimal_type,
    quat_module,
    restrict_filtration,
    sym_power,
    sym_power_chain,
)
from .thetamaps import (
    ThetaLift,
    infchar_crosscheck,
    seesaw_truncation_check,
    theta_e6_torus,
    theta_e6_u2,
    theta_e7,
    theta_e8_spin8,
    theta_e8_spin9,
    theta_f4,
)
from .aqmodules import (
    AqCase,
    AqData,
    ThetaUnitaryResult,
    abc_to_xy,
    aq_data,
    cone_contains,
    cone_extreme_rays,
    ftau_restriction_segments,
    g2_modules_with_infchar,
    orbit_key,
    theta_unitary,
    xy_to_abc,
)
from .verify import run_suite

__all__ = [
    "HalfInt", "QuaternionicStructure", "RootSystem", "Weight",
    "build_root_system", "dominant_representative", "half", "highest_root",
    "highest_root_coefficients", "is_dominant", "quaternionic_structure",
    "weight", "weyl_orbit",
    "CharMultiset", "EmbeddingMap", "Irrep", "IsoDecomp", "OracleCapError",
    "adams", "char_weights", "convolve", "dim_cap", "embedding", "irrep",
    "restrict", "strip_dominant", "tensor_decompose", "weyl_dim",
    "InterlacingCert", "Spin2Module", "branch_sp", "branch_spin_even",
    "branch_spin_odd", "cg_mult", "cg_product", "clebsch_gordan",
    "f4_to_spin9", "f4_to_spin9_table", "gz_chain",
    "restrict_e7_to_su2_spin12", "u2_to_torus",
    "KTypeLedger", "QuatModule", "check_lemma_surjectivity", "inf_char",
    "ktype_dimension", "ktypes", "minimal_type", "quat_module",
    "restrict_filtration", "sym_power", "sym_power_chain",
    "ThetaLift", "infchar_crosscheck", "seesaw_truncation_check",
    "theta_e6_torus", "theta_e6_u2", "theta_e7", "theta_e8_spin8",
    "theta_e8_spin9", "theta_f4",
    "AqCase", "AqData", "ThetaUnitaryResult", "abc_to_xy", "aq_data",
    "cone_contains", "cone_extreme_rays", "ftau_restriction_segments",
    "g2_modules_with_infchar", "orbit_key", "theta_unitary", "xy_to_abc",
    "run_suite",
]

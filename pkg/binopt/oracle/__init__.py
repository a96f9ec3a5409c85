from binopt.oracle.builders import (
    OracleBuild,
    build_CM0,
    build_CM1,
    build_R_S,
    build_U_f,
    build_U_f_dagger,
    build_U_parity,
    build_U_S,
    build_V_S,
    expected_gate_count,
)
from binopt.oracle.export import format_gate_list, parse_gate_list
from binopt.oracle.reference import (
    oracle_deviation,
    reference_oracle_apply,
    verify_oracle,
)

__all__ = [
    "OracleBuild",
    "build_CM0",
    "build_CM1",
    "build_R_S",
    "build_U_S",
    "build_U_f",
    "build_U_f_dagger",
    "build_U_parity",
    "build_V_S",
    "expected_gate_count",
    "format_gate_list",
    "oracle_deviation",
    "parse_gate_list",
    "reference_oracle_apply",
    "verify_oracle",
]

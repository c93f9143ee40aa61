from typing import Final


class Families:
    CLASSICAL = ("A", "2A", "B", "C", "D", "2D")
    EXCEPTIONAL = ("G2", "3D4", "F4", "E6", "2E6", "E7", "E8")
    SUZUKI_REE = ("2B2", "2G2", "2F4")
    ALL = CLASSICAL + EXCEPTIONAL + SUZUKI_REE


class WeylOrders:
    G2 = 12
    F4 = 1152
    E6 = 51840
    E7 = 2903040
    E8 = 696729600


class SylowEstimates:
    EXCEPTIONAL = 25
    E8 = 121


class Limits:
    ORACLE_Q_MAX = 11  # SL2(11): 1320개 원소
    SPIN_COVERAGE_N_MIN = 5
    SPIN_COVERAGE_N_MAX = 119
    ZSIGMONDY_E_MIN = 3


class Provenance:
    COMPUTED: Final = "computed"
    STORED: Final = "stored_paper_value"


class CheckStatus:
    PASS: Final = "pass"
    FAIL: Final = "fail"
    SKIPPED_CYCLIC: Final = "skipped_cyclic"
    UNSUPPORTED: Final = "unsupported"

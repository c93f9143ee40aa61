from src.services.oracle.field import field_tables
from src.services.oracle.sl2 import (
    OracleSizeError,
    compare_with_tables,
    enumerate_sl2,
    regular_ss_classes,
)

__all__ = [
    "OracleSizeError",
    "compare_with_tables",
    "enumerate_sl2",
    "field_tables",
    "regular_ss_classes",
]

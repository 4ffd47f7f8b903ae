from ._skewdet import (
    DomainError,
    count,
    decompose,
    mstrip,
    schur,
    sequences,
    sharp,
    three_strip_example,
    validate,
    verify,
)

__all__ = [
    "DomainError",
    "count",
    "decompose",
    "mstrip",
    "schur",
    "sequences",
    "sharp",
    "three_strip_example",
    "validate",
    "verify",
]

"""Standard bent-function representatives used by the verification suites.

Dimension 6 has four ET-class representatives; dimension 8 lists the ten
published representatives of degree at most 3 (two of which turn out to be
general linear equivalent).
"""

from __future__ import annotations

from .boolean_fn import BooleanFunction
from .ingest import parse_anf

F2_1 = "x0*x1"
F4_1 = "x0*x1 + x2*x3"

F6_1 = "x0*x1 + x2*x3 + x4*x5"
F6_2 = "x0*x1*x2 + x0*x3 + x1*x4 + x2*x5"
F6_3 = "x0*x1*x2 + x0*x1 + x0*x3 + x1*x3*x4 + x1*x5 + x2*x4 + x3*x4"
F6_4 = ("x0*x1*x2 + x0*x3 + x1*x3*x4 + x1*x5 + x2*x3*x5 + x2*x3 + x2*x4 "
        "+ x2*x5 + x3*x4 + x3*x5")

F8_1 = "x0*x1 + x2*x3 + x4*x5 + x6*x7"
F8_2 = "x0*x1*x2 + x0*x3 + x1*x4 + x2*x5 + x6*x7"
F8_3 = "x0*x1*x2 + x0*x6 + x1*x3*x4 + x1*x5 + x2*x3 + x4*x7"
F8_4 = "x0*x1*x2 + x0*x2 + x0*x4 + x1*x3*x4 + x1*x5 + x2*x3 + x6*x7"
F8_5 = ("x0*x1*x2 + x0*x6 + x1*x3*x4 + x1*x4 + x1*x5 + x2*x3*x5 + x2*x4 "
        "+ x3*x7")
F8_6 = ("x0*x1*x2 + x0*x2 + x0*x3 + x1*x3*x4 + x1*x6 + x2*x3*x5 + x2*x4 "
        "+ x5*x7")
F8_7 = ("x0*x1*x2 + x0*x1 + x0*x2 + x0*x3 + x1*x3*x4 + x1*x4 + x1*x5 "
        "+ x2*x3*x5 + x2*x4 + x6*x7")
F8_8 = "x0*x1*x2 + x0*x5 + x1*x3*x4 + x1*x6 + x2*x3*x5 + x2*x4 + x3*x7"
F8_9 = ("x0*x1*x6 + x0*x3 + x1*x4 + x2*x3*x6 + x2*x5 + x3*x4 + x4*x5*x6 "
        "+ x6*x7")
F8_10 = ("x0*x1*x2 + x0*x3*x6 + x0*x4 + x0*x5 + x1*x3*x4 + x1*x6 "
         "+ x2*x3*x5 + x2*x4 + x3*x7")

DIM2 = {"f2_1": F2_1}
DIM4 = {"f4_1": F4_1}
DIM6 = {"f6_1": F6_1, "f6_2": F6_2, "f6_3": F6_3, "f6_4": F6_4}
DIM8 = {"f8_1": F8_1, "f8_2": F8_2, "f8_3": F8_3, "f8_4": F8_4, "f8_5": F8_5,
        "f8_6": F8_6, "f8_7": F8_7, "f8_8": F8_8, "f8_9": F8_9, "f8_10": F8_10}


def representative(name: str) -> BooleanFunction:
    """Named representative, e.g. "f6_2"."""
    for dim, table in ((2, DIM2), (4, DIM4), (6, DIM6), (8, DIM8)):
        if name in table:
            return parse_anf(table[name], dim)
    raise KeyError(f"unknown representative {name!r}")


def representatives_for_dim(n: int) -> dict[str, BooleanFunction]:
    table = {2: DIM2, 4: DIM4, 6: DIM6, 8: DIM8}.get(n)
    if table is None:
        raise KeyError(f"no catalogued representatives in dimension {n}")
    return {name: parse_anf(anf, n) for name, anf in table.items()}

"""Types for internal use with the solvers."""
from enum import Enum
from typing import Literal, TypeAlias

PairT: TypeAlias = tuple[int, int]
"""A bare integer pair :code:`(x, y)` standing for :math:`x + y\\sqrt{m}`."""

ModeT: TypeAlias = Literal["theorem"] | Literal["search"]


class Variant(str, Enum):
    """Which congruence condition a Pell solution satisfies.

    ``XY`` is :math:`x + my \\equiv x + y \\equiv -1 \\pmod q`, reached by
    composing with the base solution :math:`(c, c)`; ``X_MINUS_Y`` is
    :math:`my - x \\equiv x - y \\equiv -1 \\pmod q`, reached from
    :math:`(-c, c)`.
    """
    XY = "XY"
    X_MINUS_Y = "XminusY"

    def __str__(self) -> str:
        return self.value

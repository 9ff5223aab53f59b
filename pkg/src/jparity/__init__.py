"""Parity of the Klein j-function, cubic partitions and partition powers.

Series are handled mod 2 as bit-packed truncated Laurent series; see
:mod:`jparity.f2series`. ``BACKEND`` names the carry-less multiplication
kernel picked at import ("compiled" or "python").
"""

from ._kernel import BACKEND
from .f2series import BitSeries

__all__ = ["BACKEND", "BitSeries"]
__version__ = "0.1.0"

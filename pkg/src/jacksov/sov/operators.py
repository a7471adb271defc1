"""
Separating operators, diagonal in the p_mn basis.
"""

from fractions import Fraction

from ..exact import CouplingLike, as_coupling, pochhammer
from ..sympoly import PmnExpansion


def _diagonal(p: PmnExpansion, top: Fraction, bottom: Fraction, inverse: bool) -> PmnExpansion:
    def factor(m: int, n: int, value: Fraction) -> Fraction:
        ratio = pochhammer(top, n) / pochhammer(bottom, n)
        return value / ratio if inverse else value * ratio

    return p.map_entries(factor)


def s2_apply(p: PmnExpansion, g: CouplingLike, inverse: bool = False) -> PmnExpansion:
    """
    S_2[p_mn] = (g)_n / (2g)_n p_mn, or its inverse.

    Examples:
      >>> s2_apply(PmnExpansion({(0, 1): 1}), 1)
      PmnExpansion(terms={(0, 1): Fraction(1, 2)}, prefactor_power=0)
    """
    g = as_coupling(g).value
    return _diagonal(p, g, 2 * g, inverse)


def s3hat_apply(p: PmnExpansion, g: CouplingLike, inverse: bool = False) -> PmnExpansion:
    """S_3[p_mn] = (2g)_n / (3g)_n p_mn, or its inverse."""
    g = as_coupling(g).value
    return _diagonal(p, 2 * g, 3 * g, inverse)

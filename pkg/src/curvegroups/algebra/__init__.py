"""Exact arithmetic: number fields, Laurent polynomials, matrices, Smith form."""

from .bilaurent import BiLaurentPoly, bilaurent_gcd
from .laurent import LaurentPoly, laurent_gcd
from .matrices import bareiss_determinant, minor_gcd
from .numberfield import QQ, NFElement, NumberField, cyclotomic8, nf_inverse
from .smith import SmithForm, smith_normal_form, smith_normal_form_laurent

__all__ = [
    "BiLaurentPoly",
    "LaurentPoly",
    "NFElement",
    "NumberField",
    "QQ",
    "SmithForm",
    "bareiss_determinant",
    "bilaurent_gcd",
    "cyclotomic8",
    "laurent_gcd",
    "minor_gcd",
    "nf_inverse",
    "smith_normal_form",
    "smith_normal_form_laurent",
]

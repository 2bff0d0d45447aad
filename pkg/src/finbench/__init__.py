"""finbench: executable witnesses and counterexample certificates for
finiteness properties of functors on computable categories."""

from .core import Mor, Obj, category_of, lookup_category
from .cats import FINSET, GRA, UN, VEC2, VEC3, presheaf_cat

__all__ = [
    "Mor",
    "Obj",
    "category_of",
    "lookup_category",
    "FINSET",
    "GRA",
    "UN",
    "VEC2",
    "VEC3",
    "presheaf_cat",
]

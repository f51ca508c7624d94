"""
CONSTRUCTIONS Package: Deterministic generators and example fixtures.
"""

from src.constructions.affine import affine_code, affine_comparability, max_agreement
from src.constructions.gallery import (
    GalleryId,
    family_fixtures,
    gallery,
    prek_sharp,
    resolve_gallery_id,
)
from src.constructions.generators import base_interleave, cyclic_boost, digit_windows, product, rotate

__all__ = [
    "base_interleave",
    "digit_windows",
    "product",
    "rotate",
    "cyclic_boost",
    "affine_code",
    "affine_comparability",
    "max_agreement",
    "GalleryId",
    "gallery",
    "family_fixtures",
    "prek_sharp",
    "resolve_gallery_id",
]

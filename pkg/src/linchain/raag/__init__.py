from .homs import RaagHom, power_endomorphism
from .mvh import (
    CoveringEmbedding,
    MultiValuedHom,
    TwistAssignment,
    TwistShadow,
    covering_embedding_data,
    covering_mvh,
    induced_raag_hom,
    is_covering_map,
    is_valid_mvh,
    lift_path,
    mvh_from_json,
    mvh_from_twist_assignment,
    validate_mvh,
)
from .words import Raag, Word, commutator, is_centerless, normal_form, support

__all__ = [
    "CoveringEmbedding",
    "MultiValuedHom",
    "Raag",
    "RaagHom",
    "TwistAssignment",
    "TwistShadow",
    "Word",
    "commutator",
    "covering_embedding_data",
    "covering_mvh",
    "induced_raag_hom",
    "is_centerless",
    "is_covering_map",
    "is_valid_mvh",
    "lift_path",
    "mvh_from_json",
    "mvh_from_twist_assignment",
    "normal_form",
    "power_endomorphism",
    "support",
    "validate_mvh",
]

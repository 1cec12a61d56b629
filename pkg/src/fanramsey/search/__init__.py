from .canonical import canonical_coloring, canonical_form, canonical_form_exact
from .engine import (Unresolved, compute_ramsey_value, derive_star_degree_cap,
                     exhaustive_search, extend_level, extensions)
from .estimator import RamseySearch
from .rules import DegreeCap, ForbidRule, GadgetAtTarget, SearchResult, SearchSpec

__all__ = [
    "DegreeCap", "ForbidRule", "GadgetAtTarget", "RamseySearch", "SearchResult",
    "SearchSpec", "Unresolved", "canonical_coloring", "canonical_form",
    "canonical_form_exact", "compute_ramsey_value", "derive_star_degree_cap",
    "exhaustive_search", "extend_level", "extensions",
]

"""Red/blue colorings of complete graphs: fans, stars and their Ramsey numbers."""
from .coloring import (BLUE, RED, Coloring, EdgeColor, assign_color, color_neighborhood,
                       common_color_neighborhood, induced_subcoloring, new_complete)
from .constructions import (circulant_red_regular, fan_fan_extremal, parity_epsilon,
                            star_fan_extremal)
from .detectors import (Witness, brute_force_contains, contains_mono, find_mono_join,
                        find_mono_triangles, max_color_matching)
from .patterns import (Join, Triangles, book, clique, fan, join, make_pattern, matching,
                       parse_pattern, pattern_vertex_count, star, triangles)
from .certificates import (decode_coloring, encode_coloring, read_certificate,
                           verify_certificate, write_certificate)
from .registry import known_values_table
from .search import (DegreeCap, ForbidRule, GadgetAtTarget, RamseySearch, SearchSpec,
                     compute_ramsey_value, exhaustive_search)

__version__ = "0.1.0"

__all__ = [
    "assign_color",
    "BLUE",
    "book",
    "brute_force_contains",
    "circulant_red_regular",
    "clique",
    "color_neighborhood",
    "Coloring",
    "common_color_neighborhood",
    "compute_ramsey_value",
    "contains_mono",
    "decode_coloring",
    "DegreeCap",
    "EdgeColor",
    "encode_coloring",
    "exhaustive_search",
    "fan",
    "fan_fan_extremal",
    "find_mono_join",
    "find_mono_triangles",
    "ForbidRule",
    "GadgetAtTarget",
    "induced_subcoloring",
    "Join",
    "join",
    "known_values_table",
    "make_pattern",
    "matching",
    "max_color_matching",
    "new_complete",
    "parity_epsilon",
    "parse_pattern",
    "pattern_vertex_count",
    "RamseySearch",
    "read_certificate",
    "RED",
    "SearchSpec",
    "star",
    "star_fan_extremal",
    "Triangles",
    "triangles",
    "verify_certificate",
    "Witness",
    "write_certificate",
]

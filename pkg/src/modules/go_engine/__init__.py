__all__ = [
    "Cluster",
    "Color",
    "DEFAULT_ENUMERATION_CAP",
    "GoDocument",
    "GoState",
    "analyze_clusters",
    "enumerate_admissible",
    "move_matrix",
    "parse_states",
    "play",
    "play_sequence",
    "serialize_states",
]

from .enumeration import DEFAULT_ENUMERATION_CAP, enumerate_admissible, move_matrix
from .go_state import Cluster, Color, GoState, analyze_clusters
from .rules import play, play_sequence
from .serialization import GoDocument, parse_states, serialize_states

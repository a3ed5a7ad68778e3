"""Critical independent sets, crowns and local maximum independent sets on small graphs."""

from .graph import Graph, VertexSet, mask_of, members
from .independence import DEFAULT_LIMITS, Limits, SizeLimitError

__all__ = ["Graph", "VertexSet", "mask_of", "members", "Limits", "DEFAULT_LIMITS", "SizeLimitError"]
__version__ = "0.1.0"

"""Exact curve and train-graph computations for plat bridge spheres."""

from .curves import DualCurve
from .diagram import Diagram
from .plat import PlatSpec, generate_family_instance

__all__ = ["Diagram", "DualCurve", "PlatSpec", "generate_family_instance"]

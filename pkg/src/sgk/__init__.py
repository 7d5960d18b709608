"""sgk: a verification toolkit for labeled intersection graphs on surfaces.

The package mechanizes a family of combinatorial arguments about fat-vertexed
graphs of intersection: face tracing on rotation systems, Scharlemann-cycle
taxonomy, great-web extraction with ghost-label accounting, exact
special-vertex counting, a replayable forbidden-configuration case calculus,
and a Seifert-fibered-space classifier.
"""

from sgk.fatgraph import FatGraph, Vertex, Face, EdgeClass, Surface

__all__ = ["FatGraph", "Vertex", "Face", "EdgeClass", "Surface"]
__version__ = "0.1.0"

"""Exact star-complement search for strongly regular graphs."""

from .feasibility import SrgParams, feasibility_report, srg_spectrum
from .graphcore import Graph, parse_graph6, write_graph6

__version__ = "0.1.0"

__all__ = ["Graph", "SrgParams", "feasibility_report", "parse_graph6", "srg_spectrum", "write_graph6"]

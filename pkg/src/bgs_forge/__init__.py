"""Desk-scale laboratory for clocked polynomial machines, universal search
for SAT, counterexample scans and the Busy Beaver census."""

from ._kernels import BACKEND

__version__ = "0.1.0"

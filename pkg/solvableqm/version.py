"""
The solvable-qm version, echoed in every report document.
"""

__version__ = "1.0.0"

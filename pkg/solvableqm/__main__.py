"""
Launches the CLI
"""

from solvableqm import main

main()

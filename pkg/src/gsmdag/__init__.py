"""Synthetic grade-school math problems over dependency DAGs.

Generates problems with controlled reasoning difficulty, renders canonical
chain-of-thought solutions, verifies candidate solutions step by step, and
computes probing labels describing what a solver must know at each point.
"""

__version__ = "0.1.0"

"""looplab: exact combinatorics of loop configurations on a square grid.

Three independent computation chains produce the same family of integers
and polynomials:

* brute-force enumeration of fully packed loop configurations (``fpl``),
* the exact groundstate of the completely packed loop model (``cpl``),
* a constant-term / residue chain through a triangular basis change
  (``qkz``).

The ``harness`` module cross-checks the chains against each other and
against a set of conjectured root/value/positivity laws.
"""

__version__ = "0.1.0"

"""Colored Cube Dance engine.

Binary relations U, P, L on the 28 major/minor/augmented triads, the
40-element monoid they generate, the order-7776 automorphism group of the
monoid action, and chord progression transformation built on top of it.
"""

__version__ = "0.1.0"

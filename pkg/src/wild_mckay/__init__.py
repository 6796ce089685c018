"""wild-mckay - exact motivic integrals for alpha_p and Z/pZ quotient singularities.

Evaluates motivic measures and stringy integrals over the moduli of
alpha_p- and Z/pZ-torsors on the punctured formal disk, checks the
dimension-two change of variables, and implements the representation
theory of alpha_p with invariant-ring and point-counting cross-checks.
"""

__version__ = "0.1.0"

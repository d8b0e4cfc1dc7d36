"""abelex: exact arithmetic for explicit abelian-extension computations.

Subpackages by theme:

- :mod:`abelex.bignum`      arbitrary-precision real/complex numerics
- :mod:`abelex.ff_poly`     finite fields GF(p^e) and polynomials over them
- :mod:`abelex.twisted`     twisted (skew) polynomial rings and additive maps
- :mod:`abelex.drinfeld`    rank-1 modules, torsion and Frobenius action
- :mod:`abelex.cluster`     seeds, mutation and Laurent expansion
- :mod:`abelex.nc_torus`    quadratic surds, continued fractions, invariants
- :mod:`abelex.class_field` Pell units, j-values, class polynomials, LLL
- :mod:`abelex.cli`         batch command line with JSON output
"""

__version__ = "0.1.0"

"""
Exact commutative algebra for 0-dimensional subschemes of projective space.

Modules, bottom-up: polycore (scalars and polynomials), linalg, gbasis,
idealops, local, scheme, liaison, canonical, cbp, dedekind; errors is shared.
"""

# Quadratic Lie superalgebras over the rationals
# Structure constants, invariant forms, super-exterior cochains, cohomology and double extensions

__version__ = "0.1.0"

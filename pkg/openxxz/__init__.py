"""Open XXZ spin chain with general integrable boundaries: operators, Bethe
vectors and a numerical certificate for the scalar-product determinant."""

__version__ = "0.1.0"

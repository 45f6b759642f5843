"""diagchi: exact series, operators and connection constants for the
diagonal susceptibility of the square Ising model.

The package is organised as a small tower:

``exactcore``
    exact scalar domains (rationals, prime fields, quotient rings),
    dense polynomials / rational functions, truncated power series with
    rational leading exponents, exact and modular linear algebra, and
    arbitrary-precision numerics.

``oreops``
    linear differential operators with rational-function coefficients:
    product, adjoint, right division, symmetric/exterior squares,
    algebraic change of variable, local exponents and Frobenius bases,
    plus a catalog of named operators shipped with the package.

``hyperseries``
    exact hypergeometric series, the diagonal-susceptibility series
    themselves, Hauptmodul pullbacks and the named special-geometry
    identities that tie them together.

``connection``
    numerical analytic continuation of holonomic functions, connection
    matrices between local bases, closed-form Gauss connection formulas
    (including the degenerate logarithmic cases), singular amplitudes,
    and the slowly convergent constants evaluated two independent ways.

``odefit``
    recovery of minimal differential equations from truncated series by
    modular nullspace computations, CRT lifting and rational
    reconstruction.

``quadrature``
    Gauss-Jacobi tensor quadrature for the underlying n-fold integrals.
"""

__version__ = "0.1.0"

"""
Exact continued fractions of quadratic irrationals and their fast convergents

- exact: integers, Gaussian numbers, quadratic elements, 2x2 matrices
- expansion: real and Hurwitz expansions, convergent matrices
- chebyshev: recurrence families and their identities
- fast: trace tables, binary / nested algorithms, decimation, sessions
- householder: Householder steps for x^2 - N
"""

"""Numerical tolerances and search caps shared by every module."""

#: entrywise (max-abs) tolerance for operator equalities
OPERATOR_TOL = 1e-10
#: tolerance on l2 norms and stochastic row sums
NORM_TOL = 1e-12

#: vertex cap for maximal-clique enumeration
MAX_CLIQUE_VERTICES = 64
#: vertex cap for the Krausz-partition and perfect-matching searches
MAX_SEARCH_VERTICES = 40
#: number of perfect matchings the 2b' check may enumerate
MAX_MATCHINGS = 2000
#: vertex cap for the isomorphism test
MAX_ISO_VERTICES = 12
#: vertex cap for the exhaustive two-tessellation oracle
MAX_BRUTE_FORCE_VERTICES = 8
#: dimension cap for dense operator realisations
MAX_DENSE_DIM = 4096

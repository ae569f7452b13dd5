"""unisecant: exact-arithmetic enumerative geometry of plane cubics.

Counts and certificates for rational plane curves meeting a smooth cubic at
a single point: the degree-k curve counts N_k through 3k-1 general points,
the 9k^2 maximal-contact divisors and their level stratification, plane
curve singularity resolution with the genus formula, and the pencil
analysis behind the 306 / 297 counts of rational unisecant cubics.  All
computation is over exact rationals; no floating point anywhere.
"""

__version__ = "0.1.0"

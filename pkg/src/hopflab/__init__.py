"""hopflab: exact computer algebra for the quantum double of U_q(sl2).

Normal-form arithmetic in U_q(sl2), the quantized function algebra C_q[SL2],
their tensor product as a two-sided module over the quantum double, and a
small lab for closing subspaces under the double's two actions, certifying
simplicity, and checking identities exactly over Q(q).
"""

__version__ = "0.1.0"

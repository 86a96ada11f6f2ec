"""Hand-transcribed hyperaddition tables for orders 3 and 4.

Elements: 0, 1, g, g² are indices 0, 1, 2, 3.  Each entry gives the rows
1 ⊞ x for x = 1, g (, g²) and the element -1.  The row for g² at order 4
follows from commutativity: 1 ⊞ g² = g²·(1 ⊞ g).
"""

from hyperfields import HyperfieldTable

ZERO, ONE, G, G2 = 0, 1, 2, 3


def _order3(neg, s1, sg):
    return HyperfieldTable.from_sets((2,), neg, [s1, sg])


def _order4(s1, sg):
    # g² · {a, ...}: 0 stays, g^k goes to g^(k+2)
    shift = {ZERO: ZERO, ONE: G2, G: ONE, G2: G}
    sg2 = {shift[e] for e in sg}
    return HyperfieldTable.from_sets((3,), ONE, [s1, sg, sg2])


H3 = {0, 1, 2}
H3_UNITS = {1, 2}

ORDER3 = {
    1: _order3(G, {G}, {ZERO}),                  # F_3
    2: _order3(ONE, {ZERO, G}, {ONE, G}),        # F_5 / G^2_5
    3: _order3(ONE, H3, H3_UNITS),               # H_2
    4: _order3(G, H3_UNITS, H3),                 # H'_2 = W
    5: _order3(G, {ONE}, H3),                    # S
}

H4 = {0, 1, 2, 3}
H4_UNITS = {1, 2, 3}

ORDER4 = {
    1: _order4({ZERO}, {G2}),
    2: _order4({ZERO, G}, {ONE, G2}),
    3: _order4({ZERO, G2}, {G, G2}),
    4: _order4({ZERO, G, G2}, H4_UNITS),
    5: _order4(H4, H4_UNITS),
    6: _order4({ZERO, G, G2}, {ONE, G}),
    7: _order4({ZERO, ONE, G}, {ONE, G2}),
    8: _order4({ZERO, ONE, G2}, {G, G2}),
    9: _order4(H4, {ONE, G}),
}

# the isomorphism classes among the nine order-4 structures
ORDER4_CLASSES = [(1,), (2, 3), (4,), (5,), (6,), (7, 8), (9,)]

"""Reference values transcribed by hand from the source figures and tables.

Nothing here is computed by the package; tests compare against these.
"""

# cup diagrams of the even and odd principal D_4 blocks, weight -> diagram
CUPS_EVEN = {
    "vvvv": "ray(1) ray(2) ray(3) ray(4)",
    "^^vv": "dcup(1,2) ray(3) ray(4)",
    "^v^v": "dray(1) cup(2,3) ray(4)",
    "v^^v": "cup(1,2) dray(3) ray(4)",
    "^vv^": "dray(1) ray(2) cup(3,4)",
    "v^v^": "cup(1,2) cup(3,4)",
    "vv^^": "cup(1,4) cup(2,3)",
    "^^^^": "dcup(1,2) dcup(3,4)",
}
CUPS_ODD = {
    "^vvv": "dray(1) ray(2) ray(3) ray(4)",
    "v^vv": "cup(1,2) ray(3) ray(4)",
    "vv^v": "ray(1) cup(2,3) ray(4)",
    "^^^v": "dcup(1,2) dray(3) ray(4)",
    "vvv^": "ray(1) ray(2) cup(3,4)",
    "^^v^": "dcup(1,2) cup(3,4)",
    "^v^^": "dcup(1,4) cup(2,3)",
    "v^^^": "cup(1,2) dcup(3,4)",
}

# the weights lambda_1 .. lambda_8 of the even D_4 block
LAMBDAS = ("vvvv", "^^vv", "^v^v", "v^^v", "^vv^", "v^v^", "vv^^", "^^^^")

# Cartan matrix figure, rows and columns lambda_1 .. lambda_8 ((4,7) read as q^2)
CARTAN_D4 = (
    ("1", "q", "0", "0", "0", "0", "0", "q^2"),
    ("q", "1+q^2", "q", "0", "0", "0", "q^2", "q+q^3"),
    ("0", "q", "1+q^2", "q", "q", "q^2", "q+q^3", "q^2"),
    ("0", "0", "q", "1+q^2", "q^2", "q+q^3", "q^2", "0"),
    ("0", "0", "q", "q^2", "1+q^2", "q+q^3", "q^2", "0"),
    ("0", "0", "q^2", "q+q^3", "q+q^3", "1+2q^2+q^4", "q+q^3", "0"),
    ("0", "q^2", "q+q^3", "q^2", "q^2", "q+q^3", "1+2q^2+q^4", "q+q^3"),
    ("q^2", "q+q^3", "q^2", "0", "0", "0", "q+q^3", "1+2q^2+q^4"),
)

# decomposition matrix display, same index order
DEC_D4 = (
    ("1", "q", "0", "0", "0", "0", "0", "q^2"),
    ("0", "1", "q", "0", "0", "0", "q^2", "q"),
    ("0", "0", "1", "q", "q", "q^2", "q", "0"),
    ("0", "0", "0", "1", "0", "q", "0", "0"),
    ("0", "0", "0", "0", "1", "q", "0", "0"),
    ("0", "0", "0", "0", "0", "1", "q", "0"),
    ("0", "0", "0", "0", "0", "0", "1", "q"),
    ("0", "0", "0", "0", "0", "0", "0", "1"),
)

# Ext-graph edges between lambda_i and lambda_j
QUIVER_D4 = {(1, 2), (2, 3), (3, 4), (3, 5), (4, 6), (5, 6), (3, 7), (6, 7), (7, 8), (2, 8)}

DIM_D4 = {0: 8, 1: 20, 2: 24, 3: 12, 4: 3}
DIM_D4_PROSE = {0: 8, 1: 20, 2: 24, 3: 12, 4: 2}  # printed in the text, total 66

CELL_DIMS_D4 = (3, 4, 5, 2, 2, 2, 2, 1)

# SOSP(3|2) principal block, Hom(P(i), P(j)) for i, j = 0..6
def sosp32_hom(i: int, j: int) -> int:
    if i == j:
        return 2
    i, j = sorted((i, j))
    if (i, j) == (0, 2):
        return 1
    if i >= 1 and j == i + 1:
        return 1
    return 0

"""Reference data for the verification suites."""

from __future__ import annotations

# e=4, Lambda = 2 Lambda_1 + 3 Lambda_2, text in the output style of a Fock-space program
# (grouping parentheses and a couple of missing '+' signs included).
EXAMPLE_E4_WEIGHT = (0, 2, 3, 0)

EXAMPLE_G_TEXT = {
    "[[], [], [1], [], []]": (
        "|[], [], [1], [], []> + q*|[], [], [], [1], []> + q^2*|[], [], [], [], [1]>"
    ),
    "[[1], [1], [1], [], []]": (
        "(|[1], [1], [1], [], []> + q*|[1], [1], [], [1], []> + q^2*|[1], [1], [], [], [1]>)"
        " + q*|[1], [], [1, 1], [], []> + q^2*|[1], [], [], [1, 1], []>"
        " + q^3*|[1], [], [], [], [1, 1]> + q^2*|[], [1], [1, 1], [], []>"
        " + q^3*|[], [1], [], [1, 1], []> + q^4*|[], [1], [], [], [1, 1]>"
    ),
    "[[2], [1], [1], [1], []]": (
        "(|[2], [1], [1], [1], []> + q*|[2], [1], [1], [], [1]> + q*|[1], [2], [1], [1], []> +"
        " q^2*|[2], [1], [], [1], [1]> + q^2*|[1], [2], [1], [], [1]>"
        " q^3*|[1], [2], [], [1], [1]>) + (q^4+q^2)*|[1], [1], [1], [1], [1]> +"
        " q^2*|[2], [], [1, 1], [], [1]> + q^2*|[2], [], [1], [1, 1], []> +"
        " (q*|[2], [], [1, 1], [1], []> + q^2*|[], [2], [1, 1], [1], []> +"
        " q^3*|[2], [], [1], [], [1, 1]> +q^3*|[], [2], [1, 1], [], [1]> +"
        " q^3*|[], [2], [1], [1, 1], []> + q^3*|[2], [], [], [1, 1], [1]>  +"
        " q^4*|[2], [], [], [1], [1, 1]> q^4*|[], [2], [], [1, 1], [1]> +"
        "q^4*|[], [2], [1], [], [1, 1]> + q^5*|[], [2], [], [1], [1, 1]>) +"
        " ( q^3*|[1], [], [1, 1], [1], [1]> + q^4*|[], [1], [1, 1], [1], [1]> +"
        "q^4*|[1], [], [1], [1, 1], [1]> + q^5*|[1], [], [1], [1], [1, 1]> +"
        "q^5*|[], [1], [1], [1, 1], [1]> + q^6*|[], [1], [1], [1], [1, 1]>)"
    ),
}

# shapes as ascending coefficient lists
EXAMPLE_SHAPES = {
    "[[], [], [1], [], []]": (1, 1, 1),
    "[[1], [1], [1], [], []]": (1, 2, 3, 2, 1),
    "[[2], [1], [1], [1], []]": (1, 3, 6, 6, 6, 3, 1),
}

# e=4, Lambda = 3 Lambda_1 + 5 Lambda_2, path 2^3 1^4 2^3
STRIP_WEIGHT = (0, 3, 5, 0)
STRIP_PATH = ((2, 3), (1, 4), (2, 3))
# coefficient exponents (each with multiplicity one), then the leader
STRIP_RESULT = (
    ((0,), [[2], [2], [2], [1, 1], [1], [1], [], []]),
    ((-1, 1), [[2], [2], [1], [1, 1], [1], [1], [1], []]),
    ((0,), [[2], [1], [1], [1, 1], [1], [1], [1], [1]]),
)

# e=5, Lambda = Lambda_1 + Lambda_2, face on residues {1,2,3}: labelled hubs and defects
E5_FACE_WEIGHT = (0, 1, 1, 0, 0)
E5_FACE_INTERVAL = (1, 2, 3)
E5_FACE_LABELS = {
    (0, 1, 1, 0, 0): 0,
    (1, -1, 2, 0, 0): 0,
    (0, 2, -1, 1, 0): 0,
    (1, 0, 0, 1, 0): 1,
    (2, -2, 1, 1, 0): 0,
    (2, -1, -1, 2, 0): 0,
    (0, 2, 0, -1, 1): 0,
    (1, 1, -2, 2, 0): 0,
    (1, 1, 0, -2, 2): 0,
    (2, -2, 2, -1, 1): 0,
    (2, -1, 0, 0, 1): 1,
    (2, -1, 1, -2, 2): 0,
    (2, 0, -1, -1, 2): 0,
    (2, 0, -2, 1, 1): 0,
}
E5_RHO_HUB = (2, 0, -1, -1, 2)

# a1=3, a2=2 hexagon: (j1, j2) -> defect
HEXAGON_A = (3, 2)
HEXAGON_BOUNDARY = {
    (0, 0): 0, (1, 0): 2, (2, 0): 2, (3, 0): 0, (0, 1): 1, (0, 2): 0, (1, 3): 2,
    (4, 1): 1, (2, 4): 2, (3, 5): 0, (4, 5): 1, (5, 2): 0, (5, 3): 2, (5, 4): 2, (5, 5): 0,
}
HEXAGON_INTERIOR = (
    ((1, 1), 4), ((1, 2), 4), ((2, 1), 5), ((2, 2), 6), ((2, 3), 5), ((3, 1), 4),
    ((3, 2), 6), ((3, 3), 6), ((3, 4), 4), ((4, 2), 4), ((4, 3), 5), ((4, 4), 4),
)
HEXAGON_CORNERS = ((0, 0), (3, 0), (0, 2), (5, 2), (3, 5), (5, 5))

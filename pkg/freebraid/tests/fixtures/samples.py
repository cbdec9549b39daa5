"""
Sample words and diagrams shared by the test suites
"""

# Brunnian-style braid on three strands
EXAMPLE_BRAID = "a(1,2) a(2,3) a(1,3) a(2,3) a(1,3) a(2,3) a(1,2) a(2,3)"

# chi(psi_m(EXAMPLE_BRAID)) for m = 1, 2, 3
EXAMPLE_CHI_IMAGES = {
    1: "a(1,2;1) a(1,2;0) a(1,2;1) a(1,2;0)",
    2: "a(1,2;0) a(1,2;1)",
    3: "a(1,2;0) a(1,2;1)",
}

# psi_m(EXAMPLE_BRAID) for m = 1, 2, 3
EXAMPLE_PSI_IMAGES = {
    1: "t(1) a(1,2) t(2) a(1,2) t(2) a(1,2) t(1) a(1,2)",
    2: "t(1) t(2) a(1,2) t(2) a(1,2) t(2) t(1) t(2)",
    3: "a(1,2) t(2) t(1) t(2) t(1) t(2) a(1,2) t(2)",
}

TRIANGLE = ("a(1,2) a(1,3) a(2,3)", "a(2,3) a(1,3) a(1,2)")

PURE_DIAGRAM = "braid n=3\n1 2 2 1"
PURE_DIAGRAM_WORD = "a(1,2) a(1,3) a(1,3) a(1,2)"

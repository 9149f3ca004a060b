"""Frozen expected values for the built-in regression tables.

Three published computations are reproduced by the CLI `table` command and
the acceptance tests: the congruent-number table at level 32 (maincor), its
prime-discriminant variant (primes), and the Fermat-cubic-twist table at
level 27 (cubes).  Rows are (D, F(x1), F(x2)) with the verdict string where
the source prints one.  The fourth table (discs) is the level registry in
criterion.LEVELS.
"""

# level 32, x1 = 0, x2 = 1/3; verdict: congruent / non-congruent assuming BSD
MAINCOR_ROWS = (
    (-11, 0, 1, "non-congruent"),
    (-19, 0, 1, "non-congruent"),
    (-35, 0, 2, "non-congruent"),
    (-219, 2, 2, "congruent"),
    (-331, 0, 3, "non-congruent"),
    (-371, 4, 4, "congruent"),
    (-4219, 6, 9, "non-congruent"),
    (-80011, 28, 40, "non-congruent"),
    (-80155, 24, 32, "non-congruent"),
    (-800003, 138, 140, "non-congruent"),
    (-800011, 72, 81, "non-congruent"),
    (-800027, 86, 94, "non-congruent"),
    (-8000459, 578, 590, "non-congruent"),
    (-8000467, 190, 200, "non-congruent"),
)

# level 32 restricted to D = -p, p prime, p = 3 (mod 8); columns F(0), F(1/3)
PRIMES_ROWS = (
    (11, 0, 1),
    (19, 0, 1),
    (331, 0, 3),
    (571, 4, 1),
    (5227, 10, 5),
    (5939, 18, 17),
    (75011, 70, 83),
    (75403, 24, 21),
    (200171, 102, 117),
    (200443, 36, 37),
    (1300027, 34, 93),
    (5500003, 120, 137),
    (40500011, 1254, 1331),
    (40500059, 1186, 1189),
)

# level 27, x1 = 0, x2 = 1/2; verdict: rational points finite / infinite
CUBES_ROWS = (
    (-7, 0, 2, "finite"),
    (-31, 2, 2, "infinite"),
    (-115, 0, 4, "finite"),
    (-283, 2, 2, "infinite"),
    (-3019, 4, 6, "finite"),
    (-3079, 24, 34, "finite"),
    (-3115, 8, 8, "infinite"),
    (-30091, 44, 26, "finite"),
    (-30139, 20, 14, "finite"),
    (-600004, 158, 196, "finite"),
    (-600007, 132, 132, "infinite"),
    (-600019, 130, 172, "finite"),
    (-600043, 70, 58, "finite"),
    (-3000004, 368, 336, "finite"),
    (-3000103, 432, 414, "finite"),
    (-3000115, 224, 224, "infinite"),
)

TABLE_LEVEL = {"maincor": 32, "primes": 32, "cubes": 27}


def rows_for(name: str):
    """Expected rows for a named table, as (D, f_x1, f_x2, verdict-or-None)."""
    if name == "maincor":
        return [(d, f1, f2, v) for d, f1, f2, v in MAINCOR_ROWS]
    if name == "primes":
        return [(-p, f1, f2, None) for p, f1, f2 in PRIMES_ROWS]
    if name == "cubes":
        return [(d, f1, f2, v) for d, f1, f2, v in CUBES_ROWS]
    raise KeyError(name)

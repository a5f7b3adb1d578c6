"""Verification suites for the interval enumerators of Tamari lattices.

Each suite recomputes a stated property from scratch by exhaustive
enumeration at desk scale and returns a ``CheckReport``.  All arithmetic is
exact; a suite either passes or carries a concrete witness of the first
failure.  Reference counting sequences are frozen here with their OEIS ids,
and the small reference coefficient tables were cross-checked by hand
against direct enumeration at n <= 3.
"""

import itertools
import time
from dataclasses import asdict, dataclass, field

from . import tamari
from .polynomial import MultiPoly, UniPoly, all_roots_real_negative
from .series import Mode, SystemConfig, solve

# interval counts of the rotation lattices, n >= 1 (OEIS A000260)
INTERVAL_COUNTS = (1, 3, 13, 68, 399, 2530, 16965, 118668)

# synchronous interval counts, n >= 1 (OEIS A000139)
SYNCHRONOUS_COUNTS = (1, 2, 6, 22, 91, 408, 1938)

# intervals of (x, y, ybar)-degree exactly n - 1, n >= 1 (OEIS A000257)
BICUBIC_COUNTS = (1, 3, 12, 56, 288, 1584)

# Motzkin numbers M_0, M_1, ... (OEIS A001006)
MOTZKIN = (1, 1, 2, 4, 9, 21, 51)

# coefficient tables of the two-variable enumerator of the interval poset,
# displayed with the a-exponent increasing along rows and the abar-exponent
# decreasing down columns (origin at the lower left)
TRIANGLE_MATRICES = {
    1: [[1]],
    2: [[1, 1],
        [0, 1]],
    3: [[1, 3, 2],
        [0, 3, 3],
        [0, 0, 1]],
    4: [[1, 6, 11, 4],
        [0, 6, 16, 11],
        [0, 0, 6, 6],
        [0, 0, 0, 1]],
    5: [[1, 10, 35, 36, 9],
        [0, 10, 50, 86, 36],
        [0, 0, 20, 50, 35],
        [0, 0, 0, 10, 10],
        [0, 0, 0, 0, 1]],
}

# counts of intervals by (dy, dybar), same display orientation; the bottom
# row (dybar = 0) is the Narayana distribution
CANOPY_MATRICES = {
    1: [[1]],
    2: [[1, 0],
        [1, 1]],
    3: [[1, 0, 0],
        [3, 4, 0],
        [1, 3, 1]],
    4: [[1, 0, 0, 0],
        [6, 10, 0, 0],
        [6, 21, 10, 0],
        [1, 6, 6, 1]],
    5: [[1, 0, 0, 0, 0],
        [10, 20, 0, 0, 0],
        [20, 81, 49, 0, 0],
        [10, 65, 81, 20, 0],
        [1, 10, 20, 10, 1]],
}


@dataclass
class CheckReport:
    """Outcome of one verification suite."""

    check_id: str
    n_range: tuple
    status: str
    witness: 'str | None'
    wall_time: float
    details: dict = field(default_factory=dict)

    def passed(self):
        return self.status == "pass"

    def to_dict(self):
        return asdict(self)


def _finish(check_id, n_lo, n_hi, start, failures, details=None):
    status = "pass" if not failures else "fail"
    witness = None if not failures else failures[0]
    return CheckReport(check_id, (n_lo, n_hi), status, witness,
                       round(time.perf_counter() - start, 3), details or {})


def distribution_table(records, stat_a, stat_b):
    """Counts of intervals by a pair of record statistics."""
    out = {}
    for r in records:
        key = (getattr(r, stat_a), getattr(r, stat_b))
        out[key] = out.get(key, 0) + 1
    return out


def table_to_matrix(table, n):
    """Render a pair table on the n x n grid: first statistic increasing
    left to right, second decreasing top to bottom."""
    return [[table.get((c, n - 1 - r), 0) for c in range(n)] for r in range(n)]


def brute_force_weights(n):
    """The (x, y, ybar) enumerator of all intervals, xbar projected to 1."""
    p = tamari.interval_valence_polynomial(n)
    return p.substitute({"xbar": 1}, ("x", "y", "ybar"))


def check_ternary_symmetry(n_max=7):
    """Full S3 symmetry of the enumerator on {x, y, ybar} once xbar = 1,
    and on {y, ybar, xbar} once x = 1."""
    start = time.perf_counter()
    n_max = min(n_max, 8)
    failures = []
    for n in range(1, n_max + 1):
        p = tamari.interval_valence_polynomial(n)
        for kept, names in (("xbar", ("x", "y", "ybar")), ("x", ("y", "ybar", "xbar"))):
            proj = p.substitute({kept: 1}, names)
            for perm in itertools.permutations(names):
                mapping = dict(zip(names, perm))
                if not proj.is_symmetric(mapping):
                    failures.append(f"n={n}: {kept}=1 projection not invariant under {mapping}")
    return _finish("ternary", 1, n_max, start, failures)


def check_x_xbar_conjecture(n_max=7):
    """Invariance of the full four-variable enumerator under swapping x with
    xbar alone, and y with ybar alone (conjectural; verified exhaustively)."""
    start = time.perf_counter()
    n_max = min(n_max, 8)
    failures = []
    for n in range(1, n_max + 1):
        p = tamari.interval_valence_polynomial(n)
        if not p.is_symmetric({"x": "xbar", "xbar": "x"}):
            failures.append(f"conjecture counterexample: n={n}, x <-> xbar changes the enumerator")
        if not p.is_symmetric({"y": "ybar", "ybar": "y"}):
            failures.append(f"conjecture counterexample: n={n}, y <-> ybar changes the enumerator")
    return _finish("xxbar", 1, n_max, start, failures)


def check_support_triangle(n_max=5):
    """Support of the two-variable enumerator of the interval poset: the
    staircase triangle i + j >= n - 1 inside the (n-1) x (n-1) box, with the
    full coefficient matrices pinned for n <= 5."""
    start = time.perf_counter()
    n_max = min(n_max, 6)
    failures = []
    matrices = {}
    a = MultiPoly.variable(("a", "abar"), "a")
    abar = MultiPoly.variable(("a", "abar"), "abar")
    for n in range(1, n_max + 1):
        p = tamari.interval_valence_polynomial(n)
        two = p.substitute({"x": a, "y": a, "ybar": abar, "xbar": abar}, ("a", "abar"))
        expected = {(i, j) for i in range(n) for j in range(n) if i + j >= n - 1}
        got = two.support()
        if got != expected:
            failures.append(f"n={n}: support {sorted(got)} differs from triangle")
        total = sum(two.terms.values())
        if n <= len(INTERVAL_COUNTS) and total != INTERVAL_COUNTS[n - 1]:
            failures.append(f"n={n}: coefficient sum {total} != interval count")
        matrix = table_to_matrix({e: c for e, c in two.terms.items()}, n)
        matrices[str(n)] = matrix
        if n in TRIANGLE_MATRICES and matrix != TRIANGLE_MATRICES[n]:
            failures.append(f"n={n}: coefficient matrix {matrix} != reference")
    return _finish("triangle", 1, n_max, start, failures, {"matrices": matrices})


def check_synchronous_theorem(n_max=7):
    """Equal canopies happen exactly at (y, ybar)-degree n - 1, and the
    synchronous counts match both the frozen sequence and the one-variable
    restricted system."""
    start = time.perf_counter()
    n_max = min(n_max, 7)
    failures = []
    counts = []
    for n in range(1, n_max + 1):
        records = tamari.interval_statistics(n)
        sync_count = 0
        for r in records:
            if r.sync != (r.dy + r.dybar == n - 1):
                failures.append(f"n={n} interval ({r.lo},{r.hi}): sync={r.sync} "
                                f"but dy+dybar={r.dy + r.dybar}")
            sync_count += r.sync
        counts.append(sync_count)
        if sync_count != SYNCHRONOUS_COUNTS[n - 1]:
            failures.append(f"n={n}: {sync_count} synchronous intervals, "
                            f"expected {SYNCHRONOUS_COUNTS[n - 1]}")
    solved = solve(SystemConfig(Mode.SYNCHRONOUS_RESTRICTED, n_max + 1))
    series_counts = solved.intervals_at_unit().constant_values()[1:]
    if series_counts != counts:
        failures.append(f"restricted system gives {series_counts}, enumeration gives {counts}")
    return _finish("sync", 1, n_max, start, failures, {"counts": counts})


def check_degree_properties(n_max=7):
    """Degree-zero characterisations, the five pair bounds, the lower bound
    dx + dy + dybar >= n - 1 and the counts on its boundary."""
    start = time.perf_counter()
    n_max = min(n_max, 7)
    failures = []
    bicubic = []
    for n in range(1, n_max + 1):
        lat = tamari.tamari_lattice(n)
        lo_min, hi_max = lat.minimum(), lat.maximum()
        on_bound = 0
        for r in tamari.interval_statistics(n):
            where = f"n={n} interval ({r.lo},{r.hi})"
            if (r.dx == 0) != (r.lo == r.hi) or (r.dxbar == 0) != (r.lo == r.hi):
                failures.append(f"{where}: dx/dxbar vanishing does not match lo == hi")
            if (r.dy == 0) != (r.hi == hi_max):
                failures.append(f"{where}: dy = 0 does not match hi maximal")
            if (r.dybar == 0) != (r.lo == lo_min):
                failures.append(f"{where}: dybar = 0 does not match lo minimal")
            pairs = ((r.dx, r.dybar), (r.dy, r.dxbar), (r.dx, r.dy),
                     (r.dxbar, r.dybar), (r.dy, r.dybar))
            if any(s + t > n - 1 for s, t in pairs):
                failures.append(f"{where}: a pair degree exceeds n - 1")
            if r.dx + r.dy + r.dybar < n - 1:
                failures.append(f"{where}: dx+dy+dybar = {r.dx + r.dy + r.dybar} < n - 1")
            on_bound += r.dx + r.dy + r.dybar == n - 1
        bicubic.append(on_bound)
        if n <= len(BICUBIC_COUNTS) and on_bound != BICUBIC_COUNTS[n - 1]:
            failures.append(f"n={n}: {on_bound} intervals on the (x,y,ybar) boundary, "
                            f"expected {BICUBIC_COUNTS[n - 1]}")
    solved = solve(SystemConfig(Mode.BICUBIC_RESTRICTED, n_max + 1))
    series_counts = solved.intervals_at_unit().constant_values()[1:]
    if series_counts != bicubic:
        failures.append(f"restricted system gives {series_counts}, enumeration gives {bicubic}")
    return _finish("degree", 1, n_max, start, failures, {"bicubic_counts": bicubic})


def check_distribution_equalities(n_max=7):
    """Joint distribution identities: the pair tables forced by the ternary
    symmetries, the canopy table against (dy, dybar), the printed tables for
    n <= 5, and the q tables (q, dy) == (q, dybar) for n <= 6."""
    start = time.perf_counter()
    n_max = min(n_max, 7)
    failures = []
    matrices = {}
    for n in range(1, n_max + 1):
        records = tamari.interval_statistics(n)
        base = distribution_table(records, "dy", "dybar")
        same = {
            "(dx,dy)": distribution_table(records, "dx", "dy"),
            "(dx,dybar)": distribution_table(records, "dx", "dybar"),
            "(dybar,dxbar)": distribution_table(records, "dybar", "dxbar"),
            "(dy,dxbar)": distribution_table(records, "dy", "dxbar"),
            "transpose": {(j, i): c for (i, j), c in base.items()},
        }
        for label, table in same.items():
            if table != base:
                failures.append(f"n={n}: {label} table differs from (dy,dybar)")
        canopy_table = distribution_table(records, "ll", "rr")
        if canopy_table != base:
            failures.append(f"n={n}: canopy (ll,rr) table differs from (dy,dybar)")
        matrix = table_to_matrix(base, n)
        matrices[str(n)] = matrix
        if n in CANOPY_MATRICES and matrix != CANOPY_MATRICES[n]:
            failures.append(f"n={n}: (dy,dybar) matrix {matrix} != reference")
        if n <= 6:
            qy = distribution_table(records, "q", "dy")
            qybar = distribution_table(records, "q", "dybar")
            if qy != qybar:
                failures.append(f"n={n}: (q,dy) table differs from (q,dybar)")
    return _finish("distribution", 1, n_max, start, failures, {"matrices": matrices})


def check_remaining_conjectures(n_max=7):
    """Exhaustive evidence for the open statements: only diagonal intervals
    reach total degree n - 1; the doubly-extremal intervals are counted by
    Motzkin numbers, form an antichain (n <= 6), and the two companion
    boundary counts agree."""
    start = time.perf_counter()
    n_max = min(n_max, 7)
    failures = []
    motzkin = []
    for n in range(1, n_max + 1):
        lat = tamari.tamari_lattice(n)
        records = tamari.interval_statistics(n)
        simple = [r for r in records if r.dx + r.dy + r.dybar + r.dxbar == n - 1]
        if any(r.lo != r.hi for r in simple) or len(simple) != len(lat.trees):
            failures.append(f"conjecture counterexample: n={n}, total degree n-1 "
                            f"does not characterise diagonal intervals")
        extremal = [r for r in records
                    if r.dx + r.dy == n - 1 and r.dxbar + r.dybar == n - 1]
        motzkin.append(len(extremal))
        if len(extremal) != MOTZKIN[n - 1]:
            failures.append(f"conjecture counterexample: n={n}, {len(extremal)} "
                            f"doubly-extremal intervals, Motzkin predicts {MOTZKIN[n - 1]}")
        if n <= 6:
            for r1, r2 in itertools.combinations(extremal, 2):
                if ((lat.poset.leq(r1.lo, r2.lo) and lat.poset.leq(r1.hi, r2.hi))
                        or (lat.poset.leq(r2.lo, r1.lo) and lat.poset.leq(r2.hi, r1.hi))):
                    failures.append(f"conjecture counterexample: n={n}, extremal intervals "
                                    f"({r1.lo},{r1.hi}) and ({r2.lo},{r2.hi}) are comparable")
        left = sum(1 for r in records if r.dx + r.dybar == n - 1)
        right = sum(1 for r in records if r.dxbar + r.dy == n - 1)
        if left != right:
            failures.append(f"conjecture counterexample: n={n}, boundary counts "
                            f"(x,ybar)={left} and (xbar,y)={right} differ")
    return _finish("conjectures", 1, n_max, start, failures, {"motzkin_counts": motzkin})


def check_real_rootedness(n_max=7):
    """Real-rootedness of the one-variable specializations z/1/1/1, z/z/1/1
    and z/z/z/1 of (x, y, ybar, xbar): after factoring out the power of z,
    all roots must be real and negative.  Also reports the distribution of
    dx on the dx + dy = n - 1 boundary."""
    start = time.perf_counter()
    n_max = min(n_max, 7)
    failures = []
    specializations = {}
    facet = {}
    z = MultiPoly.variable(("z",), "z")
    for n in range(2, n_max + 1):
        p = tamari.interval_valence_polynomial(n)
        for label, bindings in (
                ("z,1,1,1", {"x": z, "y": 1, "ybar": 1, "xbar": 1}),
                ("z,z,1,1", {"x": z, "y": z, "ybar": 1, "xbar": 1}),
                ("z,z,z,1", {"x": z, "y": z, "ybar": z, "xbar": 1})):
            f = UniPoly.from_multipoly(p.substitute(bindings, ("z",)), "z")
            k = f.trailing_zero_order()
            reduced = f.shift_down(k)
            ok = all_roots_real_negative(reduced)
            specializations[f"n={n} ({label})"] = {
                "polynomial": str(f), "zero_root_order": k, "real_rooted": ok}
            if not ok:
                failures.append(f"n={n}: specialization ({label}) = {f} "
                                f"has a nonreal or nonnegative root")
        records = tamari.interval_statistics(n)
        dist = {}
        for r in records:
            if r.dx + r.dy == n - 1:
                dist[r.dx] = dist.get(r.dx, 0) + 1
        facet[str(n)] = [dist.get(i, 0) for i in range(n)]
    return _finish("realroots", 2, n_max, start, failures,
                   {"specializations": specializations, "facet_dx_distribution": facet})


SUITES = {
    "ternary": check_ternary_symmetry,
    "xxbar": check_x_xbar_conjecture,
    "triangle": check_support_triangle,
    "sync": check_synchronous_theorem,
    "degree": check_degree_properties,
    "distribution": check_distribution_equalities,
    "conjectures": check_remaining_conjectures,
    "realroots": check_real_rootedness,
}


def run_suites(suite_ids, n_max):
    """Run the named suites (or all of them) and collect the reports."""
    if suite_ids in (None, "all") or suite_ids == ["all"]:
        suite_ids = list(SUITES)
    unknown = [s for s in suite_ids if s not in SUITES]
    if unknown:
        raise ValueError(f"unknown suite(s) {unknown}; available: {sorted(SUITES)}")
    return [SUITES[s](n_max) for s in suite_ids]


def summarize_reports(reports):
    lines = []
    for rep in reports:
        lo, hi = rep.n_range
        line = f"{rep.status.upper():4s} {rep.check_id:13s} n={lo}..{hi} ({rep.wall_time}s)"
        if rep.witness:
            line += f"\n     witness: {rep.witness}"
        lines.append(line)
    return "\n".join(lines)

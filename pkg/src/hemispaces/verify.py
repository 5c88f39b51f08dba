"""Invariant suite behind ``hemispaces verify``.

Each suite re-derives a countable or checkable claim by an independent
route (grid enumeration, segment breakpoint evaluation, brute-force
splitting enumeration, recurrences) and records pass/fail.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

from .enumeration import (
    MISPRINTED_F5,
    bell_f,
    bell_standard,
    census,
    count_hemispaces,
    enumerate_centered_hyperplanes,
    enumerate_hemispaces,
    enumerate_splittings,
    enumerate_weak_orders,
    weak_order_to_splitting,
)
from .faces import (
    Hyperplane,
    KFace,
    boundary_subface,
    classify,
    face_catalog,
    grid_points,
    random_scalar,
    sample_face_point,
    satisfies,
    segment_face_trace,
)
from .hemispace import (
    Hemispace,
    TypeISplit,
    assemble,
    check_hemispace,
    validate_partition,
)
from .maxplus import oplus, scale


@dataclass
class SuiteResult:
    name: str
    passed: bool
    detail: str


@dataclass
class Report:
    suites: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(s.passed for s in self.suites)

    def add(self, name, passed, detail):
        self.suites.append(SuiteResult(name, bool(passed), detail))


def linear_hyperplanes(n: int) -> list:
    """Hyperplanes ``max_I x_i = max_J x_j`` (no free term) with I ⊔ J = [n]."""
    coords = frozenset(range(1, n + 1))
    out = []
    for r in range(1, n):
        for I in itertools.combinations(sorted(coords), r):
            out.append(Hyperplane(n, frozenset(I), coords - frozenset(I), frozenset(), False))
    return out


def check_partition_grid(H: Hyperplane) -> tuple:
    """(points checked, failures) of the exactly-one-face property over the grid."""
    catalog = face_catalog(H)
    bad = 0
    total = 0
    for p in grid_points(H.n):
        total += 1
        hits = [f for f in catalog if satisfies(H, f, p)]
        if len(hits) != 1 or hits[0] != classify(H, p):
            bad += 1
    return total, bad


def check_cone_closure(H: Hyperplane, per_face: int, seed: int, scaling: bool = True) -> list:
    """Faces that leave themselves under ⊕ (and ⊗ by finite scalars when ``scaling``)."""
    failures = []
    for idx, f in enumerate(face_catalog(H)):
        rng = random.Random(seed * 7919 + idx)
        for _ in range(per_face):
            p = sample_face_point(H, f, rng)
            q = sample_face_point(H, f, rng)
            lam = random_scalar(rng, p_bottom=0.0)
            if classify(H, oplus(p, q)) != f:
                failures.append((f, "oplus", p, q))
                break
            if scaling and classify(H, scale(lam, p)) != f:
                failures.append((f, "scale", lam, p))
                break
    return failures


def check_traces(H: Hyperplane, seed: int) -> tuple:
    """(pairs checked, failures) for segments between distinct k-faces."""
    kfaces = [f for f in face_catalog(H) if isinstance(f, KFace)]
    rng = random.Random(seed)
    bad = total = 0
    for f1, f2 in itertools.permutations(kfaces, 2):
        total += 1
        x, y = sample_face_point(H, f1, rng), sample_face_point(H, f2, rng)
        expected = {f1, f2, boundary_subface(H, f1, f2)}
        if set(segment_face_trace(H, x, y)) != expected:
            bad += 1
    return total, bad


def degenerate_hyperplane() -> Hyperplane:
    """``x1 = x2, x3 = -inf`` in R^4_max: a type-I and a type-II face, x4 unused."""
    return Hyperplane(4, frozenset({1}), frozenset({2}), frozenset({3}), False)


def nonnegative_half_line() -> Hemispace:
    """``{x >= 0}`` in R^1_max, as the faces {1} and {1, free} of ``x1 = 0``."""
    H = Hyperplane(1, frozenset({1}), frozenset(), frozenset(), True)
    part = validate_partition(H, [{2}], [{1}, {1, 2}])
    return Hemispace(part, 1)


def degenerate_pair(split=TypeISplit.ALL_TO_FIRST, type_ii=True):
    H = degenerate_hyperplane()
    part = validate_partition(H, [{1}], [{2}, {1, 2}])
    return assemble(H, part, 0, split, type_ii)


def run_all(n: int, trials: int = 200, seed: int = 0) -> Report:
    rep = Report()
    dims = range(1, n + 1)

    total = bad = 0
    for d in dims:
        for H in enumerate_centered_hyperplanes(d) + linear_hyperplanes(d):
            t, b = check_partition_grid(H)
            total, bad = total + t, bad + b
    rep.add("classification-partition", bad == 0, f"{total - bad}/{total} grid points in exactly one face")

    fails = []
    checked = 0
    for d in dims:
        for H in enumerate_centered_hyperplanes(d):
            fails += check_cone_closure(H, trials, seed, scaling=False)
            checked += 1
        for H in linear_hyperplanes(d) + [degenerate_hyperplane()] * (d == 4):
            fails += check_cone_closure(H, trials, seed, scaling=True)
            checked += 1
    rep.add("cone-closure", not fails, f"{checked} hyperplanes, {len(fails)} faces not closed")
    rep.notes.append("faces of a hyperplane with a free term are closed under ⊕ but not under finite "
                     "scaling (x1 = 0: the face x1 > 0 sends 1 to -1 under -2); scaling is checked "
                     "on hyperplanes without a free term")

    total = bad = 0
    for d in dims:
        for hm in enumerate_hemispaces(d):
            total += 1
            if not check_hemispace(hm, trials, seed).passed:
                bad += 1
    rep.add("convexity", bad == 0, f"{total - bad}/{total} hemispaces convex on {trials} sampled pairs")

    total = bad = 0
    for d in dims:
        for H in enumerate_centered_hyperplanes(d) + linear_hyperplanes(d):
            t, b = check_traces(H, seed)
            total, bad = total + t, bad + b
    rep.add("segment-traces", bad == 0, f"{total - bad}/{total} face pairs traced through F1, F2, Bd(F1, F2)")

    bad = 0
    for split in (TypeISplit.ALL_TO_FIRST, nonnegative_half_line()):
        for t2 in (True, False):
            for hm in degenerate_pair(split, t2):
                if not check_hemispace(hm, trials, seed).passed:
                    bad += 1
    rep.add("extra-faces", bad == 0, f"{8 - bad}/8 degenerate R^4 members convex")

    ms = range(1, min(n + 1, 5) + 1)
    ok = True
    for m in ms:
        ws = enumerate_weak_orders(m)
        image = {weak_order_to_splitting(w) for w in ws}
        ok &= len(image) == len(ws) == bell_standard(m) and image == set(enumerate_splittings(m))
    rep.add("bijection", ok, f"weak orders <-> splittings for m = 1..{ms[-1]}")

    counts = [(d, count_hemispaces(d), 2 * bell_f(d)) for d in dims]
    rec_ok = all(bell_f(k) == bell_standard(k + 1) for k in range(11))
    rep.add("counts", rec_ok and all(a == b for _, a, b in counts),
            "; ".join(f"n={d}: {a} enumerated, {b} = 2 f(n)" for d, a, b in counts))
    rep.notes.append(f"f(5) = {bell_f(5)} from the recurrence; the value {MISPRINTED_F5} that appears in "
                     "some printed tables at this position is a misprint")

    if n >= 3:
        c = census(3)
        want = {"case1/subcase1": 10, "case1/subcase2": 36, "case2/subcase1": 32, "case2/subcase2": 72}
        rep.add("census-n3", all(c[k] == v for k, v in want.items()),
                ", ".join(f"{k}={c[k]}" for k in ("case1/subcase1", "case1/subcase2", "case2/subcase1",
                                                 "case2/subcase2", "total")))
    return rep


def format_report(rep: Report, color: bool = False) -> str:
    def tag(ok):
        word = "PASS" if ok else "FAIL"
        if not color:
            return word
        return ("\033[32m" if ok else "\033[31m") + word + "\033[0m"

    lines = [f"{tag(s.passed)} {s.name}: {s.detail}" for s in rep.suites]
    lines += [f"NOTE {note}" for note in rep.notes]
    lines.append(f"{tag(rep.passed)} overall")
    return "\n".join(lines) + "\n"

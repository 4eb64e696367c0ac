"""Numeric certification of covering propagation and disk classification.

A loop's hit on the straight arc between a twist region's punctures forces
its projection one level down to cover the corresponding tao; pushing a
loop down the plat therefore certifies a growing mini-graph of covered
taos, computed through the below lattice and cross-checked numerically at
every level.  Any disagreement between the lattice prediction and the
measured crossings is a fatal inconsistency, never repaired.
"""

from dataclasses import dataclass

from .curves import DualCurve
from .traingraph import MiniGraph, build_train_graph, directly_below


class CoverageInconsistency(AssertionError):
    """Lattice prediction contradicted by exact crossing numbers."""


@dataclass
class CoverageCertificate:
    level: int
    taos: tuple               # certified tao slots at this level
    evidence: dict            # slot -> crossing count with the slot arc
    minigraph: MiniGraph


def slot_profile(curve, spec, row):
    """[(slot, gap, crossings with the slot's straight arc)] for a row."""
    out = []
    for j, pair, active in spec.active_slots(row):
        if not active:
            continue
        g = pair[0]
        out.append((j, g, curve.chord_crossings(g)))
    return out


def delta_profile(curve, spec):
    """Evidence of the curve on the twist row just below its level."""
    if curve.level < 2:
        raise ValueError("no twist row below level 1")
    if curve.level > spec.n:
        raise ValueError("curve level beyond the top bridge sphere")
    return slot_profile(curve, spec, curve.level - 1)


def certify_coverage(curve, spec):
    """Coverage certificates at levels n-1 .. 1 for a top-level loop.

    The first certificate collects the taos of T_{n-1} whose twist-arc the
    loop hits at the top; each later one is the mini-graph below the
    previous.  Every certified tao must show positive crossings for the
    pushed-down loop, otherwise the propagation result itself would be
    violated and a CoverageInconsistency is raised.
    """
    if curve.level != spec.n:
        raise ValueError("coverage certification starts at the top level")
    if not curve.is_essential():
        raise ValueError("curve is not essential")
    trigger = slot_profile(curve, spec, spec.n - 1)
    slots = {j for j, _g, v in trigger if v > 0}
    if not slots:
        return []
    mg = MiniGraph(spec, spec.n - 1, {('tao', j) for j in slots})
    certs = []
    cur = curve
    level = spec.n
    while True:
        row = level - 1
        cur = cur.apply_braid(spec.row_braid_word(row), new_level=row)
        level = row
        evidence = dict()
        prof = {j: v for j, _g, v in slot_profile(cur, spec, level)}
        for kind, j in sorted(mg.elements):
            if kind != 'tao':
                continue
            v = prof.get(j, 0)
            evidence[j] = v
            if v <= 0:
                raise CoverageInconsistency(
                    f"tao {j} at level {level} is predicted covered but the "
                    f"pushed-down loop misses its arc")
        certs.append(CoverageCertificate(level, tuple(sorted(mg.taos())),
                                         evidence, mg))
        if level == 1:
            return certs
        mg = directly_below(mg)


def classify_disk(curve, spec):
    """'Blue' for the distinguished top compressing disk class, else 'Red'."""
    if curve.level != spec.n:
        raise ValueError("classification applies to curves at the top level")
    if not curve.bounds_above_at_top():
        raise ValueError("curve does not bound a disk above the top sphere")
    blue = DualCurve.round_curve(2 * spec.m, 1, 2, spec.n)
    if curve.key() == blue.key():
        trigger = slot_profile(curve, spec, spec.n - 1)
        hit = [j for j, _g, v in trigger if v > 0]
        if hit != [1]:
            raise CoverageInconsistency(
                "blue seed does not cover exactly the leftmost tao")
        return 'Blue'
    return 'Red'


@dataclass
class BlueDescentReport:
    staircase: list          # (level, frontier gap, expected gap)
    staircase_ok: bool
    beta_m_ok: bool          # rightmost arc untouched through the lower block
    disjoint_ok: bool        # final intersection with the bottom blue curve
    enclosed: tuple

    @property
    def all_ok(self):
        return self.staircase_ok and self.beta_m_ok and self.disjoint_ok


def blue_descent_check(spec):
    """Push the top blue curve to P_1 and check the weak-pair assertions."""
    bad = spec.validate_family()
    if bad:
        raise ValueError("spec is not in the family: " + "; ".join(bad))
    n, m = spec.n, spec.m
    c = DualCurve.round_curve(2 * m, 1, 2, n)
    stair = []
    stair_ok = True
    beta_ok = True
    for level in range(n - 1, 0, -1):
        c = c.apply_braid(spec.row_braid_word(level), new_level=level)
        counts = c.diagram.counts
        frontier = max(g for g in range(2 * m + 1) if counts[g] > 0)
        expected = 2 + (n - level) if spec.is_upper(level) else None
        stair.append((level, frontier, expected))
        if expected is not None and frontier != expected:
            stair_ok = False
        if not spec.is_upper(level) and counts[2 * m - 1] != 0:
            beta_ok = False
    disjoint = c.diagram.intersect_round(2 * m - 1, 2 * m) == 0
    return BlueDescentReport(stair, stair_ok, beta_ok, disjoint,
                             tuple(sorted(c.enclosed_punctures())))

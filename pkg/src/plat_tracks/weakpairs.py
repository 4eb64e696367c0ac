"""Bounded enumeration of compressing-disk boundaries and keenness check.

Candidates below P_1 are round curves over runs of bottom cap pairs moved
by short words in the tangle-preserving braids (half twists about each cap
pair and cap-pair swaps); candidates above arise the same way at the top
sphere and ride the descent projection down to P_1.  The intersection
matrix is exact; keenness-at-depth asserts the blue pair is the unique
zero entry, everything else being even and at least 2.
"""

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .covering import classify_disk
from .curves import sphere_equal_to_round
from .curves import DualCurve
from .diagram import Diagram


def bottom_seed_runs(m):
    """Cap-pair runs whose round curves bound disks on a cap side."""
    runs = []
    for a in range(1, m + 1):
        for b in range(a, m + 1):
            if (a, b) == (1, m):
                continue    # encloses every puncture: inessential
            runs.append((2 * a - 1, 2 * b))
    return runs


def stabilizer_generators(m):
    """Generators of the cap-tangle stabilizer, as named braid words."""
    gens = []
    for j in range(1, m + 1):
        gens.append((f"twist{j}", ((2 * j - 1, 1),)))
    for j in range(1, m):
        k = 2 * j
        gens.append((f"swap{j}", ((k, 1), (k - 1, 1), (k + 1, 1), (k, 1))))
    out = []
    for name, word in gens:
        inv = tuple((kk, -ss) for kk, ss in reversed(word))
        out.append((name, word))
        out.append((name + "'", inv))
    return out


@dataclass
class Candidate:
    curve: DualCurve          # at level 1 (below) or descended to it (above)
    seed: tuple               # (a, b) puncture run of the round seed
    word_names: tuple         # stabilizer generators applied, in order
    color: str                # 'Blue' / 'Red' for above, '' for below
    top_curve: DualCurve = None   # pre-descent curve for the above side

    def label(self):
        w = ".".join(self.word_names) if self.word_names else "id"
        return f"round:{self.seed[0]}-{self.seed[1]}/{w}"


@dataclass
class CandidateSet:
    side: str
    candidates: list

    def __len__(self):
        return len(self.candidates)


def _enumerate(spec, depth, level):
    n2m = 2 * spec.m
    gens = stabilizer_generators(spec.m)
    found = {}
    frontier = [((), ())]      # (word token tuple, gen name tuple)
    words = [((), ())]
    for _ in range(depth):
        nxt = []
        for word, names in frontier:
            for gname, gword in gens:
                nxt.append((word + gword, names + (gname,)))
        words.extend(nxt)
        frontier = nxt
    out = []
    for a, b in bottom_seed_runs(spec.m):
        seedc = DualCurve.round_curve(n2m, a, b, level)
        for word, names in words:
            c = seedc.apply_braid(word)
            if not c.bounds_below():
                raise AssertionError("stabilizer image lost the bounding "
                                     "property (convention bug)")
            key = c.key()
            if key in found:
                continue
            found[key] = True
            out.append(Candidate(c, (a, b), names, ''))
    out.sort(key=lambda cand: cand.curve.key())
    return out


def enumerate_below(spec, depth):
    """Dedup'd bounded stabilizer orbit of bounding curves below P_1."""
    return CandidateSet('below', _enumerate(spec, depth, 1))


def enumerate_above_at_p1(spec, depth):
    """Same at the top sphere, carried down to P_1 by the plat projection."""
    cands = _enumerate(spec, depth, spec.n)
    descent = spec.full_descent_word(spec.n, 1)
    out = []
    for cand in cands:
        color = classify_disk(cand.curve, spec)
        moved = cand.curve.apply_braid(descent, new_level=1)
        out.append(Candidate(moved, cand.seed, cand.word_names, color,
                             top_curve=cand.curve))
    return CandidateSet('above', out)


def _matrix_row(args):
    above_diag, below_data = args
    row = []
    d = Diagram(*above_diag)
    for inv_word, (a, b) in below_data:
        row.append(d.apply_word(inv_word).intersect_round(a, b))
    return row


def intersection_matrix(above, below, jobs=1):
    """Exact pairwise geometric intersection numbers."""
    below_data = []
    for cand in below.candidates:
        inv = tuple((k, -s) for k, s in reversed(cand.curve.braid))
        below_data.append((inv, cand.seed))
    tasks = [((c.curve.diagram.n, c.curve.diagram.counts,
               c.curve.diagram.up, c.curve.diagram.dn), below_data)
             for c in above.candidates]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_matrix_row, tasks, chunksize=4))
    return [_matrix_row(t) for t in tasks]


@dataclass
class WeakPairReport:
    spec: object
    depth: int
    above: CandidateSet
    below: CandidateSet
    matrix: list
    zero_pairs: list
    flags: dict
    zero_pair_enclosed: list

    @property
    def keen(self):
        return all(self.flags.values())

    def to_json(self):
        data = {
            "instance": json.loads(self.spec.to_json()),
            "depth": self.depth,
            "above_count": len(self.above),
            "below_count": len(self.below),
            "above": [{"seed": list(c.seed), "word": list(c.word_names),
                       "color": c.color} for c in self.above.candidates],
            "below": [{"seed": list(c.seed), "word": list(c.word_names)}
                      for c in self.below.candidates],
            "matrix": [[str(v) for v in row] for row in self.matrix],
            "zero_pairs": [list(p) for p in self.zero_pairs],
            "zero_pair_enclosed": [sorted(s) for s in self.zero_pair_enclosed],
            "flags": dict(sorted(self.flags.items())),
            "keen_at_depth": self.keen,
        }
        return json.dumps(data, indent=1, sort_keys=False)


def verify_keen(spec, depth, jobs=1, family_required=True):
    """Search for weak reducing pairs and check keenness at this depth."""
    violations = spec.validate_family()
    if violations and family_required:
        raise ValueError("spec is not in the family: " + "; ".join(violations))
    above = enumerate_above_at_p1(spec, depth)
    below = enumerate_below(spec, depth)
    matrix = intersection_matrix(above, below, jobs=jobs)
    zero_pairs = [(i, j) for i, row in enumerate(matrix)
                  for j, v in enumerate(row) if v == 0]
    n2m = 2 * spec.m
    bprime_key = Diagram.round_curve(n2m, n2m - 1, n2m).key()
    # Distinct disk classes can be one curve on the bridge sphere, so the
    # zero entries are grouped by sphere class: a zero pair is the blue
    # pair iff its top member is the blue curve and its bottom member the
    # bottom blue curve, up to sphere isotopy.
    all_blue = bool(zero_pairs)
    for i, j in zero_pairs:
        ca = above.candidates[i]
        cb = below.candidates[j]
        if not sphere_equal_to_round(ca.top_curve, 1, 2):
            all_blue = False
        if not sphere_equal_to_round(cb.curve, n2m - 1, n2m):
            all_blue = False
    flags = {}
    flags['exactly_one_zero_pair'] = all_blue       # one sphere-class pair
    flags['zero_pair_is_blue'] = all_blue
    audit_ok = False
    enclosed = []
    if zero_pairs:
        # Audit the canonical representatives when present, else the first.
        pick = zero_pairs[0]
        for i, j in zero_pairs:
            if (above.candidates[i].color == 'Blue'
                    and below.candidates[j].curve.key() == bprime_key):
                pick = (i, j)
                break
        i, j = pick
        ea = above.candidates[i].curve.enclosed_punctures()
        eb = below.candidates[j].curve.enclosed_punctures()
        enclosed = [ea, eb]
        audit_ok = (len(ea) == 2 and eb == frozenset({n2m - 1, n2m}))
    flags['twice_punctured_audit'] = audit_ok
    others_ok = True
    for i, row in enumerate(matrix):
        for j, v in enumerate(row):
            if (i, j) in zero_pairs:
                continue
            if v % 2 or v < 2:
                others_ok = False
    flags['others_even_and_at_least_two'] = others_ok
    return WeakPairReport(spec, depth, above, below, matrix,
                          zero_pairs, flags, enclosed)

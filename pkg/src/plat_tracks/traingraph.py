"""Level train graphs (taos, eyelets, connectors) and the mini-graph lattice.

The train graph T_i of a family plat sits on bridge sphere P_i: one tao
around each active twist pair of row i (right-handed iff the twist above
is positive), connectors between adjacent taos, and an eyelet chained
toward the nearest tao for every leftover puncture.  The complement of a
valid level graph is 2m once-punctured disks plus one unpunctured disk,
which faces() computes from an exact embedded drawing.

Mini-graphs are closure-closed subgraphs; directly_below transports them
one level down by puncture overlap, the combinatorial shadow of the
vertical projection of taos and eyelets.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

from .planarmap import PlanarMap


@dataclass(frozen=True)
class Tao:
    level: int
    slot: int
    pair: tuple
    handedness: str          # 'L' or 'R'


@dataclass(frozen=True)
class Eyelet:
    level: int
    puncture: int
    chain_pos: int           # 1 = attached to the tao
    side: str                # 'left' or 'right' chain
    variant: str             # 'plain', or 'gold-left'/'gold-right' (Fig. 8)


@dataclass(frozen=True)
class Connector:
    level: int
    slots: tuple             # (j, j+1)
    variant: str             # handedness pair, e.g. 'LR'


class TrainGraph:
    def __init__(self, spec, level, taos, eyelets, connectors):
        self.spec = spec
        self.level = level
        self.taos = taos
        self.eyelets = eyelets
        self.connectors = connectors

    @property
    def m(self):
        return self.spec.m

    def tao_by_slot(self):
        return {t.slot: t for t in self.taos}

    def eyelet_by_puncture(self):
        return {e.puncture: e for e in self.eyelets}

    def elements(self):
        out = {('tao', t.slot) for t in self.taos}
        out |= {('eye', e.puncture) for e in self.eyelets}
        out |= {('conn', c.slots[0]) for c in self.connectors}
        return frozenset(out)

    def full_minigraph(self):
        return MiniGraph(self.spec, self.level, self.elements())


def build_train_graph(spec, level):
    """The level train graph; requires a family-valid spec."""
    if not (1 <= level <= spec.n - 1):
        raise ValueError(f"level {level} out of range 1..{spec.n-1}")
    bad = spec.validate_family()
    if bad:
        raise ValueError("spec is not in the family: " + "; ".join(bad))
    taos = []
    for j, pair, active in spec.active_slots(level):
        if not active:
            continue
        a = spec.twist(level, j)
        taos.append(Tao(level, j, pair, 'R' if a > 0 else 'L'))
    hands = {t.slot: t.handedness for t in taos}
    connectors = [Connector(level, (t1.slot, t2.slot),
                            hands[t1.slot] + hands[t2.slot])
                  for t1, t2 in zip(taos, taos[1:])]
    covered = set()
    for t in taos:
        covered.update(t.pair)
    gold = 'gold-left' if spec.twist(spec.n - 1, spec.m - 1) < 0 else 'gold-right'
    eyelets = []
    left_most = min(covered)
    right_most = max(covered)
    for q in range(1, 2 * spec.m + 1):
        if q in covered:
            continue
        if q < left_most:
            eyelets.append(Eyelet(level, q, left_most - q, 'left', 'plain'))
        else:
            variant = 'plain'
            if not spec.is_upper(level) and q >= right_most + 2:
                variant = gold
            eyelets.append(Eyelet(level, q, q - right_most, 'right', variant))
    return TrainGraph(spec, level, taos, eyelets, connectors)


# -- embedded drawing and faces ------------------------------------------------

def _circle_dirs(count):
    ds = []
    half = count // 2
    for i in range(half):
        t = Fraction(round(math.tan(math.pi * i / (2 * half)) * 4096), 4096)
        den = 1 + t * t
        ds.append(((1 - t * t) / den, 2 * t / den))
    return ds + [(-x, -y) for x, y in ds]


_DIRS16 = _circle_dirs(16)
_TAO_R = Fraction(4, 5)
_EYE_R = Fraction(9, 50)


def _ring(center, radius, dirs=_DIRS16):
    cx, cy = Fraction(center[0]), Fraction(center[1])
    return [(cx + radius * dx, cy + radius * dy) for dx, dy in dirs]


def _arc(ring, i, j):
    """Polyline along the ring from node i counterclockwise to node j.

    Equal endpoints give the full loop.
    """
    n = len(ring)
    out = [ring[i % n]]
    k = i
    while True:
        k += 1
        out.append(ring[k % n])
        if k % n == j % n:
            return out


def graph_map(g):
    """Embedded planar map of a train graph, plus its puncture positions."""
    pm = PlanarMap()
    spec = g.spec
    punctures = [(Fraction(q), Fraction(0)) for q in range(1, 2 * spec.m + 1)]

    circle_nodes = {}      # slot -> {ring index: vertex id}
    rings = {}
    for t in g.taos:
        c = (Fraction(2 * t.pair[0] + 1, 2), Fraction(0))
        ring = _ring(c, _TAO_R)
        rings[t.slot] = ring
        marked = {4: pm.add_vertex(ring[4]), 12: pm.add_vertex(ring[12])}
        circle_nodes[t.slot] = marked

    def mark(slot, idx):
        nodes = circle_nodes[slot]
        if idx not in nodes:
            nodes[idx] = pm.add_vertex(rings[slot][idx])
        return nodes[idx]

    conn_attach = {'L': (2, 6), 'R': (14, 10)}   # (right-side idx, left-side idx)
    for c in g.connectors:
        j1, j2 = c.slots
        i1 = conn_attach[c.variant[0]][0]
        i2 = conn_attach[c.variant[1]][1]
        mark(j1, i1)
        mark(j2, i2)

    loops = {}
    for e in sorted(g.eyelets, key=lambda e: e.chain_pos):
        ring = _ring((Fraction(e.puncture), Fraction(0)), _EYE_R)
        jidx = 0 if e.side == 'left' else 8      # junction faces the tao
        loops[e.puncture] = (ring, {jidx: pm.add_vertex(ring[jidx])})

    # Mark every stem attachment before any arcs are emitted.
    tao_left = {t.pair[0]: t for t in g.taos}
    tao_right = {t.pair[1]: t for t in g.taos}
    for e in g.eyelets:
        if e.chain_pos == 1:
            if e.side == 'left':
                mark(tao_left[e.puncture + 1].slot, 8)
            else:
                mark(tao_right[e.puncture - 1].slot, 0)
        else:
            prev_q = e.puncture + (1 if e.side == 'left' else -1)
            ring, nodes = loops[prev_q]
            far = 8 if e.side == 'left' else 0   # previous loop's facing side
            if far not in nodes:
                nodes[far] = pm.add_vertex(ring[far])

    # Circle arcs between consecutive marked ring nodes.
    for slot, nodes in circle_nodes.items():
        idxs = sorted(nodes)
        ring = rings[slot]
        for a, b in zip(idxs, idxs[1:] + [idxs[0] + 16]):
            pm.add_edge(nodes[a % 16], nodes[b % 16], _arc(ring, a, b % 16))

    for q, (ring, nodes) in loops.items():
        idxs = sorted(nodes)
        if len(idxs) == 1:
            i = idxs[0]
            pm.add_edge(nodes[i], nodes[i], _arc(ring, i, (i + 16)) )
        else:
            a, b = idxs
            pm.add_edge(nodes[a], nodes[b], _arc(ring, a, b))
            pm.add_edge(nodes[b], nodes[a], _arc(ring, b, a))

    # Tao arcs.
    for t in g.taos:
        cx = Fraction(2 * t.pair[0] + 1, 2)
        w = Fraction(7, 20) if t.handedness == 'R' else -Fraction(7, 20)
        top, bot = circle_nodes[t.slot][4], circle_nodes[t.slot][12]
        poly = [pm.points[top], (cx + w, Fraction(3, 10)),
                (cx - w, -Fraction(3, 10)), pm.points[bot]]
        pm.add_edge(top, bot, poly)

    # Connectors.
    for c in g.connectors:
        j1, j2 = c.slots
        i1 = conn_attach[c.variant[0]][0]
        i2 = conn_attach[c.variant[1]][1]
        u, v = circle_nodes[j1][i1], circle_nodes[j2][i2]
        pm.add_edge(u, v, [pm.points[u], pm.points[v]])

    # Eyelet stems.
    for e in g.eyelets:
        ring, nodes = loops[e.puncture]
        jidx = 0 if e.side == 'left' else 8
        u = nodes[jidx]
        if e.chain_pos == 1:
            if e.side == 'left':
                v = circle_nodes[tao_left[e.puncture + 1].slot][8]
            else:
                v = circle_nodes[tao_right[e.puncture - 1].slot][0]
        else:
            prev_q = e.puncture + (1 if e.side == 'left' else -1)
            pring, pnodes = loops[prev_q]
            v = pnodes[8 if e.side == 'left' else 0]
        pm.add_edge(u, v, [pm.points[u], pm.points[v]])

    euler = len(pm.points) - len(pm.edges) + len(pm.faces())
    if euler != 2:
        raise AssertionError(f"drawing is not an embedded sphere map "
                             f"(Euler characteristic {euler})")
    return pm, punctures


def faces(g):
    """Complementary faces of the embedded graph with puncture counts."""
    pm, punctures = graph_map(g)
    face_list, located = pm.locate_faces(punctures)
    census = [0] * len(face_list)
    for fi in located:
        if fi is None:
            raise AssertionError("puncture not inside any face")
        census[fi] += 1
    return [(face, census[i]) for i, face in enumerate(face_list)]


def face_census(g):
    """Sorted puncture counts over all complementary faces."""
    return sorted(c for _f, c in faces(g))


# -- mini-graphs and the below lattice -------------------------------------------


class MiniGraph:
    """Closure-closed subgraph of a level train graph."""

    def __init__(self, spec, level, elements):
        self.spec = spec
        self.level = level
        self.elements = frozenset(elements)
        self._validate()

    def _validate(self):
        g = build_train_graph(self.spec, self.level)
        known = g.elements()
        if not self.elements <= known:
            raise ValueError("elements not in the level train graph")
        taos = {j for kind, j in self.elements if kind == 'tao'}
        for kind, j in self.elements:
            if kind == 'conn':
                if j not in taos or (j + 1) not in taos:
                    raise ValueError("connector without both taos")
        chain = {e.puncture: e for e in g.eyelets}
        for kind, q in self.elements:
            if kind != 'eye':
                continue
            e = chain[q]
            step = 1 if e.side == 'left' else -1
            for pos in range(1, e.chain_pos):
                q2 = q + step * (e.chain_pos - pos)
                if ('eye', q2) not in self.elements:
                    raise ValueError("eyelet without intervening eyelets")
            nearest = q + step * e.chain_pos
            near_tao = next((t for t in g.taos if nearest in t.pair), None)
            if near_tao is None or ('tao', near_tao.slot) not in self.elements:
                raise ValueError("eyelet without its nearest tao")

    def __eq__(self, other):
        return (isinstance(other, MiniGraph) and self.level == other.level
                and self.elements == other.elements)

    def __hash__(self):
        return hash((self.level, self.elements))

    def __repr__(self):
        return f"MiniGraph(level={self.level}, {sorted(self.elements)})"

    def union(self, other):
        if self.level != other.level:
            raise ValueError("union needs equal levels")
        return MiniGraph(self.spec, self.level, self.elements | other.elements)

    def issubset(self, other):
        return self.level == other.level and self.elements <= other.elements

    def taos(self):
        return {j for kind, j in self.elements if kind == 'tao'}

    def eyelets(self):
        return {q for kind, q in self.elements if kind == 'eye'}


def tao_minigraph(spec, level, slot):
    return MiniGraph(spec, level, {('tao', slot)})


def directly_below(mg):
    """The mini-graph directly below, by vertical puncture overlap."""
    spec = mg.spec
    if mg.level < 2:
        raise ValueError("level 1 has nothing below it")
    g_here = build_train_graph(spec, mg.level)
    g_below = build_train_graph(spec, mg.level - 1)
    pair_of = {t.slot: t.pair for t in g_here.taos}
    below_taos = list(g_below.taos)
    below_eyes = {e.puncture for e in g_below.eyelets}
    n2m = 2 * spec.m

    out = set()
    for kind, j in mg.elements:
        if kind == 'tao':
            pair = set(pair_of[j])
            hit = [t.slot for t in below_taos if pair & set(t.pair)]
            out.update(('tao', s) for s in hit)
            if len(hit) == 2:
                out.add(('conn', min(hit)))
            for q in below_eyes:
                if q in pair:
                    out.add(('eye', q))
                elif q == n2m and (q - 1) in pair:
                    # Boundary case: the chain-end eyelet sits inside the
                    # projected tao disk even though the punctures differ.
                    out.add(('eye', q))
        elif kind == 'eye':
            q = j
            for t in below_taos:
                if q in t.pair:
                    out.add(('tao', t.slot))
            if q in below_eyes:
                out.add(('eye', q))
    return MiniGraph(spec, mg.level - 1, out)


def below(mg, target_level):
    if not (1 <= target_level < mg.level):
        raise ValueError("target level must be below the mini-graph's level")
    cur = mg
    while cur.level > target_level:
        cur = directly_below(cur)
    return cur


def classify_typed(mg):
    """Exact type of a typed mini-graph, else a decomposition.

    Returns ('type', k) for a Type-k mini-graph, or ('union', pieces,
    connectors) where pieces are (tao slot, chain length, complete flag).
    """
    g = build_train_graph(mg.spec, mg.level)
    chain = {e.puncture: e for e in g.eyelets}
    taos = sorted(mg.taos())
    conns = sorted(j for kind, j in mg.elements if kind == 'conn')
    by_tao = {}
    for q in mg.eyelets():
        e = chain[q]
        step = 1 if e.side == 'left' else -1
        nearest = q + step * e.chain_pos
        t = next(t for t in g.taos if nearest in t.pair)
        rec = by_tao.setdefault((t.slot, e.side), [])
        rec.append(e)
    pieces = []
    for (slot, side), eyes in sorted(by_tao.items()):
        k = len(eyes)
        deepest = max(e.chain_pos for e in eyes)
        full_chain = [e for e in g.eyelets
                      if e.side == side and _chain_tao(g, e) == slot]
        complete = deepest == max((e.chain_pos for e in full_chain), default=0)
        pieces.append((slot, k, complete))
    bare = [(slot, 0, True) for slot in taos
            if not any(p[0] == slot for p in pieces)]
    pieces.extend(bare)
    pieces.sort()
    if len(taos) == 1 and not conns and len(pieces) == 1:
        slot, k, complete = pieces[0]
        if k == 0:
            return ('type', 0)
        if complete and 1 <= k <= 3:
            return ('type', k)
    return ('union', tuple(pieces), tuple(conns))


def _chain_tao(g, eyelet):
    step = 1 if eyelet.side == 'left' else -1
    nearest = eyelet.puncture + step * eyelet.chain_pos
    return next(t.slot for t in g.taos if nearest in t.pair)

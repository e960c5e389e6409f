"""Knot and link diagrams from planar diagram codes, braid words, and
Dowker-Thistlethwaite codes.

The central type is Diagram: a list of crossings, each a counterclockwise
4-tuple of edge labels anchored at the incoming under-strand, together with
the slot (1 or 3) where the over-strand enters.  Everything downstream --
orientations, components, Wirtinger arcs, crossing signs, checkerboard
faces -- is derived from that data.

Edge labels are the short segments between consecutive crossing passes (so
every label occurs exactly twice).  Wirtinger arcs are the longer segments
between underpasses, obtained by merging edges across overpasses.
"""

import json
import re

from .words import FreeWord, Presentation

__all__ = [
    "PDCode",
    "Diagram",
    "parse_pd",
    "parse_dt",
    "parse_braid",
    "braid_closure_diagram",
    "braid_with_axis",
    "wirtinger_presentation",
    "goeritz_matrix",
    "h1_double_branched_cover",
]


class PDCode:
    """A planar diagram code: 4-tuples (a, b, c, d) of edge labels, read
    counterclockwise starting at the incoming under-strand edge a."""

    __slots__ = ("tuples",)

    def __init__(self, tuples):
        self.tuples = [tuple(int(x) for x in t) for t in tuples]
        for t in self.tuples:
            if len(t) != 4:
                raise ValueError("each crossing needs exactly 4 edge labels")
        counts = {}
        for t in self.tuples:
            for e in t:
                counts[e] = counts.get(e, 0) + 1
        bad = sorted(e for e, c in counts.items() if c != 2)
        if bad:
            raise ValueError("edge labels must occur exactly twice; bad: %s" % bad)

    def __len__(self):
        return len(self.tuples)

    def to_diagram(self):
        return _diagram_from_pd(self)

    def __repr__(self):
        return "PDCode(%s)" % " ".join("X[%d,%d,%d,%d]" % t for t in self.tuples)


def parse_pd(text):
    """Parse a planar diagram code.

    Accepts either JSON-style nested lists ``[[1,4,2,5], ...]`` or crossing
    tokens ``X[1,4,2,5] X[3,6,4,1] ...`` separated by whitespace or commas.
    """
    import re

    text = text.strip()
    if not text:
        raise ValueError("empty PD code")
    if text.startswith("[["):
        return PDCode(json.loads(text))
    tuples = []
    for m in re.finditer(r"[\[\(]([^\]\)]*)[\]\)]", text):
        parts = [p for p in m.group(1).replace(",", " ").split() if p]
        tuples.append([int(p) for p in parts])
    if not tuples:
        raise ValueError("no crossings found in PD text")
    return PDCode(tuples)


class Diagram:
    """An oriented diagram with resolved over-strand directions.

    Parameters
    ----------
    tuples : list of 4-tuples of int edge ids, counterclockwise from the
        incoming under-strand.
    over_slots : list of 1 or 3, the slot where the over-strand enters.
    """

    def __init__(self, tuples, over_slots):
        if len(tuples) != len(over_slots):
            raise ValueError("need one over-slot per crossing")
        self.tuples = [tuple(t) for t in tuples]
        self.over_slots = list(over_slots)
        for s in self.over_slots:
            if s not in (1, 3):
                raise ValueError("over-slot must be 1 or 3")
        self._relabel_edges()
        self._build_succ()
        self._build_components()
        self._build_arcs()

    # -- construction ----------------------------------------------------------

    def _relabel_edges(self):
        labels = sorted({e for t in self.tuples for e in t})
        lut = {e: i for i, e in enumerate(labels)}
        self.tuples = [tuple(lut[e] for e in t) for t in self.tuples]
        self.num_edges = len(labels)

    def _build_succ(self):
        succ = {}
        incoming = {}
        outgoing = {}
        for ci, (t, os) in enumerate(zip(self.tuples, self.over_slots)):
            a, _, c, _ = t
            o_in, o_out = t[os], t[(os + 2) % 4]
            for e_in in (a, o_in):
                incoming[e_in] = incoming.get(e_in, 0) + 1
            for e_out in (c, o_out):
                outgoing[e_out] = outgoing.get(e_out, 0) + 1
            succ[a] = c
            succ[o_in] = o_out
        for e in range(self.num_edges):
            if incoming.get(e, 0) != 1 or outgoing.get(e, 0) != 1:
                raise ValueError("edge %d has inconsistent orientation" % e)
        # succ maps each edge to the next edge along the strand; as built it
        # maps "incoming edge at a crossing" to "outgoing edge", which is the
        # same thing read across each crossing.
        self.succ = succ

    def _build_components(self):
        comp = {}
        comps = []
        for e in range(self.num_edges):
            if e in comp:
                continue
            cyc = []
            cur = e
            while cur not in comp:
                comp[cur] = len(comps)
                cyc.append(cur)
                cur = self.succ[cur]
            comps.append(cyc)
        self.component_of_edge = comp
        self.components = comps

    def _build_arcs(self):
        parent = list(range(self.num_edges))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for t, os in zip(self.tuples, self.over_slots):
            a, b = find(t[os]), find(t[(os + 2) % 4])
            if a != b:
                parent[a] = b
        reps = sorted({find(e) for e in range(self.num_edges)})
        arc_index = {r: i for i, r in enumerate(reps)}
        self.arc_of_edge = [arc_index[find(e)] for e in range(self.num_edges)]
        self.num_arcs = len(reps)
        self.component_of_arc = [None] * self.num_arcs
        for e in range(self.num_edges):
            self.component_of_arc[self.arc_of_edge[e]] = self.component_of_edge[e]

    # -- queries ----------------------------------------------------------

    @property
    def num_crossings(self):
        return len(self.tuples)

    @property
    def num_components(self):
        return len(self.components)

    def crossing_sign(self, i):
        """+1 when the over-strand enters at slot 1 (counterclockwise after
        the incoming under-strand), -1 when it enters at slot 3."""
        return 1 if self.over_slots[i] == 1 else -1

    def writhe(self):
        return sum(self.crossing_sign(i) for i in range(self.num_crossings))

    def is_connected(self):
        if not self.tuples:
            return False
        seen = {0}
        stack = [0]
        edge_to_crossings = {}
        for ci, t in enumerate(self.tuples):
            for e in t:
                edge_to_crossings.setdefault(e, []).append(ci)
        while stack:
            ci = stack.pop()
            for e in self.tuples[ci]:
                for cj in edge_to_crossings[e]:
                    if cj not in seen:
                        seen.add(cj)
                        stack.append(cj)
        return len(seen) == len(self.tuples)

    def faces(self):
        """Faces of the underlying 4-valent planar graph as corner orbits.

        A corner (c, s) sits between slots s and s+1 of crossing c.  Returns
        (faces, face_of_corner) where faces is a list of corner lists.
        """
        position = {}
        for ci, t in enumerate(self.tuples):
            for s, e in enumerate(t):
                position.setdefault(e, []).append((ci, s))

        def other_end(ci, s):
            e = self.tuples[ci][s]
            ends = position[e]
            return ends[1] if ends[0] == (ci, s) else ends[0]

        face_of = {}
        faces = []
        for ci in range(len(self.tuples)):
            for s in range(4):
                if (ci, s) in face_of:
                    continue
                orbit = []
                cur = (ci, s)
                while cur not in face_of:
                    face_of[cur] = len(faces)
                    orbit.append(cur)
                    # cross the corner's counterclockwise boundary edge; the
                    # face continues in the corner after the arrival slot
                    c2, s2 = other_end(cur[0], (cur[1] + 1) % 4)
                    cur = (c2, s2)
                faces.append(orbit)
        v, e = self.num_crossings, self.num_edges
        if v - e + len(faces) != 2:
            raise AssertionError("face count violates Euler's formula")
        return faces, face_of


def _diagram_from_pd(pd):
    """Resolve over-strand directions of a PD code and build a Diagram.

    Under-strand slots have known roles (slot 0 incoming, slot 2 outgoing);
    those roles propagate to the over-pairs through the rule that every edge
    is incoming at exactly one of its two appearances.  Crossings that stay
    ambiguous (possible only for over-strand cycles) fall back to the table
    convention that the over-strand runs from slot 1 to slot 3 when the
    labels read d = b + 1, or 3 to 1 when b = d + 1, with wraparound.
    """
    n = len(pd.tuples)
    appearances = {}
    for ci, t in enumerate(pd.tuples):
        for s, e in enumerate(t):
            appearances.setdefault(e, []).append((ci, s))
    role = {}  # (crossing, slot) -> "in" | "out"
    for ci, t in enumerate(pd.tuples):
        role[(ci, 0)] = "in"
        role[(ci, 2)] = "out"
    over_slot = [None] * n

    def assign(ci, slot_in):
        over_slot[ci] = slot_in
        role[(ci, slot_in)] = "in"
        role[(ci, (slot_in + 2) % 4)] = "out"

    changed = True
    while changed:
        changed = False
        for ci, t in enumerate(pd.tuples):
            if over_slot[ci] is not None:
                continue
            for slot in (1, 3):
                e = t[slot]
                ends = appearances[e]
                other = ends[1] if ends[0] == (ci, slot) else ends[0]
                if other == (ci, slot):
                    continue
                r = role.get(other)
                if r is not None:
                    assign(ci, slot if r == "out" else (slot + 2) % 4)
                    changed = True
                    break
        if not changed:
            # numbering fallback for untouched over-cycles
            labels = [e for t in pd.tuples for e in t]
            lo, hi = min(labels), max(labels)
            for ci, t in enumerate(pd.tuples):
                if over_slot[ci] is not None:
                    continue
                b, d = t[1], t[3]
                if d == b + 1 or (b == hi and d == lo):
                    assign(ci, 1)
                elif b == d + 1 or (d == hi and b == lo):
                    assign(ci, 3)
                else:
                    raise ValueError(
                        "cannot infer over-strand direction at crossing %d" % ci
                    )
                changed = True
                break
    return Diagram(pd.tuples, over_slot)


def parse_braid(text):
    """Parse a braid word: signed generator indices, whitespace or comma
    separated (e.g. "1 1 1" for a trefoil, "1 -2 1 -2" for a figure eight).
    Letter forms like "s1 s-2" or "σ1^-1 σ2" and JSON lists work too."""
    text = text.strip()
    if text.startswith("["):
        word = json.loads(text)
    else:
        word = []
        for tok in text.replace(",", " ").split():
            m = re.fullmatch(r"[sSσ]?(-?\d+)(?:\^(-?\d+))?", tok)
            if not m:
                raise ValueError("bad braid letter %r" % tok)
            idx = int(m.group(1))
            power = int(m.group(2)) if m.group(2) else 1
            if idx == 0 or power == 0:
                raise ValueError("braid letters must be nonzero integers")
            word.extend([idx if power > 0 else -idx] * abs(power))
    if not all(isinstance(x, int) and x != 0 for x in word):
        raise ValueError("braid letters must be nonzero integers")
    return word


def braid_closure_diagram(word, strands=None):
    """Diagram of the closure of a braid word, plus construction data.

    Returns (diagram, info) where info carries the arcs of the top edges in
    left-to-right order ("axis word" material) under key ``top_arcs``.
    """
    if strands is None:
        if not word:
            raise ValueError("empty braid word needs an explicit strand count")
        strands = max(abs(x) for x in word) + 1
    top = [("init", i) for i in range(strands)]
    # run with placeholder labels, then close up
    cur = list(top)
    tuples, over_slots, cur, _ = _braid_rows_generic(word, strands, cur, 0)
    for i in range(strands):
        if cur[i] == ("init", i):
            raise ValueError(
                "strand %d never crosses; reduce the strand count" % (i + 1)
            )
    subst = {("init", i): cur[i] for i in range(strands)}
    tuples = [tuple(subst.get(e, e) for e in t) for t in tuples]
    diagram = Diagram(tuples, over_slots)
    # report the arc of each (closed) top edge for axis words
    top_edges = [subst[("init", i)] for i in range(strands)]
    lut = _edge_relabel_map(tuples)
    info = {"top_arcs": [diagram.arc_of_edge[lut[e]] for e in top_edges]}
    return diagram, info


def _braid_rows_generic(word, strands, cur, counter):
    tuples = []
    over_slots = []
    for letter in word:
        i = abs(letter) - 1
        if i + 1 >= strands:
            raise ValueError("letter %d exceeds the strand count" % letter)
        e_l, e_r = cur[i], cur[i + 1]
        f_sw, f_se = counter, counter + 1
        counter += 2
        if letter > 0:
            tuples.append((e_r, e_l, f_sw, f_se))
            over_slots.append(1)
        else:
            tuples.append((e_l, f_sw, f_se, e_r))
            over_slots.append(3)
        cur[i], cur[i + 1] = f_sw, f_se
    return tuples, over_slots, cur, counter


def _edge_relabel_map(tuples):
    labels = sorted({e for t in tuples for e in t}, key=lambda x: (isinstance(x, tuple), x))
    return {e: i for i, e in enumerate(labels)}


def braid_with_axis(word, strands):
    """Closure of a braid together with its encircling axis circle.

    The axis is a flat circle around the parallel strands just below the
    closure tops: its upper arc passes over all strands left to right, its
    lower arc returns right to left underneath them, so the axis links every
    strand once positively.

    Returns (diagram, info) with info keys:
      knot_components: component ids of the closed braid
      axis_component: component id of the axis
      top_arcs: arcs of the strand edges above the axis, left to right
      linking: linking number of the axis with the closed braid (= strands)
    """
    if strands < 1:
        raise ValueError("need at least one strand")
    counter = 0

    def fresh():
        nonlocal counter
        counter += 1
        return counter - 1

    top = [fresh() for _ in range(strands)]       # above the axis
    mid = [fresh() for _ in range(strands)]       # between the axis arcs
    below = [fresh() for _ in range(strands)]     # below the axis
    a = [fresh() for _ in range(strands + 1)]     # upper axis edges, L to R
    r = [fresh() for _ in range(strands + 1)]     # lower axis edges
    # the ellipse closes on both ends without further crossings
    r[strands] = a[strands]
    tuples = []
    over_slots = []
    for i in range(strands):
        # upper arc: axis passes over strand i
        tuples.append((top[i], a[i], mid[i], a[i + 1]))
        over_slots.append(1)
    for i in range(strands):
        # lower arc: axis passes under strand i, running right to left
        tuples.append((r[i + 1], mid[i], r[i], below[i]))
        over_slots.append(1)
    # r[0] joins a[0] around the left end
    tuples = [tuple(a[0] if e == r[0] else e for e in t) for t in tuples]
    cur = list(below)
    braid_tuples, braid_over, cur, counter = _braid_rows_generic(
        word, strands, cur, counter
    )
    tuples.extend(braid_tuples)
    over_slots.extend(braid_over)
    # close the braid: bottom edges rejoin the tops
    subst = {}
    for i in range(strands):
        if cur[i] in top:
            raise AssertionError("axis rows guarantee a crossing per strand")
        subst[cur[i]] = top[i]
    tuples = [tuple(subst.get(e, e) for e in t) for t in tuples]
    diagram = Diagram(tuples, over_slots)
    lut = _edge_relabel_map(tuples)
    axis_comp = diagram.component_of_edge[lut[a[0]]]
    knot_comps = sorted(
        {c for c in range(diagram.num_components) if c != axis_comp}
    )
    info = {
        "knot_components": knot_comps,
        "axis_component": axis_comp,
        "top_arcs": [diagram.arc_of_edge[lut[t]] for t in top],
        "linking": strands,
    }
    return diagram, info


def parse_dt(text):
    """Parse a Dowker-Thistlethwaite code for a knot and realize it.

    The code lists, for odd positions 1, 3, ..., 2n-1 along the knot, the
    even position paired at the same crossing; a positive entry means the
    even-numbered pass goes over.  Realizability is decided by planarity of
    the crossing-gadget graph; a code with no planar realization raises
    ValueError.

    >>> d = parse_dt("4 6 2")
    >>> d.num_crossings
    3
    """
    import networkx as nx

    text = text.strip()
    if text.startswith("["):
        code = json.loads(text)
    else:
        code = [int(p) for p in text.replace(",", " ").split()]
    n = len(code)
    if n == 0:
        raise ValueError("empty DT code")
    if sorted(abs(x) for x in code) != list(range(2, 2 * n + 1, 2)):
        raise ValueError("DT entries must be the even numbers 2..2n up to sign")
    # crossing i pairs positions (2i+1, |code[i]|); position -> crossing
    crossing_at = {}
    for i, entry in enumerate(code):
        crossing_at[2 * i + 1] = i
        crossing_at[abs(entry)] = i
    # edge j runs from position j to position j % (2n) + 1
    # corners per crossing: 0 odd-in, 1 even-in, 2 odd-out, 3 even-out
    def corner_of(pos, incoming):
        c = crossing_at[pos]
        odd = pos % 2 == 1
        if incoming:
            return (c, 0 if odd else 1)
        return (c, 2 if odd else 3)

    g = nx.Graph()
    for c in range(n):
        cycle = [(c, 0), (c, 1), (c, 2), (c, 3)]
        for idx in range(4):
            g.add_edge(cycle[idx], cycle[(idx + 1) % 4])
            g.add_edge(("apex", c), cycle[idx])
    for j in range(1, 2 * n + 1):
        j_next = j % (2 * n) + 1
        g.add_edge(("edge", j), corner_of(j, incoming=False))
        g.add_edge(("edge", j), corner_of(j_next, incoming=True))
    ok, embedding = nx.check_planarity(g)
    if not ok:
        raise ValueError("DT code is not realizable as a planar diagram")
    data = embedding.get_data()
    tuples = []
    over_slots = []
    for c in range(n):
        ring = [v for v in data[("apex", c)]]
        order = [v[1] for v in ring]  # corner indices in rotation order
        # find the edge node attached to each corner
        edge_at_corner = {}
        for idx in range(4):
            nbrs = [v for v in data[(c, idx)] if isinstance(v[0], str) and v[0] == "edge"]
            if len(nbrs) != 1:
                raise AssertionError("each corner carries exactly one strand end")
            edge_at_corner[idx] = nbrs[0][1]
        # under-strand in/out corners
        odd_pos = 2 * c + 1
        entry = code[c]
        under_odd = entry > 0  # positive entry: even pass goes over
        cin = 0 if under_odd else 1
        pos = order.index(cin)
        rot = order[pos:] + order[:pos]  # cyclic, starting at the under-in
        if rot[2] != (cin + 2) % 4:
            raise AssertionError("gadget must keep strand pairs opposite")
        tuples.append(tuple(edge_at_corner[s] for s in rot))
        # the over-strand direction is known from the walk numbering
        over_in_corner = 1 if under_odd else 0
        if rot[1] == over_in_corner:
            over_slots.append(1)
        elif rot[3] == over_in_corner:
            over_slots.append(3)
        else:
            raise AssertionError("over-strand corners must sit at slots 1/3")
    return Diagram(tuples, over_slots)


def wirtinger_presentation(diagram, component_weights=None):
    """Wirtinger presentation of the diagram's group, one relator dropped.

    Generators are the arcs in a fixed order.  At a crossing with sign e,
    incoming under-arc u, outgoing under-arc v and over-arc o, the relator
    is  o^e u o^-e v^-1.  component_weights maps component id -> weight
    tuple; by default every meridian gets weight (1,).
    """
    if not diagram.is_connected():
        raise ValueError("Wirtinger presentation requires a connected diagram")
    nv = 1
    if component_weights is not None:
        nv = len(next(iter(component_weights.values())))
        for c in range(diagram.num_components):
            if c not in component_weights:
                raise ValueError("missing weight for component %d" % c)
    relators = []
    for i, (t, os) in enumerate(zip(diagram.tuples, diagram.over_slots)):
        u = diagram.arc_of_edge[t[0]]
        v = diagram.arc_of_edge[t[2]]
        o = diagram.arc_of_edge[t[os]]
        e = diagram.crossing_sign(i)
        w = FreeWord.generator(o, e)
        r = w * FreeWord.generator(u) * w.inverse() * FreeWord.generator(v, -1)
        relators.append(r)
    relators = [r for r in relators if not r.is_identity()]
    if len(relators) >= diagram.num_arcs:
        relators = relators[: diagram.num_arcs - 1]
    if component_weights is None:
        weights = [(1,)] * diagram.num_arcs
    else:
        weights = [
            tuple(component_weights[diagram.component_of_arc[a]])
            for a in range(diagram.num_arcs)
        ]
    names = ["a%d" % i for i in range(diagram.num_arcs)]
    return Presentation(diagram.num_arcs, relators, weights=weights, names=names)


def goeritz_matrix(diagram):
    """Goeritz matrix of the diagram's checkerboard coloring.

    One of the two face color classes is taken as the white regions and one
    white region is deleted.  The result presents the first homology of the
    double branched cover.
    """
    faces, face_of = diagram.faces()
    nf = len(faces)
    # 2-color faces: adjacent across each edge means opposite colors
    adj = [[] for _ in range(nf)]
    position = {}
    for ci, t in enumerate(diagram.tuples):
        for s, e in enumerate(t):
            position.setdefault(e, []).append((ci, s))
    for e, ends in position.items():
        for ci, s in ends:
            f1 = face_of[(ci, s % 4)]
            f2 = face_of[(ci, (s - 1) % 4)]
            adj[f1].append(f2)
            adj[f2].append(f1)
    color = [None] * nf
    stack = [0]
    color[0] = 0
    while stack:
        f = stack.pop()
        for g in adj[f]:
            if color[g] is None:
                color[g] = 1 - color[f]
                stack.append(g)
            elif color[g] == color[f]:
                raise AssertionError("checkerboard coloring must be proper")
    white = [f for f in range(nf) if color[f] == 0]
    white_index = {f: i for i, f in enumerate(white)}
    m = len(white)
    g = [[0] * m for _ in range(m)]
    for ci in range(diagram.num_crossings):
        corners = [face_of[(ci, s)] for s in range(4)]
        if color[corners[0]] == 0:
            pair, eta = (corners[0], corners[2]), 1
        else:
            pair, eta = (corners[1], corners[3]), -1
        u, v = white_index[pair[0]], white_index[pair[1]]
        if u == v:
            continue
        g[u][v] -= eta
        g[v][u] -= eta
    for u in range(m):
        g[u][u] = -sum(g[u][v] for v in range(m) if v != u)
    return [row[1:] for row in g[1:]]


def h1_double_branched_cover(diagram):
    """Invariant factors of H_1 of the double branched cover (1s dropped).

    >>> d, _ = braid_closure_diagram([1, 1, 1])
    >>> h1_double_branched_cover(d)
    [3]
    """
    from .matrix import smith_normal_form

    g = goeritz_matrix(diagram)
    if not g:
        return []
    factors = smith_normal_form(g)
    if any(f == 0 for f in factors):
        raise ValueError("double branched cover has infinite first homology")
    return [f for f in factors if f > 1]


if __name__ == "__main__":
    import doctest

    doctest.testmod()

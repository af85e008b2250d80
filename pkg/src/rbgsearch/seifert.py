"""Seifert matrices from diagrams.

The pipeline is Vogel's algorithm (reverse-R2 moves until the Seifert
circles form a coherent chain) followed by the generator bookkeeping of
Collins for braid-form diagrams.  The matrix describes the Seifert form of
the surface built from nested discs and twisted bands; its size is
2*genus(surface), not the minimal genus.
"""

from __future__ import annotations

from .diagram import KnotDiagram, DiagramError


def seifert_next(pd: KnotDiagram, arc):
    """Successor of an arc in the oriented (Seifert) smoothing."""
    i, p = pd.head_end(arc)
    a, b, c, d = pd.crossings[i]
    oe = pd.over_entry[i]
    over_out = d if oe == 1 else b
    if p == 0:
        return over_out
    return c


def seifert_circles(pd: KnotDiagram):
    """Seifert circles as tuples of arcs (crossingless loops included)."""
    circles = []
    seen = set()
    for a in pd.arcs:
        if a in seen:
            continue
        if not pd.arc_ends(a):
            seen.add(a)
            circles.append((a,))
            continue
        circle = [a]
        seen.add(a)
        cur = seifert_next(pd, a)
        while cur != a:
            circle.append(cur)
            seen.add(cur)
            cur = seifert_next(pd, cur)
        circles.append(tuple(circle))
    return circles


def _circle_index(circles):
    idx = {}
    for k, circ in enumerate(circles):
        for a in circ:
            idx[a] = k
    return idx


def _crossing_circles(pd, circle_of):
    """For each crossing, the circles through its two smoothed junctions.

    Returns (under-junction circle, over-junction circle): the junction
    containing the incoming under-arc, and the one containing the incoming
    over-arc.
    """
    out = []
    for i, (a, b, c, d) in enumerate(pd.crossings):
        oe = pd.over_entry[i]
        over_in = b if oe == 1 else d
        out.append((circle_of[a], circle_of[over_in]))
    return out


class _Regions:
    """Complementary regions of the Seifert circles (merged diagram faces)."""

    def __init__(self, pd: KnotDiagram):
        self.faces = pd.faces()
        self.face_of = {}
        for fi, f in enumerate(self.faces):
            for dart in f:
                self.face_of[dart] = fi
        self.parent = list(range(len(self.faces)))
        for i in range(len(pd.crossings)):
            if pd.over_entry[i] == 1:
                # smoothing joins slots (0,3) and (1,2); faces at corners
                # (0,1) and (2,3) merge through the channel
                self._union(self.face_of[(i, 1)], self.face_of[(i, 3)])
            else:
                self._union(self.face_of[(i, 2)], self.face_of[(i, 0)])

    def _find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def _union(self, x, y):
        rx, ry = self._find(x), self._find(y)
        if rx != ry:
            self.parent[rx] = ry

    def region_of_dart(self, dart):
        return self._find(self.face_of[dart])

    def sides_of_circle(self, pd, circles, k):
        """(left region, right region) of circle k, one fixed convention."""
        for a in circles[k]:
            ends = pd.arc_ends(a)
            if not ends:
                return None
            i, p = ends[0]
            # region containing the dart (i, p) lies on one fixed side of
            # the arc; the other side holds the dart one slot back
            left = self.region_of_dart((i, p))
            right = self.region_of_dart((i, (p + 3) % 4))
            if pd.tail_end(a) != (i, p):
                left, right = right, left
            return left, right
        return None


def _admissible_pairs(pd: KnotDiagram, circle_of):
    """Vogel moves: same face, different circles, coherent orientation."""
    pairs = []
    for face in pd.faces():
        forward = []
        backward = []
        for (i, p) in face:
            a = pd.crossings[i][p]
            if pd.tail_end(a) == (i, p):
                forward.append((i, p))
            else:
                backward.append((i, p))
        for group in (forward, backward):
            for x in range(len(group)):
                for y in range(x + 1, len(group)):
                    a1 = pd.crossings[group[x][0]][group[x][1]]
                    a2 = pd.crossings[group[y][0]][group[y][1]]
                    if circle_of[a1] != circle_of[a2]:
                        pairs.append((a1, a2))
    return pairs


def _reverse_r2(pd: KnotDiagram, a1, a2):
    """Push arc a1 across their shared face over arc a2 (adds 2 crossings)."""
    fresh = max(pd.arcs) + 1
    m1, a1b, m2, a2b = fresh, fresh + 1, fresh + 2, fresh + 3

    # a1 splits into a1 -> n1 -> m1 -> n2 -> a1b
    # a2 splits into a2 -> n2 -> m2 -> n1 -> a2b
    h1 = pd.head_end(a1)
    h2 = pd.head_end(a2)

    new_crossings = [list(c) for c in pd.crossings]
    new_over = list(pd.over_entry)
    new_crossings[h1[0]][h1[1]] = a1b
    new_crossings[h2[0]][h2[1]] = a2b

    # n1: a1-strand passes over, tuple ccw from under-in
    n1 = (m2, a1, a2b, m1)
    # n2: a1-strand passes over entering at slot 3
    n2 = (a2, a1b, m2, m1)
    new_crossings.append(n1)
    new_over.append(1)
    new_crossings.append(n2)
    new_over.append(3)

    comps = []
    for comp in pd.components:
        out = []
        for x in comp:
            out.append(x)
            if x == a1:
                out.extend([m1, a1b])
            if x == a2:
                out.extend([m2, a2b])
        comps.append(tuple(out))
    return KnotDiagram([tuple(c) for c in new_crossings], tuple(comps),
                       tuple(new_over))


def to_chain_form(pd: KnotDiagram, max_moves=None):
    """Apply Vogel moves until the Seifert circles form a coherent chain.

    Returns (diagram, circles ordered along the chain).
    """
    if max_moves is None:
        max_moves = 4 * (len(pd.crossings) + 4) ** 2

    moves = 0
    while True:
        circles = seifert_circles(pd)
        chain = _chain_order(pd, circles)
        if chain is not None:
            return pd, [circles[k] for k in chain]
        circle_of = _circle_index(circles)
        pairs = _admissible_pairs(pd, circle_of)
        if not pairs:
            raise DiagramError("no admissible Vogel move but not in chain form")
        a1, a2 = pairs[0]
        pd = _reverse_r2(pd, a1, a2)
        moves += 1
        if moves > max_moves:
            raise DiagramError("Vogel reduction exceeded %d moves" % max_moves)


def _chain_order(pd, circles):
    """Order circle indices as a coherent chain, or None.

    The circles form a chain when the directed graph on complement regions
    (one edge per circle, from its right region to its left region) is a
    simple path covering all circles.
    """
    if len(circles) == 1:
        return [0]
    regions = _Regions(pd)
    edges = []
    for k in range(len(circles)):
        sides = regions.sides_of_circle(pd, circles, k)
        if sides is None:
            return None  # crossingless circle with others present
        left, right = sides
        if left == right:
            return None
        edges.append((right, left))
    tails = [t for t, h in edges]
    heads = [h for t, h in edges]
    if len(set(tails)) != len(tails) or len(set(heads)) != len(heads):
        return None
    start_candidates = [t for t in tails if t not in heads]
    if len(start_candidates) != 1:
        return None
    order = []
    cur = start_candidates[0]
    tail_to_idx = {t: k for k, (t, h) in enumerate(edges)}
    while cur in tail_to_idx:
        k = tail_to_idx[cur]
        order.append(k)
        cur = edges[k][1]
    if len(order) != len(circles):
        return None
    return order


def _annulus_data(pd, chain):
    """Per adjacent circle pair, the crossings in consistent linear order.

    Returns a list (one entry per annulus i, between chain[i] and
    chain[i+1]) of lists of (crossing index, sign), plus for each circle the
    linearized event sequence used for interleaving.
    """
    circle_of = {}
    for k, circ in enumerate(chain):
        for a in circ:
            circle_of[a] = k

    def walk_events(k, start_arc):
        """Crossing events met walking circle k from start_arc."""
        circ = chain[k]
        n = len(circ)
        j = circ.index(start_arc)
        events = []
        for t in range(n):
            a = circ[(j + t) % n]
            i, p = pd.head_end(a)
            events.append(i)
        return events

    # cut circle 0 anywhere; then chain the cuts: on circle k+1, cut just
    # after the last annulus-k crossing, so both circles list annulus-k
    # crossings in the same linear order
    cuts = [chain[0][0]]
    annuli = []
    circle_events = []
    for k in range(len(chain)):
        events = walk_events(k, cuts[k])
        circle_events.append(events)
        if k == len(chain) - 1:
            break
        shared = [i for i in events
                  if _other_circle(pd, i, k, circle_of) == k + 1]
        if not shared:
            raise DiagramError("chain adjacency broken at annulus %d" % k)
        last = shared[-1]
        # cut on circle k+1: the arc right after crossing `last`
        nxt_arc = None
        for a in chain[k + 1]:
            i, p = pd.tail_end(a)
            if i == last:
                nxt_arc = a
                break
        if nxt_arc is None:
            raise DiagramError("crossing %d not found on next circle" % last)
        cuts.append(nxt_arc)
        annuli.append([(i, pd.sign(i)) for i in shared])
    return annuli, circle_events


def _other_circle(pd, i, k, circle_of):
    a, b, c, d = pd.crossings[i]
    oe = pd.over_entry[i]
    over_in = b if oe == 1 else d
    cu, co = circle_of[a], circle_of[over_in]
    return co if cu == k else cu


def seifert_matrix(pd: KnotDiagram):
    """Seifert matrix of a knot diagram via chain form.

    Empty diagram gives a 0x0 matrix.  The result satisfies
    det(A - A^T) = +/-1 for any knot.
    """
    if not pd.is_knot():
        raise DiagramError("seifert_matrix requires a knot; got %d components"
                           % len(pd.components))
    if not pd.crossings:
        return []
    chained, chain = to_chain_form(pd)
    annuli, circle_events = _annulus_data(chained, chain)

    # generators: consecutive crossing pairs within an annulus
    gens = []
    for ai, xs in enumerate(annuli):
        for t in range(len(xs) - 1):
            gens.append((ai, t))
    n = len(gens)
    gidx = {g: i for i, g in enumerate(gens)}
    V = [[0] * n for _ in range(n)]

    # positions of each annulus crossing within the next circle's event
    # order, for the staggered entries
    for ai, xs in enumerate(annuli):
        for t in range(len(xs) - 1):
            g = gidx[(ai, t)]
            (x1, s1), (x2, s2) = xs[t], xs[t + 1]
            if s1 == s2:
                V[g][g] = -1 if s1 == 1 else 1
        for t in range(len(xs) - 2):
            g1 = gidx[(ai, t)]
            g2 = gidx[(ai, t + 1)]
            shared_sign = xs[t + 1][1]
            if shared_sign == 1:
                V[g2][g1] = 1
            else:
                V[g1][g2] = -1

    # staggered entries between adjacent annuli, via the shared circle's
    # event order
    for ai in range(len(annuli) - 1):
        events = circle_events[ai + 1]
        pos = {}
        for t, i in enumerate(events):
            pos.setdefault(i, t)
        a_cross = [i for i, s in annuli[ai]]
        b_cross = [i for i, s in annuli[ai + 1]]
        for t in range(len(a_cross) - 1):
            p1, p2 = pos[a_cross[t]], pos[a_cross[t + 1]]
            g = gidx[(ai, t)]
            for u in range(len(b_cross) - 1):
                q1, q2 = pos[b_cross[u]], pos[b_cross[u + 1]]
                h = gidx[(ai + 1, u)]
                if q1 < p1 < q2 < p2:
                    V[h][g] = 1
                elif p1 < q1 < p2 < q2:
                    V[h][g] = -1
    return V


# -- Goeritz matrix and Gordon-Litherland signature (independent oracle) ----


def _white_graph(pd: KnotDiagram):
    """Checkerboard white-graph data: edges (face1, face2, sign, crossing).

    At each crossing the two opposite corner pairs join opposite-colored
    regions; the pair (corner 0-1 side, corner 2-3 side) gets one color.
    """
    faces = pd.faces()
    face_of = {}
    for fi, f in enumerate(faces):
        for dart in f:
            face_of[dart] = fi

    # checkerboard 2-coloring of faces: adjacent faces (sharing an arc side)
    # get opposite colors
    color = {0: 0}
    stack = [0]
    adj = {}
    for i in range(len(pd.crossings)):
        for p in range(4):
            f1 = face_of[(i, p)]
            f2 = face_of[(i, (p + 1) % 4)]
            adj.setdefault(f1, set()).add(f2)
            adj.setdefault(f2, set()).add(f1)
    while stack:
        f = stack.pop()
        for g in adj.get(f, ()):
            if g not in color:
                color[g] = 1 - color[f]
                stack.append(g)
    if any(color[face_of[(i, p)]] == color[face_of[(i, (p + 1) % 4)]]
           for i in range(len(pd.crossings)) for p in range(4)):
        raise DiagramError("diagram is not checkerboard colorable (split?)")

    edges = []
    for i in range(len(pd.crossings)):
        # corners: dart (i,p) face contains the corner between slots p-1, p
        c01 = face_of[(i, 1)]
        c23 = face_of[(i, 3)]
        c12 = face_of[(i, 2)]
        c30 = face_of[(i, 0)]
        # one opposite pair is white: take white = color 0
        if color[c01] == 0:
            white_pair, eta = (c01, c23), -1
        else:
            white_pair, eta = (c12, c30), 1
        edges.append((white_pair[0], white_pair[1], eta, i))
    return edges, color


def goeritz_matrix(pd: KnotDiagram):
    """Goeritz matrix with respect to the white regions, plus GL correction.

    Returns (matrix, correction) where signature(knot) can be computed as
    sig(matrix) - correction (Gordon-Litherland).
    """
    edges, color = _white_graph(pd)
    whites = sorted({f for f1, f2, eta, i in edges for f in (f1, f2)})
    windex = {f: k for k, f in enumerate(whites)}
    nw = len(whites)
    G = [[0] * nw for _ in range(nw)]
    for f1, f2, eta, i in edges:
        if f1 == f2:
            continue
        a, b = windex[f1], windex[f2]
        G[a][b] -= eta
        G[b][a] -= eta
    for k in range(nw):
        G[k][k] = -sum(G[k][j] for j in range(nw) if j != k)

    # Gordon-Litherland correction: mu = number of type II crossings,
    # signed; a crossing is type II when eta equals the crossing sign
    mu = sum(pd.sign(i) for f1, f2, eta, i in edges if eta == pd.sign(i))

    # delete one row/column (any white region as base point)
    M = [row[1:] for row in G[1:]]
    return M, mu


def gl_signature(pd: KnotDiagram):
    """Knot signature via the Goeritz matrix (Gordon-Litherland)."""
    from .exact import sym_signature

    M, mu = goeritz_matrix(pd)
    return sym_signature(M, already_symmetric=True) - mu


def gl_determinant(pd: KnotDiagram):
    """|det(Goeritz)| (the knot determinant)."""
    from .exact import int_det

    M, _ = goeritz_matrix(pd)
    return abs(int_det(M))

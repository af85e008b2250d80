"""Reidemeister moves on PD diagrams and a budgeted simplifier.

The simplifier is greedy R1/R2 reduction interleaved with randomized R3
passes and restarts.  It guarantees nothing about minimality; it only
promises a diagram of the same link with no more crossings, deterministic
for a fixed seed.
"""

from __future__ import annotations

import random

from .diagram import KnotDiagram, DiagramError


def _passes(pd: KnotDiagram, i):
    """The two strand passes at crossing i as (in_arc, out_arc, is_over)."""
    a, b, c, d = pd.crossings[i]
    oe = pd.over_entry[i]
    over_in, over_out = (b, d) if oe == 1 else (d, b)
    return (a, c, False), (over_in, over_out, True)


def _rebuild(pd, keep_crossings, keep_over, merge_groups):
    """Reassemble a diagram after deleting crossings and merging arcs.

    ``merge_groups`` is a list of arc groups; all arcs in a group become one
    arc (the first).  Component cycles are remapped and consecutive
    duplicates collapsed; a component whose arcs all merge away survives as
    a crossingless loop.
    """
    rep = {}

    def find(x):
        while rep.get(x, x) != x:
            rep[x] = rep.get(rep[x], rep[x])
            x = rep[x]
        return x

    for group in merge_groups:
        group = list(group)
        r0 = find(group[0])
        for g in group[1:]:
            rg = find(g)
            if rg != r0:
                rep[rg] = r0

    new_crossings = [tuple(find(x) for x in c) for c in keep_crossings]
    used = {x for c in new_crossings for x in c}

    new_comps = []
    for comp in pd.components:
        mapped = [find(a) for a in comp]
        # collapse cyclically-consecutive duplicates
        out = []
        for a in mapped:
            if not out or out[-1] != a:
                out.append(a)
        while len(out) > 1 and out[0] == out[-1]:
            out.pop()
        # drop arcs that no longer touch any crossing, unless that empties
        # the component (then it is a crossingless loop)
        kept = [a for a in out if a in used]
        if not kept:
            kept = [out[0]]
        new_comps.append(tuple(kept))
    return KnotDiagram(new_crossings, tuple(new_comps), tuple(keep_over))


def r1_spots(pd: KnotDiagram):
    """Indices of crossings removable by an R1 move (kinks)."""
    spots = []
    for i, tup in enumerate(pd.crossings):
        if len(set(tup)) < 4 and any(tup[p] == tup[(p + 1) % 4] for p in range(4)):
            spots.append(i)
    return spots


def apply_r1(pd: KnotDiagram, i):
    """Remove the kink at crossing i."""
    tup = pd.crossings[i]
    if not any(tup[p] == tup[(p + 1) % 4] for p in range(4)):
        raise DiagramError("crossing %d is not a kink" % i)
    keep = [c for k, c in enumerate(pd.crossings) if k != i]
    over = [o for k, o in enumerate(pd.over_entry) if k != i]
    return _rebuild(pd, keep, over, [set(tup)])


def r2_spots(pd: KnotDiagram):
    """R2-removable bigons as (i, j, arc1, arc2) with i != j."""
    spots = []
    seen = set()
    for face in pd.faces():
        if len(face) != 2:
            continue
        (i, p), (j, q) = face
        if i == j:
            continue
        a1 = pd.crossings[i][p]
        a2 = pd.crossings[j][q]
        if a1 == a2:
            continue
        # a1 runs between i and j; its strand must pass over at both
        # crossings or under at both (a clasp has mixed parities)
        ends1 = pd.arc_ends(a1)
        if {e[0] for e in ends1} != {i, j}:
            continue
        parities = {e[1] % 2 for e in ends1}
        if len(parities) != 1:
            continue
        key = frozenset((i, j))
        if key in seen:
            continue
        seen.add(key)
        spots.append((i, j, a1, a2))
    return spots


def apply_r2(pd: KnotDiagram, spot):
    """Remove the bigon (i, j, arc1, arc2)."""
    i, j, a1, a2 = spot
    groups = []
    for mid in (a1, a2):
        ci, _ = pd.tail_end(mid)
        co, _ = pd.head_end(mid)
        if {ci, co} != {i, j}:
            raise DiagramError("arc %r does not span the bigon" % (mid,))
        pre = [x for (x, y, ov) in _passes(pd, ci) if y == mid][0]
        post = [y for (x, y, ov) in _passes(pd, co) if x == mid][0]
        groups.append({pre, mid, post})
    keep = [c for k, c in enumerate(pd.crossings) if k not in (i, j)]
    over = [o for k, o in enumerate(pd.over_entry) if k not in (i, j)]
    return _rebuild(pd, keep, over, groups)


def _triangle_data(pd: KnotDiagram, face):
    """Decompose a triangle face into strands S1, S2, S3.

    Returns None unless the face is a genuine R3 triangle.  Each strand
    record is (outer_in, inner, outer_out, crossings_in_order, over_flags)
    oriented along the strand.
    """
    if len(face) != 3:
        return None
    idxs = [i for i, p in face]
    if len(set(idxs)) != 3:
        return None
    edges = [pd.crossings[i][p] for i, p in face]
    if len(set(edges)) != 3:
        return None
    # edge k runs from crossing idxs[k] to idxs[(k+1)%3]
    strands = []
    for k in range(3):
        e = edges[k]
        c_from, c_to = idxs[k], idxs[(k + 1) % 3]
        ends = dict(pd.arc_ends(e))
        # orient the strand along arc directions
        ci, _ = pd.tail_end(e)
        co, _ = pd.head_end(e)
        if {ci, co} != {c_from, c_to}:
            return None
        pre = [x for (x, y, ov) in _passes(pd, ci) if y == e][0]
        post = [y for (x, y, ov) in _passes(pd, co) if x == e][0]
        over_at_ci = [ov for (x, y, ov) in _passes(pd, ci) if y == e][0]
        over_at_co = [ov for (x, y, ov) in _passes(pd, co) if x == e][0]
        if pre in edges or post in edges:
            return None
        strands.append({"pre": pre, "mid": e, "post": post,
                        "c_in": ci, "c_out": co,
                        "over_in": over_at_ci, "over_out": over_at_co})
    return idxs, edges, strands


def r3_spots(pd: KnotDiagram):
    """Triangle faces admitting an R3 move."""
    spots = []
    for face in pd.faces():
        data = _triangle_data(pd, face)
        if data is None:
            continue
        _, _, strands = data
        if any(s["over_in"] == s["over_out"] for s in strands):
            spots.append(tuple(face))
    return spots


def apply_r3(pd: KnotDiagram, face):
    """Slide a strand across the triangle face.

    Each strand keeps its arc sequence (outer, inner, outer); only the
    three crossing tuples change, with pairwise over/under and signs
    preserved and the order of the two crossings along every strand
    reversed.
    """
    data = _triangle_data(pd, tuple(face))
    if data is None:
        raise DiagramError("not an R3 triangle face")
    idxs, edges, strands = data
    if not any(s["over_in"] == s["over_out"] for s in strands):
        raise DiagramError("face admits no R3 move")

    # crossing pairs: old crossing c meets strands (s_at_in, s_at_out)
    # After the move, strand k passes its two crossings in reversed order,
    # and each crossing keeps its strand pair, over/under flags and sign.
    new_tuples = {i: None for i in idxs}

    # collect, per crossing, the two new passes
    passes_at = {i: [] for i in idxs}
    for s in strands:
        # old order along strand: c_in then c_out; new order: c_out then c_in
        first, second = s["c_out"], s["c_in"]
        over_first, over_second = s["over_out"], s["over_in"]
        # arcs along the strand stay (pre, mid, post)
        passes_at[first].append((s["pre"], s["mid"], over_first))
        passes_at[second].append((s["mid"], s["post"], over_second))

    new_crossings = list(pd.crossings)
    new_over = list(pd.over_entry)
    for i in idxs:
        two = passes_at[i]
        if len(two) != 2:
            raise DiagramError("triangle structure broken at crossing %d" % i)
        overs = [p for p in two if p[2]]
        unders = [p for p in two if not p[2]]
        if len(overs) != 1:
            raise DiagramError("over/under mismatch at crossing %d" % i)
        (u_in, u_out, _), (o_in, o_out, _) = unders[0], overs[0]
        if pd.sign(i) == 1:
            new_crossings[i] = (u_in, o_in, u_out, o_out)
            new_over[i] = 1
        else:
            new_crossings[i] = (u_in, o_out, u_out, o_in)
            new_over[i] = 3
    return KnotDiagram(new_crossings, pd.components, new_over)


def reduce_r1_r2(pd: KnotDiagram):
    """Apply R1/R2 removals greedily until none remain."""
    moves = 0
    while True:
        r1 = r1_spots(pd)
        if r1:
            pd = apply_r1(pd, r1[0])
            moves += 1
            continue
        r2 = r2_spots(pd)
        applied = False
        for spot in r2:
            try:
                pd = apply_r2(pd, spot)
            except DiagramError:
                continue
            moves += 1
            applied = True
            break
        if not applied:
            return pd, moves


def simplify(pd: KnotDiagram, budget=1000, seed=0):
    """Reduce a diagram with R1/R2 moves and randomized R3 passes.

    Deterministic for a fixed seed.  Output is related to the input by
    Reidemeister moves; its crossing count never exceeds the input's.
    Budget counts individual moves; exhaustion returns the best found.
    """
    rng = random.Random(seed)
    best, spent = reduce_r1_r2(pd)
    current = best
    while spent < budget:
        spots = r3_spots(current)
        if not spots:
            # restart from best with a fresh shuffle
            if current is not best:
                current = best
                continue
            break
        face = spots[rng.randrange(len(spots))]
        try:
            current = apply_r3(current, face)
        except DiagramError:
            spent += 1
            continue
        spent += 1
        current, used = reduce_r1_r2(current)
        spent += used
        if len(current.crossings) < len(best.crossings):
            best = current
    return best

"""Braid words and their closures as PD diagrams.

A braid word is a list of nonzero integers: letter +i crosses strand
position i over position i+1, letter -i crosses it under.  Strand
positions are 1-based.  The closure of the empty word on k strands is a
k-component unlink.
"""

from __future__ import annotations

from .diagram import KnotDiagram


def braid_closure(word, strands=None):
    """The closure of a braid word as an oriented diagram."""
    word = list(word)
    if strands is None:
        strands = max((abs(w) for w in word), default=1) + 1
    if any(w == 0 or abs(w) >= strands for w in word):
        raise ValueError("letters must be nonzero with |letter| < strands")

    nxt = strands + 1
    top = list(range(1, strands + 1))
    cur = list(top)
    crossings = []
    overs = []
    succ = {}

    for w in word:
        i = abs(w)
        u = cur[i - 1]
        v = cur[i]
        x = nxt
        y = nxt + 1
        nxt += 2
        if w > 0:
            # u passes over, v -> x under; ccw from under-in v
            crossings.append((v, u, x, y))
            overs.append(1)
        else:
            crossings.append((u, x, y, v))
            overs.append(3)
        succ[u] = y
        succ[v] = x
        cur[i - 1] = x
        cur[i] = y

    # close up: bottom arc at each position continues as the top arc
    for pos in range(strands):
        succ[cur[pos]] = top[pos]

    components = []
    seen = set()
    for a in top:
        if a in seen:
            continue
        comp = [a]
        seen.add(a)
        b = succ[a]
        while b != a:
            comp.append(b)
            seen.add(b)
            b = succ[b]
        components.append(tuple(comp))

    # merge the closure identifications: arcs u with succ[u] == v where the
    # pair never meets a crossing boundary are genuine distinct arcs; the
    # identification above already threads them into components, but the
    # bottom and top arcs are distinct labels joined without a crossing,
    # which is fine for a PD diagram only if both appear in crossings.
    # Rename bottom arcs to their top continuations when the bottom arc
    # never appears in a crossing... instead, simply merge each pair
    # (cur[pos] -> top[pos]) into one arc label.
    merged = {}
    for pos in range(strands):
        bottom, t = cur[pos], top[pos]
        if bottom != t:
            merged[bottom] = t

    def rep(a):
        while a in merged:
            a = merged[a]
        return a

    crossings = [tuple(rep(a) for a in c) for c in crossings]
    comps = []
    for comp in components:
        out = []
        for a in comp:
            r = rep(a)
            if not out or out[-1] != r:
                out.append(r)
        while len(out) > 1 and out[0] == out[-1]:
            out.pop()
        comps.append(tuple(out))
    return KnotDiagram(crossings, tuple(comps), tuple(overs))

#!/usr/bin/env python3
"""Emit a diagram file for the closure of a braid word.

Strands run upward. Generators are signed 1-based indices: +i is the
positive crossing of strands i, i+1 (left strand over), -i the negative one.

  --closure plain     classical closure (top j meets bottom j), .vpd output
  --closure reversal  projective closure: top j meets bottom n+1-j through
                      the boundary, .pkd output
"""
import argparse
import sys


def build(n, word, closure):
    next_id = [1]

    def fresh():
        next_id[0] += 1
        return next_id[0] - 1

    level = [fresh() for _ in range(n)]
    bottom = list(level)
    crossings = []
    for t, g in enumerate(word, start=1):
        i = abs(g) - 1
        l_in, r_in = level[i], level[i + 1]
        nl, nr = fresh(), fresh()
        if g > 0:
            slots = [r_in, nr, nl, l_in]
        else:
            slots = [l_in, r_in, nr, nl]
        crossings.append((t, slots))
        level[i], level[i + 1] = nl, nr
    top = list(level)
    boundary = []
    if closure == "plain":
        # merge top arc j into bottom arc j
        ren = {}
        for j in range(n):
            ren[top[j]] = bottom[j]
        def r(a):
            while a in ren and ren[a] != a:
                a = ren[a]
            return a
        crossings = [(t, [r(a) for a in s]) for t, s in crossings]
    else:
        boundary = [top[n - 1 - k] for k in range(n)] + [bottom[k] for k in range(n)]
    return crossings, boundary, bottom, top


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("strands", type=int)
    ap.add_argument("word", nargs="*", type=int)
    ap.add_argument("--closure", choices=["plain", "reversal"], default="plain")
    ap.add_argument("--comment", action="append", default=[])
    a = ap.parse_args()
    crossings, boundary, bottom, top = build(a.strands, a.word, a.closure)
    out = ["# " + c for c in a.comment]
    if a.closure == "reversal":
        out.append("boundary " + " ".join(map(str, boundary)))
    for t, s in crossings:
        out.append("crossing %d %d %d %d %d" % (t, *s))
    if a.closure == "plain":
        used = {x for _, s in crossings for x in s}
        free = sum(1 for j in range(a.strands) if bottom[j] not in used)
        if free:
            out.append("loop %d" % free)
    # incoming slots give the heads: positive crossings 0 and 3, negative 0 and 1
    ends = {}
    for t, s in crossings:
        for k, x in enumerate(s):
            ends.setdefault(x, []).append((0, t, k))
    for k, x in enumerate(boundary):
        ends.setdefault(x, []).append((1, k, 0))
    heads = {}
    for (t, s), g in zip(crossings, a.word):
        for k in ((0, 3) if g > 0 else (0, 1)):
            heads[s[k]] = (0, t, k)
    if a.closure == "reversal":
        for k in range(a.strands):
            heads[boundary[k]] = (1, k, 0)
    for x in sorted(ends):
        if x in heads:
            out.append("orient %d %s" % (x, "+" if heads[x] == min(ends[x]) else "-"))
    sys.stdout.write("\n".join(out) + "\n")


if __name__ == "__main__":
    main()

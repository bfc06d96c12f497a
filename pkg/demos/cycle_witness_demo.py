#!/usr/bin/env python3
"""Witness pairs for vertices sitting off a shortest cycle.

A vertex v off a shortest cycle C that k-dominates at least 2k of C's
vertices always admits two dominated cycle vertices u, w whose shortest
paths from v avoid each other's endpoint. This script builds gadgets (a
cycle with an attached antipodal path) and prints the extracted witnesses.
"""

from kdom import Graph, cycle_outsider_witness


def gadget(k):
    """Cycle of length 2k+2 plus an attached path between antipodal vertices."""
    g_len = 2 * k + 2
    half = k + 1
    edges = [(i, (i + 1) % g_len) for i in range(g_len)]
    chain = [0] + list(range(g_len, g_len + half - 1)) + [half]
    edges += list(zip(chain, chain[1:]))
    return Graph(g_len + half - 1, edges), list(range(g_len)), g_len


for k in (1, 2, 3):
    g, cyc, v = gadget(k)
    dist_v = g.bfs_distances(v)
    dominated = [c for c in cyc if dist_v[c] <= k]
    wit = cycle_outsider_witness(g, cyc, v, k)
    print(f"k={k}: cycle {cyc}, outsider v={v}")
    print(f"  v {k}-dominates {dominated} ({len(dominated)} >= 2k = {2 * k})")
    print(f"  witness u={wit.u} via {wit.path_u}  (avoids w: {wit.w not in wit.path_u})")
    print(f"  witness w={wit.w} via {wit.path_w}  (avoids u: {wit.u not in wit.path_w})")
    print()

#!/usr/bin/env python3
"""Tour of the distance-k domination bounds on their tight families.

For each family the exact solver's value is printed next to every applicable
bound, showing where each inequality is attained with equality:

* paths of order  l*(2k+1)      -> diameter bound is tight
* paths of order  2l*(2k+1)     -> radius bound is tight
* cycles of order l*(2k+1)      -> girth bound is tight
* clique-expanded paths         -> diameter bound stays tight at min degree d
"""

from kdom import bounds_report, clique_expanded_path, cycle, path


def show(name, g, k):
    r = bounds_report(g, k)
    lbs = f"diam {r.lb_diameter}  rad {r.lb_radius}  girth {r.lb_girth}  pack {r.lb_packing}"
    ubs = f"mm {r.ub_meir_moon}  tx {r.ub_tian_xu}  hl {r.ub_henning_lichiardopol}  greedy {r.ub_greedy}"
    print(f"  {name:<26} k={k}  gamma={r.exact.value:<3} [{r.verdict}]")
    print(f"    lower: {lbs}")
    print(f"    upper: {ubs}")


print("=" * 72)
print("paths P_(l(2k+1)): diameter bound tight")
print("=" * 72)
for k in (1, 2):
    for ell in (1, 2, 3):
        n = ell * (2 * k + 1)
        show(f"P_{n}", path(n), k)

print()
print("=" * 72)
print("paths P_(2l(2k+1)): radius bound tight")
print("=" * 72)
for k in (1, 2):
    for ell in (1, 2):
        n = 2 * ell * (2 * k + 1)
        show(f"P_{n}", path(n), k)

print()
print("=" * 72)
print("cycles C_(l(2k+1)): girth bound tight")
print("=" * 72)
for k in (1, 2):
    for ell in (1, 2, 3):
        n = ell * (2 * k + 1)
        show(f"C_{n}", cycle(n), k)

print()
print("=" * 72)
print("clique-expanded paths: diameter bound tight at higher min degree")
print("=" * 72)
for k in (1, 2):
    for delta in (1, 2, 3):
        n_base = 2 * (2 * k + 1)
        g = clique_expanded_path(n_base, delta)
        show(f"CE(base={n_base}, delta={delta})", g, k)

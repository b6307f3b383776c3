"""Sweep random-graph seeds for instances where r is strictly below E.

Most small random graph metrics have r = E (an invariant measure exists);
this script hunts for seeds where the gap E - r exceeds 1e-4, which make
good regression fixtures for the strict-inequality branch of the ordering
relations.  Prints every hit with its gap to 6 significant digits.

Usage: python scripts/find_energy_gap_seed.py [max_seed] [m]
"""
import sys

sys.path.insert(0, "src")

from rdv.energy import maximal_energy
from rdv.minimax import rendezvous_number
from rdv.spaces import generate, random_graph


def main() -> None:
    max_seed = int(sys.argv[1]) if len(sys.argv) > 1 else 200
    m = int(sys.argv[2]) if len(sys.argv) > 2 else 6
    hits = []
    for seed in range(max_seed):
        space = generate(random_graph(m=m, edge_prob=0.5, seed=seed))
        r = rendezvous_number(space)
        e = maximal_energy(space).value
        gap = e - r
        if gap > 1e-4:
            hits.append((seed, r, e, gap))
            print(f"seed={seed}  r={r:.9f}  E={e:.9f}  gap={gap:.6g}")
    if not hits:
        print(f"no gap > 1e-4 found in seeds 0..{max_seed - 1} at m={m}")
    else:
        best = max(hits, key=lambda h: h[3])
        print(f"\nlargest gap: seed={best[0]} gap={best[3]:.6g}")


if __name__ == "__main__":
    main()

"""
Build the bundled toy atlas and walk through what came out
==========================================================

Two unit triangles, nine inter-set pairs, and the full stratification of
their contact landscape. Writes RoadMap.txt and Node files next to this
script under out/toy_atlas/.
"""

from pathlib import Path

from atlas3d import AtlasConfig, build_atlas, toy_problem
from atlas3d.atlas import check_stratification
from atlas3d.textio import save_atlas_dir

problem = toy_problem()
print("pairs and their preferred bands:")
for a, b in problem.pairs():
    lo, hi = problem.interval(a, b)
    print(f"  {a}-{b}: [{lo:.3f}, {hi:.3f}]")

# a coarse step keeps this demo fast; drop to 0.1 for the full picture
config = AtlasConfig(step_fraction=0.25, max_samples_per_node=1000)
atlas = build_atlas(problem, config)

stats = atlas.stats()
print(f"\nregions by dimension: {stats['by_dim']}")
print(f"total stored samples: {stats['samples']}")

# the invariant audit should come back empty
problems = check_stratification(atlas)
print(f"stratification violations: {len(problems)}")

# rigid (0D) regions are the interesting endpoints for path queries
rigid = [n for n in atlas.nodes.values() if n.dim == 0]
print(f"rigid regions: {len(rigid)}, e.g. {rigid[0].label}")

out = Path(__file__).parent / "out" / "toy_atlas"
save_atlas_dir(atlas, out)
print(f"wrote {out}/RoadMap.txt and {len(atlas.nodes)} node files")

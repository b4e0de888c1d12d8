"""
Atlas sampling vs a Metropolis Monte Carlo baseline
===================================================

Both methods explore the same landscape; the question is how evenly. The
atlas walks chart grids region by region, the baseline does a biased random
walk over poses. Epsilon-coverage puts one number on each.
"""

import numpy as np

from atlas3d import AtlasConfig, build_atlas, toy_problem
from atlas3d.coverage import (
    ComparisonGrid,
    coverage_percentage,
    epsilon,
    mc_baseline_sample,
    ratio_percentage,
)

problem = toy_problem()
grid = ComparisonGrid(resolution=2.0)
grid_pts = grid.points()
print(f"comparison grid: {grid.count} points")

# atlas samples, reduced to B-centroid positions relative to A's centroid
atlas = build_atlas(
    problem, AtlasConfig(step_fraction=0.25, max_samples_per_node=1000)
)
a_centroid = problem.set_a.as_array().mean(axis=0)
atlas_pts = np.array(
    [
        np.asarray(s.b_positions).mean(axis=0) - a_centroid
        for node in atlas.nodes_in_order()
        for s in node.samples
    ]
)

# the Monte Carlo baseline records one pose per iteration
mc = mc_baseline_sample(problem, iterations=5000, proposal_scale=0.3, seed=0)
mc_pts = np.array([s.centroid for s in mc.samples])
print(f"mc acceptance rate: {mc.acceptance_rate:.2f}")

for name, pts in (("atlas", atlas_pts), ("mc", mc_pts)):
    eps = epsilon(len(grid_pts), len(pts))
    cov = coverage_percentage(pts, grid_pts, eps)
    print(f"{name}: {len(pts)} samples, eps {eps:.3f}, coverage {cov:.1f}%")

print(
    "sample count ratio atlas/mc:",
    f"{ratio_percentage(len(atlas_pts), len(mc_pts)):.1f}%",
)

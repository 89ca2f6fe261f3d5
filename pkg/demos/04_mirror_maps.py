"""Source vs target mirror images on a mirror-floor room: a no-op edit
reproduces the source mirror; full dimming turns the reflections off."""

import numpy as np

from relightkit import LightingEdit, oracle
from relightkit.irradiance import IrradianceSet, estimate_source_irradiance
from relightkit.mirror import compute_source_mirror, compute_target_mirror
from relightkit.raytrace import Bvh


def paint(pos):
    x, z = pos[..., 0], pos[..., 2]
    r = 0.4 + 0.1 * np.sin(1.5 * x)
    g = 0.35 + 0.1 * np.cos(1.2 * z)
    b = 0.3 + 0.05 * np.sin(x + z)
    return np.stack([r, g, b], axis=-1)


gt = oracle.gen_procedural_scene(oracle.preset_spec("mirror-floor"), seed=4,
                                 image_mode="black")
scene = oracle.paint_scene_images(gt.scene, paint)
bvh = Bvh(scene.mesh)

view = 1
src = compute_source_mirror(scene, view, bvh=bvh)
print(f"source mirror: {src.valid.mean():.1%} valid pixels, "
      f"mean reflected radiance {src.color[src.valid].mean():.4f}")

e_src, hit = [], []
for i in range(scene.num_views):
    est = estimate_source_irradiance(scene, i, spp=24, seed=5, bvh=bvh)
    e_src.append(est.e)
    hit.append(est.hit)
irr = IrradianceSet(e_src=e_src, hit=hit)

noop = compute_target_mirror(scene, irr, LightingEdit.noop(),
                             scene.cameras[view], bvh=bvh)
both = src.valid & noop.valid
print(f"no-op target vs source: max diff "
      f"{np.abs(noop.color - src.color)[both].max():.2e} on shared pixels")

dark = compute_target_mirror(scene, irr, LightingEdit(alpha_dim=1.0),
                             scene.cameras[view], bvh=bvh)
print(f"alpha_dim = 1, no lights: max target mirror value {dark.color.max():.1f}")

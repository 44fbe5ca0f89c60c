"""Flow matching without a network: the pieces the generator is built from.

Noise x0 and data x1 are joined by straight lines x_t = (1 - t) x0 + t x1.
For Gaussian data the average velocity along those lines has a closed form,
so we can integrate it exactly and watch what the solver and the guidance
weights do.

    python3 demos/flow_basics.py
"""
import numpy as np

from flowtalk import flow
from flowtalk.flow import GuidanceSpec

rng = np.random.default_rng(0)

# -- training-time randomness
t = flow.sample_timestep(rng, 50_000)
print(f"timesteps: mean {t.mean():.3f}, 10/90% quantiles {np.quantile(t, 0.1):.3f} / {np.quantile(t, 0.9):.3f}")
m = flow.sample_mask(120, rng)
runs = "".join("#" if v else "." for v in m.mask)
print(f"one infilling mask ({m.n_segments} span(s), {m.mask.mean():.0%} hidden):\n  {runs}")

# -- the OT path and its velocity target
x0, x1 = rng.standard_normal((2, 4))
xt, u = flow.ot_pair(x0, x1, 0.3)
print("x1 recovered from (x_t, u):", np.allclose(xt + 0.7 * u, x1))


# -- exact marginal field for N(0, 1) noise -> N(mu, s^2) data
def gaussian_field(mu, s):
    def v(x, t):
        var = (1 - t) ** 2 + (t * s) ** 2
        return mu + (t * s * s - (1 - t)) / var * (x - t * mu)
    return v


mu, s = 3.0, 0.5
z = rng.standard_normal(20_000)
for solver in ("euler", "midpoint"):
    for n in (2, 4, 8, 16):
        x = flow.integrate(gaussian_field(mu, s), z, n, solver)
        print(f"{solver:8s} {n:2d} steps: mean {x.mean():.3f} std {x.std():.3f}   (target {mu}, {s})")


# -- guidance: three conditions, each shifting the data mean
def conditional(x, t, drop):
    shift = mu - sum(c for c, d in zip((1.0, 0.5, 1.5), drop) if d)
    return gaussian_field(shift, s)(x, t)


for alphas in ((0, 0, 0), (1, 0, 0), (0, 0, 1), (2.0, 2.5, 2.0)):
    spec = GuidanceSpec(*alphas, steps=16)
    x = flow.integrate(lambda x, t: flow.cfg_field(conditional, x, t, spec), z, spec.steps)
    print(f"alphas {alphas}: sample mean {x.mean():.2f}")
print("each guidance weight pushes samples further from what that condition's removal would give")

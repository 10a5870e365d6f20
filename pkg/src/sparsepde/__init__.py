"""Bidirectional PDE solving from extremely sparse observations.

The pipeline: synthetic PDE datasets, a kernel-integral VAE over joint
coefficient/solution fields, a contrastive conditioner aligning sparse and
full observations, a latent diffusion model, and a PDE- and
observation-guided deterministic sampler that answers forward and inverse
queries (including zero-shot super-resolution) from a single set of trained
checkpoints.
"""

__version__ = "0.1.0"

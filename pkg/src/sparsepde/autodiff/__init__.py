"""Reverse-mode autodiff substrate: tensors, primitives, layers, optimizer."""

from . import kernels
from .gradcheck import grad_check
from .nn import (
    Adam,
    Conv2d,
    ConvTranspose2d,
    GroupNorm,
    LayerNorm,
    Linear,
    Mlp,
    Module,
    checkpoint_hash,
    load_checkpoint,
    save_checkpoint,
)
from .tensor import (
    Param,
    Tensor,
    add,
    backward,
    concat,
    conv2d,
    conv2d_transpose,
    div,
    ensure,
    exp,
    gather_rows,
    group_norm,
    index,
    is_grad_enabled,
    layer_norm,
    log,
    log_softmax,
    matmul,
    mul,
    neg,
    no_grad,
    power,
    relu,
    reshape,
    segment_sum,
    sigmoid,
    silu,
    softmax,
    sqrt,
    sub,
    take_diag,
    tanh,
    tmean,
    transpose,
    tsum,
)

__all__ = [name for name in dir() if not name.startswith("_")]

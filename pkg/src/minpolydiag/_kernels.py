"""Backend selection for the float kernels.

The compiled extension ``_ckernels`` is used when it was built; otherwise the
numpy implementations in ``_pykernels`` are used. ``BACKEND`` records which.
"""

try:
    from ._ckernels import back_substitute, durand_kerner, mgs_dependence, poly_divmod, poly_eval
    BACKEND = "cython"
except ImportError:  # extension not built
    from ._pykernels import back_substitute, durand_kerner, mgs_dependence, poly_divmod, poly_eval
    BACKEND = "python"

__all__ = ["BACKEND", "back_substitute", "durand_kerner", "mgs_dependence", "poly_divmod", "poly_eval"]

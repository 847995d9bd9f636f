"""Python access to the terracini core. Every call returns a decoded JSON report."""

import json as _json

from . import _core
from ._core import Refused, SpecError

__version__ = _core.version
SCHEMA_VERSION = _core.schema_version
DEFAULT_SEED = _core.default_seed


def _wrap(fn):
    def call(*args, **kwargs):
        return _json.loads(fn(*args, **kwargs))

    call.__name__ = fn.__name__
    call.__doc__ = fn.__doc__
    return call


describe = _wrap(_core.describe)
defect = _wrap(_core.defect)
gauss = _wrap(_core.gauss)
contact = _wrap(_core.contact)
certify = _wrap(_core.certify)
verify_mainA = _wrap(_core.verify_mainA)
bound_segre_veronese = _wrap(_core.bound_segre_veronese)
bound_binary_sv = _wrap(_core.bound_binary_sv)
bound_grassmannian = _wrap(_core.bound_grassmannian)
bound_g2n = _wrap(_core.bound_g2n)
bound_lagrangian_spinor = _wrap(_core.bound_lagrangian_spinor)
bound_moments = _wrap(_core.bound_moments)
bound_powers = _wrap(_core.bound_powers)

__all__ = [
    "Refused",
    "SpecError",
    "describe",
    "defect",
    "gauss",
    "contact",
    "certify",
    "verify_mainA",
    "bound_segre_veronese",
    "bound_binary_sv",
    "bound_grassmannian",
    "bound_g2n",
    "bound_lagrangian_spinor",
    "bound_moments",
    "bound_powers",
]

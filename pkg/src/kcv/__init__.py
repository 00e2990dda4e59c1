"""Verification toolkit for Kottwitz characters, Kazhdan-Lusztig cells
and their intersections with twisted involution classes in finite
Coxeter groups (types A, B, D, F4, I2)."""

from .coxeter import build_group, CoxeterGroup, Element
from .errors import (
    UnsupportedType, CapExceeded, GroupMismatch, NotInvolutionClass,
    NotTwistedInvolution, SubgroupMismatch, NonUniqueJInduction,
    InconsistentSplit, ChecksumMismatch, VersionMismatch,
)

__version__ = "0.1.0"

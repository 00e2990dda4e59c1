"""Exception types shared across the package."""


class UnsupportedType(ValueError):
    """Requested Coxeter type / rank combination is not implemented."""


class CapExceeded(RuntimeError):
    """Group order exceeds the safety cap passed to build_group."""


class GroupMismatch(ValueError):
    """Operands belong to different group instances."""


class NotInvolutionClass(ValueError):
    """Class contains elements that are not twisted involutions."""


class NotTwistedInvolution(ValueError):
    """Element w does not satisfy w^diamond = w^-1."""


class SubgroupMismatch(ValueError):
    """Subgroup data does not live inside the expected ambient group."""


class NonUniqueJInduction(ValueError):
    """j-induction did not single out one constituent of minimal b."""


class InconsistentSplit(ValueError):
    """The two labelling rules for a split D_n character pair disagree."""


class ChecksumMismatch(IOError):
    """Cache file fails its integrity or revalidation check."""


class VersionMismatch(IOError):
    """Cache file was written by an incompatible format version."""

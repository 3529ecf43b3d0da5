"""Exception types shared by the library and mapped to CLI exit codes."""


class ContractViolationError(ValueError):
    """An input violates a documented precondition (wrong level, bad norm, ...)."""


class SeparabilityError(ValueError):
    """A state required to be separable at a cut is entangled beyond tolerance."""


class UnsupportedSizeError(ValueError):
    """An operation would produce a system larger than three qubits."""

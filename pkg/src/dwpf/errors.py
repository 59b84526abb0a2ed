"""Exceptions shared across the package."""


class ExactDomainError(ValueError):
    """A scalar left the domain where a formula is defined (q^2 = 1, zero rapidity, ...)."""


class CapacityError(RuntimeError):
    """The requested lattice size exceeds the configured state-space cap."""


class IntegrityError(RuntimeError):
    """An exact computation produced a value outside its guaranteed form."""


class NodeCollisionError(ValueError):
    """Interpolation nodes collided; the polynomial reconstruction is ill-posed."""

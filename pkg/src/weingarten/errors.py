"""Exception types shared across the package."""


class DomainError(ValueError):
    """Parameter outside the admissible domain (e.g. modulus not in (0,1))."""


class InvalidTriple(ValueError):
    """The zero coefficient triple (a, b, c) = (0, 0, 0)."""


class DegenerateJet(ArithmeticError):
    """Surface jet is not immersed at the sample point."""


class FormulaSingular(ArithmeticError):
    """A closed-form curvature formula was evaluated outside its validity."""


class FocalPoint(ArithmeticError):
    """Offset distance hits a focal point (1 - 2tH + t^2 K = 0)."""


class ImmersionError(ValueError):
    """Tube radius reaches the focal radius of its center curve."""

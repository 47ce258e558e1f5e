class CurrentCharsException(Exception):
    pass


class ArgumentError(CurrentCharsException):
    """ Invalid input: malformed partition, non-dominant weight, size mismatch. """
    pass


class LimitExceeded(CurrentCharsException):
    """ A configured size limit or oracle budget has been exceeded. """
    pass


class ConsistencyError(CurrentCharsException):
    """ An exactness check failed, e.g. inexact division in a projection. """
    pass

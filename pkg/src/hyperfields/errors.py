"""Exception types raised by the library.

Every user-facing error derives from :class:`HyperfieldError`, which is a
``ValueError`` so callers validating input can catch either.
"""


class HyperfieldError(ValueError):
    pass


class NotAPrimePower(HyperfieldError):
    def __init__(self, q):
        super().__init__(f"{q} is not a prime power")
        self.q = q


class FieldTooLarge(HyperfieldError):
    pass


class ZeroHasNoLog(HyperfieldError):
    def __init__(self):
        super().__init__("0 has no discrete logarithm")


class IndexDoesNotDivide(HyperfieldError):
    def __init__(self, q, r):
        super().__init__(f"index r={r} does not divide q-1={q - 1}")
        self.q = q
        self.r = r


class OddIndex(HyperfieldError):
    def __init__(self, r):
        super().__init__(f"H'_r requires an even index, got r={r}")
        self.r = r


class OrderTooLarge(HyperfieldError):
    pass


class ZeroCoefficient(HyperfieldError):
    pass


class MalformedTable(HyperfieldError):
    pass

class ParameterError(ValueError):
    """Invalid code or channel parameters."""


class FormatError(ValueError):
    """Malformed ISC1 file."""


class DecodeFailure(Exception):
    """Decoding gave up; ``stage`` says where."""

    def __init__(self, stage, detail=""):
        self.stage = stage
        self.detail = detail
        super().__init__(f"{stage}: {detail}" if detail else stage)


class AmbiguousMatch(DecodeFailure):
    def __init__(self, detail=""):
        super().__init__("ambiguous match", detail)


class EncodingRejection(Exception):
    """Scrambled anchors violate the intra-anchor distance constraint."""

    def __init__(self, violations):
        self.violations = list(violations)
        shown = ", ".join(f"({i},{j})" for i, j in self.violations[:8])
        more = "" if len(self.violations) <= 8 else f" (+{len(self.violations) - 8} more)"
        super().__init__(f"anchor constraint violated by pairs {shown}{more}")


class GuardExceeded(RuntimeError):
    """Exhaustive enumeration would be too large."""

class VerificationError(AssertionError):
    """Two computation routes that must agree did not."""

    def __init__(self, route_a: str, route_b: str, detail: str = ""):
        self.route_a = route_a
        self.route_b = route_b
        msg = f"{route_a} disagrees with {route_b}"
        super().__init__(f"{msg}: {detail}" if detail else msg)

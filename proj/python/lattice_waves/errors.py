class LatticeWavesError(Exception):
    def __init__(self, code, detail, info=None):
        super().__init__(f"{code}: {detail}")
        self.code = code
        self.detail = detail
        self.info = info or {}


class NotSolvableError(LatticeWavesError):
    @property
    def sum(self):
        from fractions import Fraction
        return Fraction(self.info.get("sum", "0"))

    @property
    def vertex(self):
        return self.info.get("vertex") or None

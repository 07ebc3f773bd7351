"""Exception hierarchy shared across the package."""


class FreeKnotError(Exception):
    pass


class DiagramError(FreeKnotError, ValueError):
    """A diagram failed validation."""


class ArcMultiplicity(DiagramError):
    pass


class MultiComponent(DiagramError):
    pass


class NonPlanar(DiagramError):
    pass


class UnknownArc(DiagramError, KeyError):
    pass


class ParseError(FreeKnotError, ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class LengthMismatch(FreeKnotError, ValueError):
    pass


class KeyCollision(FreeKnotError):
    pass


class UnidentifiedResultant(FreeKnotError):
    def __init__(self, shape: str, polys):
        self.shape = shape
        self.polys = list(polys)
        shown = ", ".join(str(p) for p in self.polys[:3])
        super().__init__(f"{shape}: {len(self.polys)} unidentified Jones value(s): {shown}")


class MissingCrossingNumber(FreeKnotError, KeyError):
    pass


class ParityViolation(FreeKnotError, ValueError):
    pass


class NonpositiveP(FreeKnotError, ValueError):
    pass

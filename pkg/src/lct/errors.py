"""Exception hierarchy shared by all stages."""


class LctError(Exception):
    """Base class for every error raised by this package."""


class StageError(LctError):
    """Wraps a failure with the pipeline stage it happened in."""

    def __init__(self, stage: str, cause: BaseException):
        self.stage = stage
        self.cause = cause
        super().__init__(f"{stage}: {cause}")

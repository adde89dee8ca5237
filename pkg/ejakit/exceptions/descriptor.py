from ejakit.exceptions.base import EjaException


class DescriptorException(EjaException):

    def __init__(self, what: str, reason: str) -> None:
        super().__init__(f"Malformed {what} descriptor: {reason}")

from typing import Any, Dict, Optional

from ejakit.exceptions.base import EjaException


class NumericalException(EjaException):
    ...


class ConvergenceException(NumericalException):

    def __init__(self, operation: str, diagnostics: Optional[Dict[str, Any]] = None) -> None:
        self.operation = operation
        self.diagnostics = diagnostics or {}
        super().__init__(f"{operation} did not converge: {self.diagnostics}")

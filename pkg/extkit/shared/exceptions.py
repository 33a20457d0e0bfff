class ServiceValidationError(Exception):
    pass


class DimensionMismatchError(ServiceValidationError):
    pass


class SingularPointError(ServiceValidationError):
    pass


class PoleError(SingularPointError):
    pass


class NonFiniteResultError(ArithmeticError):
    pass


class SamplingError(RuntimeError):
    pass


class IntegrationError(RuntimeError):
    def __init__(self, message: str, last_time: float):
        super().__init__(message)
        self.last_time = last_time

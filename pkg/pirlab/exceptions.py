class PIRLabException(Exception):
    "Base pirlab exception."


class FieldException(PIRLabException):
    "Base exception class for prime-field errors."


class NotPrime(FieldException):
    "Raised when a field modulus is not a prime number."

    def __init__(self, modulus: int):
        self.modulus = modulus

    def __str__(self) -> str:
        return f"modulus {self.modulus} is not prime"


class ModulusOutOfRange(FieldException):
    "Raised when a field modulus does not fit the supported range [2, 2^31)."

    def __init__(self, modulus: int):
        self.modulus = modulus

    def __str__(self) -> str:
        return f"modulus {self.modulus} is outside [2, 2^31)"


class FieldMismatch(FieldException):
    "Raised when values from different prime fields are combined."

    def __init__(self, left: int, right: int):
        self.left = left
        self.right = right

    def __str__(self) -> str:
        return f"cannot combine elements of F_{self.left} and F_{self.right}"


class ZeroInverse(FieldException):
    "Raised when inverting zero."


class MatrixException(PIRLabException):
    "Base exception class for linear algebra errors."


class NoSolution(MatrixException):
    """
    Raised when ``D @ A = B`` has no solution.

    Args:
        row (int): zero-based index of the first row of ``B`` outside the row space of ``A``
    """

    def __init__(self, row: int):
        self.row = row

    def __str__(self) -> str:
        return f"row {self.row} of the target lies outside the row space"


class Singular(MatrixException):
    "Raised when inverting a singular matrix."


class BlockOutOfRange(MatrixException):
    "Raised when a column block does not exist in a matrix."


class ShapeMismatch(MatrixException):
    "Raised when matrix shapes are incompatible for an operation."


class SchemeException(PIRLabException):
    "Base exception class for scheme, enumeration and verification errors."


class InvalidParameters(SchemeException):
    "Raised when scheme parameters violate their invariants."


class KeyNotFound(SchemeException):
    "Raised when a (message index, key) pair is not part of a scheme table."

    def __init__(self, message_index: int, key: int):
        self.message_index = message_index
        self.key = key

    def __str__(self) -> str:
        return f"no realization for m={self.message_index}, f={self.key}"


class NonInjectiveScheme(SchemeException):
    "Raised when two keys produce the same query matrix for one message index."

    def __init__(self, message_index: int, first: int, second: int):
        self.message_index = message_index
        self.first = first
        self.second = second

    def __str__(self) -> str:
        return f"keys {self.first} and {self.second} share a query for m={self.message_index}"


class SchemeFormatError(SchemeException):
    """
    Raised when a scheme file cannot be parsed.

    Args:
        line (int): 1-based line number where parsing failed
        message (str): Description of the problem
    """

    def __init__(self, line: int, message: str):
        self.line = line
        self.message = message

    def __str__(self) -> str:
        return f"line {self.line}: {self.message}"


class BudgetExceeded(SchemeException):
    "Raised when an exhaustive enumeration would exceed its budget."

    def __init__(self, required: int, budget: int):
        self.required = required
        self.budget = budget

    def __str__(self) -> str:
        return f"enumeration needs at least {self.required} cells, budget is {self.budget}"


class NonUniformConditional(SchemeException):
    "Raised when a conditional response distribution is not uniform on a coset."


class InvalidCollusion(SchemeException):
    "Raised when a collusion size is outside the allowed range."

    def __init__(self, collusion: int, servers: int):
        self.collusion = collusion
        self.servers = servers

    def __str__(self) -> str:
        return f"collusion size {self.collusion} is invalid for {self.servers} servers"


class SubsetBudgetExceeded(SchemeException):
    "Raised when subset enumeration over message indices is too large."

    def __init__(self, messages: int, limit: int):
        self.messages = messages
        self.limit = limit

    def __str__(self) -> str:
        return f"{self.messages} messages exceed the subset limit of {self.limit}"


class ZeroDownload(SchemeException):
    "Raised when a scheme downloads no information for some message index."


class CorrectnessUnavailable(SchemeException):
    "Raised when no decoding matrix exists for a requested retrieval."

    def __init__(self, message_index: int, key: int):
        self.message_index = message_index
        self.key = key

    def __str__(self) -> str:
        return f"no decoding matrix exists for m={self.message_index}, f={self.key}"


class DecodingMismatch(SchemeException):
    "Raised when a decoded block differs from the requested message."


class CLIError(PIRLabException):
    "Raised when CLI arguments are invalid or cannot be resolved."


class ConfigValidationError(PIRLabException):
    "Raised when configuration validation fails."

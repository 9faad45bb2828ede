from enum import IntEnum


class ExitCode(IntEnum):
    """
    Process exit statuses of the command line interface.
    """

    OK = 0
    INTERNAL = 1
    PARSE = 3
    DISCONNECTED = 4
    CAPACITY = 5
    NOT_RAINBOW = 6
    INVALID = 7


class RainbowError(Exception):
    """
    Base class for every error raised by this package.
    """

    exit_code: ExitCode = ExitCode.INTERNAL


class GraphParseError(RainbowError, ValueError):
    exit_code = ExitCode.PARSE


class InvalidGraphError(RainbowError):
    exit_code = ExitCode.INVALID


class DisconnectedGraphError(RainbowError):
    exit_code = ExitCode.DISCONNECTED


class CapacityError(RainbowError):
    exit_code = ExitCode.CAPACITY


class OracleRefusal(RainbowError):
    exit_code = ExitCode.CAPACITY


class GenerationError(RainbowError):
    exit_code = ExitCode.INVALID


class ConstructionError(RainbowError, AssertionError):
    """
    A property the construction guarantees did not hold. Always a bug.
    """

    exit_code = ExitCode.INTERNAL

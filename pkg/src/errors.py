"""
Exception hierarchy for the Padovan block codec.

Input errors cover malformed text, files and shapes (CLI exit code 1).
Codec errors cover failures of the block algebra itself (CLI exit code 2).
"""


class PadovanError(Exception):
    """Root of every error raised by this package."""


class InputError(PadovanError):
    """The caller handed over text, a file or a shape that cannot be used."""


class CodecError(PadovanError):
    """Encoding or decoding a block failed."""


# Input errors

class TextNormalizationError(InputError):
    pass


class ShapeError(InputError):
    pass


class CodedFormatError(InputError):
    """A coded file does not follow the PADOVANC v1 format."""


class HeaderError(CodedFormatError):
    pass


class RowCountError(CodedFormatError):
    pass


class FieldCountError(CodedFormatError):
    pass


class IntegerSyntaxError(CodedFormatError):
    pass


class EntryRangeError(CodedFormatError):
    pass


# Codec errors

class MinorConditionError(CodecError):
    """A block reached the encoder with a zero (2,2) minor."""


class RemediationError(CodecError):
    """Prepending padding never produced blocks with nonzero minors."""


class SingularSystemError(CodecError):
    pass


class NonIntegerSolutionError(CodecError):
    pass


class CenterRangeError(CodecError):
    pass

import logging
from pathlib import Path
from typing import Union

from src.errors import InputError
from src.tasks.serializer import CodedMessage, parse, serialize

log = logging.getLogger(__name__)

PathLike = Union[str, Path]


class MessageLoader:
    """Class for reading and writing plaintext and coded message files."""

    def __init__(self, encoding="utf-8"):
        """
        Initialize with the plaintext encoding.

        Args:
            encoding: Text encoding of plaintext files
        """
        self.encoding = encoding

    def load_plaintext(self, file_path: PathLike) -> str:
        """
        Load a plaintext message.

        Line breaks separate words, so every line of the file is joined to
        the next with a single space. Line breaks at either end of the file
        are dropped.

        Args:
            file_path: Path to the plaintext file

        Returns:
            The message as one line of text
        """
        raw = self._read_text(file_path)
        return " ".join(raw.strip("\r\n").splitlines())

    def save_plaintext(self, file_path: PathLike, text: str) -> Path:
        """
        Write a decoded message followed by a single line feed.

        Args:
            file_path: Destination path
            text: Decoded message

        Returns:
            Path written
        """
        return self._write(file_path, (text + "\n").encode(self.encoding))

    def load_coded(self, file_path: PathLike) -> CodedMessage:
        """
        Load a coded message file.

        Args:
            file_path: Path to a PADOVANC v1 file

        Returns:
            Parsed CodedMessage
        """
        return parse(self._read(file_path))

    def save_coded(self, file_path: PathLike, coded: CodedMessage) -> Path:
        """
        Write a coded message file.

        Args:
            file_path: Destination path
            coded: CodedMessage to serialize

        Returns:
            Path written
        """
        return self._write(file_path, serialize(coded))

    def _read(self, file_path: PathLike) -> bytes:
        path = Path(file_path)
        try:
            data = path.read_bytes()
        except OSError as e:
            raise InputError(f"Cannot read {path}: {e.strerror or e}") from None
        log.debug("Read %d bytes from %s", len(data), path)
        return data

    def _read_text(self, file_path: PathLike) -> str:
        data = self._read(file_path)
        try:
            return data.decode(self.encoding)
        except UnicodeDecodeError as e:
            raise InputError(f"{file_path} is not valid {self.encoding} text: {e}") from None

    def _write(self, file_path: PathLike, data: bytes) -> Path:
        path = Path(file_path)
        try:
            path.write_bytes(data)
        except OSError as e:
            raise InputError(f"Cannot write {path}: {e.strerror or e}") from None
        log.debug("Wrote %d bytes to %s", len(data), path)
        return path

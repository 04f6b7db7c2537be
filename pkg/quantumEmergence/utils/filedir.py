"""Handle operations with files and directories"""
import logging
import os

from quantumEmergence.exceptions import OutputError

logger = logging.getLogger(__name__)


class FileDirectory:
    """Handle common operations with files and directories"""

    def __init__(self):
        pass

    @staticmethod
    def check_directory(directory: str) -> None:
        """
        Check if a directory exists, if not it creates it. OutputError
        when it cannot be created
        """

        if directory == "" or os.path.isdir(directory):
            return

        try:
            os.makedirs(directory)
        except OSError as error:
            raise OutputError(
                f"Directory {directory} cannot be created: {error}"
            ) from error

        logger.info("created directory %s", directory)

    @staticmethod
    def file_exists(location: str, exit_operation: bool = False) -> bool:
        """
        Check if a location is a file, if not raises OutputError
        depending on the value of exit_operation
        """

        file_exists = os.path.isfile(location)

        if not file_exists and exit_operation:
            file_name = os.path.basename(location)
            raise OutputError(f"File {file_name} NOT FOUND!")

        return file_exists

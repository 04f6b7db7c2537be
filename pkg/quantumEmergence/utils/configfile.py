"""Read typed values out of configuration files"""
from configparser import ConfigParser, ExtendedInterpolation
from typing import Iterable, List

from quantumEmergence.exceptions import InvalidParameterError

###############################################################################
ENTRY_TYPES = {"float": float, "int": int, "str": str}


class ConfigurationFile:
    """Manage common operation with configuration files.
    For instance:

        [sweep]
        phi_list = 0, 0.392699, 0.785398

    when reading phi_list I can inmediately get it as a list of floats,
    in addition, I can get a whole section in the configuration file
    as a dictionary with the values converted to bool, int or float

    """

    def __init__(self):
        pass

    ###########################################################################
    @staticmethod
    def read(locations: Iterable[str]) -> ConfigParser:
        """
        ConfigParser with extended interpolation. Missing files are
        skipped, as ConfigParser.read does.
        """

        parser = ConfigParser(interpolation=ExtendedInterpolation())
        parser.read(list(locations), encoding="utf-8")

        return parser

    ###########################################################################
    def section_to_dictionary(self, section_items: Iterable) -> dict:
        """
        Converts a section in the configuration file to a dictionary
        with the values converted to bool, int, float or str

        PARAMETERS
            section_items: items in a section of the configuration file

        OUTPUTS
            section_dictionary: items transformed
        """
        section_dictionary = dict(section_items)

        for key, value in section_dictionary.items():
            section_dictionary[key] = self._get_value_from_string(value)

        return section_dictionary

    ###########################################################################
    def entry_to_list(self, entry: str, entry_type: str) -> list:
        """

        PARAMETERS

            entry: a coma separated string
                phi_list: 0, 0.392699, 0.785398

            entry_type: either float, int or str

        OUTPUTS
            entry_list: list of elements in entry with the type
                0, 0.392699, 0.785398 --> [0.0, 0.392699, 0.785398]
        """

        if entry_type not in ENTRY_TYPES:
            raise InvalidParameterError(f"unknown entry type: {entry_type}")

        items = [item.strip() for item in entry.split(",")]

        if items == [""]:
            return []

        if "" in items:
            raise InvalidParameterError(f"malformed list: {entry!r}")

        convert = ENTRY_TYPES[entry_type]
        entry_list: List = []

        for item in items:

            try:
                entry_list.append(convert(item))
            except ValueError as error:
                raise InvalidParameterError(
                    f"{item!r} in {entry!r} is not {entry_type}"
                ) from error

        return entry_list

    ###########################################################################
    @staticmethod
    def _get_value_from_string(string: str):
        """
        Get value from string variable, could be: bool, int, float or str
        """
        string = string.strip()
        #######################################################################
        # check for bool
        if string in ("True", "False"):

            return string == "True"

        #######################################################################
        # check for int, then float
        for convert in (int, float):

            try:
                return convert(string)
            except ValueError:
                continue

        return string

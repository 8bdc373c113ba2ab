"""PyHasse run configuration."""
from __future__ import annotations

from collections.abc import Mapping

from .constants import (
    CONF_CLASS_NUMBER_BUDGET,
    CONF_OUTPUT,
    CONF_OUTPUT_FORMAT,
    CONF_WORKERS,
    DEFAULT_CONFIGURATION,
    OUTPUT_FORMATS,
)
from .exceptions import InvalidParameterError
from .logging import _LOGGER


class Configuration(dict):
    """
    PyHasse Configuration class.

    DESCRIPTION:
        This class holds the options of a run: the number of sieve
        workers, the class number budget, the output format and the
        output path.

    USAGE:
        This object may be used as a dictionary keyed by option name.
        Defaults come from DEFAULT_CONFIGURATION and are overridden by
        parse(), which validates every key and value.

    EXAMPLE:
        # Configuration({"workers": 4})["workers"]
        4

    """

    def __init__(self, options: Mapping | None = None):
        """
        Initialize configuration class.

        options: mapping of option names to override
        """
        super().__init__(DEFAULT_CONFIGURATION)

        if options is not None:
            self.parse(options)

    def parse(self, options: Mapping) -> None:
        """
        Validate and apply option overrides.

        options: mapping of option names to values; None values are skipped
        """
        for key, value in options.items():
            if key not in DEFAULT_CONFIGURATION:
                raise InvalidParameterError(f"Unknown configuration option {key}")
            if value is None:
                continue
            if key == CONF_WORKERS and (not isinstance(value, int) or value < 1):
                raise InvalidParameterError(f"workers must be an integer >= 1, got {value}")
            if key == CONF_CLASS_NUMBER_BUDGET and (not isinstance(value, int) or value < 3):
                raise InvalidParameterError(
                    f"class_number_budget must be an integer >= 3, got {value}"
                )
            if key == CONF_OUTPUT_FORMAT and value not in OUTPUT_FORMATS:
                raise InvalidParameterError(
                    f"output_format must be one of {', '.join(OUTPUT_FORMATS)}, got {value}"
                )
            if key == CONF_OUTPUT:
                value = str(value)
            self[key] = value

        _LOGGER.debug("Configuration: %s", dict(self))

    @property
    def workers(self) -> int:
        """Return the number of sieve workers."""
        return self[CONF_WORKERS]

    @property
    def class_number_budget(self) -> int:
        """Return the largest |D| class_number may enumerate."""
        return self[CONF_CLASS_NUMBER_BUDGET]

    @property
    def output_format(self) -> str:
        """Return the output format."""
        return self[CONF_OUTPUT_FORMAT]

    @property
    def output(self) -> str | None:
        """Return the output path, or None for standard output."""
        return self[CONF_OUTPUT]

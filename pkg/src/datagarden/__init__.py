"""datagarden: questionnaire data to an explorable 3D garden scene."""

__version__ = "0.1.0"

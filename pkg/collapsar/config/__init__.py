"""
Configuration management module for collapsar
"""

from .manager import Config, ConfigManager, OutputFormat

__all__ = ["Config", "ConfigManager", "OutputFormat"]

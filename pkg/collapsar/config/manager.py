#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Configuration classes and enums for collapsar
"""
import json
import logging
import os
from dataclasses import dataclass, fields
from enum import Enum
from pathlib import Path
from typing import Any, Dict, Optional

import yaml

logger = logging.getLogger(__name__)

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


class OutputFormat(Enum):
    """Output format enumeration"""
    TEXT = "text"
    JSON = "json"
    MARKDOWN = "markdown"


@dataclass
class Config:
    """Configuration for collapsar runs"""
    # Output configuration
    output_format: OutputFormat = OutputFormat.TEXT
    output_dir: Optional[str] = None
    enable_colors: bool = True
    log_level: str = "WARNING"

    # Parallelism (None = all CPUs, capped by COLLAPSAR_THREADS)
    threads: Optional[int] = None

    # Diagram enumeration
    max_area: int = 3
    max_area_limit: int = 6
    max_tree_edges: int = 1
    sphere_max_area: int = 4

    # Cover balls
    radius: int = 4
    convexity_samples: int = 200
    max_flips: int = 4

    # Certification search
    refutation_max_faces: int = 3
    refutation_max_candidates: int = 2000
    collapse_state_limit: int = 200000
    n_collapsing: int = 3

    # Word problem
    unsafe: bool = False
    seed: int = 0
    oracle_max_area: int = 3
    oracle_max_length: int = 24

    def __post_init__(self):
        """Validate configuration after initialization"""
        if isinstance(self.output_format, str):
            self.output_format = OutputFormat(self.output_format)
        self.validate()

    def validate(self) -> None:
        """Validate configuration values"""
        if self.log_level.upper() not in LOG_LEVELS:
            raise ValueError(f"log_level must be one of {', '.join(LOG_LEVELS)}")

        if self.threads is not None and self.threads <= 0:
            raise ValueError("threads must be positive")

        if not 0 <= self.max_area <= self.max_area_limit:
            raise ValueError("max_area must be between 0 and max_area_limit")

        if self.max_tree_edges < 0:
            raise ValueError("max_tree_edges must be non-negative")

        if self.sphere_max_area < 1:
            raise ValueError("sphere_max_area must be positive")

        if self.radius < 0:
            raise ValueError("radius must be non-negative")

        if self.convexity_samples < 0:
            raise ValueError("convexity_samples must be non-negative")

        if self.max_flips < 0:
            raise ValueError("max_flips must be non-negative")

        if self.refutation_max_faces < 1 or self.refutation_max_candidates < 1:
            raise ValueError("refutation limits must be positive")

        if self.collapse_state_limit < 1:
            raise ValueError("collapse_state_limit must be positive")

        if self.n_collapsing < 1:
            raise ValueError("n_collapsing must be positive")

        if self.oracle_max_area < 0 or self.oracle_max_length < 0:
            raise ValueError("oracle limits must be non-negative")

    def to_dict(self) -> Dict[str, Any]:
        """Convert config to dictionary"""
        result = {}
        for key, value in self.__dict__.items():
            if isinstance(value, Enum):
                result[key] = value.value
            else:
                result[key] = value
        return result

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'Config':
        """Create config from dictionary; unknown keys are rejected"""
        known = {f.name for f in fields(cls)}
        unknown = sorted(set(data) - known)
        if unknown:
            raise ValueError(f"Unknown configuration keys: {', '.join(unknown)}")
        config_data = data.copy()

        if 'output_format' in config_data:
            config_data['output_format'] = OutputFormat(config_data['output_format'])

        return cls(**config_data)

    def merged(self, overrides: Dict[str, Any]) -> 'Config':
        """Copy with the non-None overrides applied"""
        data = self.to_dict()
        data.update({k: v for k, v in overrides.items() if v is not None})
        return Config.from_dict(data)


class ConfigManager:
    """Configuration manager for loading and saving configurations"""

    DEFAULT_CONFIG_PATHS = [
        "config/collapsar.yaml",
        "~/.collapsar/config.yaml",
        "/etc/collapsar/config.yaml"
    ]

    @staticmethod
    def load_config(config_file: Optional[str] = None) -> Config:
        """Load configuration from file or use defaults"""
        config = Config()

        config_path = ConfigManager._find_config_file(config_file)

        if config_path:
            try:
                config_data = ConfigManager._load_config_file(config_path)
                config = Config.from_dict(config_data)
            except (OSError, ValueError, yaml.YAMLError) as e:
                logger.warning("Failed to load config file %s: %s; using defaults", config_path, e)

        return config

    @staticmethod
    def _find_config_file(config_file: Optional[str] = None) -> Optional[str]:
        """Find configuration file to use"""
        if config_file:
            if os.path.exists(config_file):
                return config_file
            else:
                raise FileNotFoundError(f"Specified config file not found: {config_file}")

        for path in ConfigManager.DEFAULT_CONFIG_PATHS:
            expanded_path = os.path.expanduser(path)
            if os.path.exists(expanded_path):
                return expanded_path

        return None

    @staticmethod
    def _load_config_file(config_path: str) -> Dict[str, Any]:
        """Load configuration data from file"""
        path = Path(config_path)

        with open(config_path, 'r', encoding='utf-8') as f:
            if path.suffix.lower() in ['.yaml', '.yml']:
                return yaml.safe_load(f) or {}
            elif path.suffix.lower() == '.json':
                return json.load(f)
            else:
                raise ValueError(f"Unsupported config file format: {path.suffix}")

    @staticmethod
    def save_config(config: Config, config_file: str) -> None:
        """Save configuration to file"""
        path = Path(config_file)
        path.parent.mkdir(parents=True, exist_ok=True)

        config_data = config.to_dict()

        with open(config_file, 'w', encoding='utf-8') as f:
            if path.suffix.lower() in ['.yaml', '.yml']:
                yaml.safe_dump(config_data, f, default_flow_style=False, indent=2)
            elif path.suffix.lower() == '.json':
                json.dump(config_data, f, indent=2)
            else:
                raise ValueError(f"Unsupported config file format: {path.suffix}")

    @staticmethod
    def create_default_config(config_file: str) -> None:
        """Create a default configuration file"""
        ConfigManager.save_config(Config(), config_file)
        logger.info("Default configuration saved to %s", config_file)

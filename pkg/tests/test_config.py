#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Tests for config module
"""
import sys
import os
import json
import pytest
import yaml
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from collapsar.config import Config, ConfigManager, OutputFormat


class TestConfig:
    """Test cases for Config"""

    def test_defaults(self):
        config = Config()
        assert config.output_format == OutputFormat.TEXT
        assert config.max_area == 3
        assert config.radius == 4
        assert config.unsafe is False
        assert config.threads is None
        assert config.max_tree_edges == 1

    def test_format_from_string(self):
        assert Config(output_format="json").output_format == OutputFormat.JSON

    def test_validation(self):
        with pytest.raises(ValueError):
            Config(max_area=7)
        with pytest.raises(ValueError):
            Config(threads=0)
        with pytest.raises(ValueError):
            Config(log_level="LOUD")
        with pytest.raises(ValueError):
            Config(radius=-1)
        with pytest.raises(ValueError):
            Config(n_collapsing=0)
        with pytest.raises(ValueError):
            Config(max_tree_edges=-1)

    def test_dict_roundtrip(self):
        config = Config(output_format=OutputFormat.MARKDOWN, radius=6, seed=7)
        data = config.to_dict()
        assert data['output_format'] == "markdown"
        assert Config.from_dict(data) == config

    def test_unknown_keys_rejected(self):
        with pytest.raises(ValueError, match="cpu_threshold"):
            Config.from_dict({'cpu_threshold': 80})

    def test_merged_skips_none(self):
        config = Config(radius=5).merged({'radius': None, 'max_area': 2, 'unsafe': True})
        assert config.radius == 5
        assert config.max_area == 2
        assert config.unsafe is True


class TestConfigManager:
    """Test cases for ConfigManager"""

    def test_yaml_roundtrip(self, tmp_path):
        path = tmp_path / "collapsar.yaml"
        ConfigManager.save_config(Config(radius=6, output_format=OutputFormat.JSON), str(path))
        data = yaml.safe_load(path.read_text())
        assert data['radius'] == 6
        loaded = ConfigManager.load_config(str(path))
        assert loaded.radius == 6
        assert loaded.output_format == OutputFormat.JSON

    def test_json_roundtrip(self, tmp_path):
        path = tmp_path / "collapsar.json"
        ConfigManager.save_config(Config(seed=11), str(path))
        assert json.loads(path.read_text())['seed'] == 11
        assert ConfigManager.load_config(str(path)).seed == 11

    def test_unsupported_suffix(self, tmp_path):
        with pytest.raises(ValueError):
            ConfigManager.save_config(Config(), str(tmp_path / "collapsar.toml"))

    def test_missing_file(self, tmp_path):
        with pytest.raises(FileNotFoundError):
            ConfigManager.load_config(str(tmp_path / "absent.yaml"))

    def test_invalid_file_falls_back_to_defaults(self, tmp_path):
        path = tmp_path / "bad.yaml"
        path.write_text("max_area: 99\n")
        assert ConfigManager.load_config(str(path)) == Config()

    def test_empty_file(self, tmp_path):
        path = tmp_path / "empty.yaml"
        path.write_text("")
        assert ConfigManager.load_config(str(path)) == Config()

    def test_create_default_config(self, tmp_path):
        path = tmp_path / "nested" / "default.yaml"
        ConfigManager.create_default_config(str(path))
        assert path.exists()
        assert ConfigManager.load_config(str(path)) == Config()

    def test_packaged_defaults_match(self):
        path = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))),
                            "collapsar", "config", "default.yaml")
        assert ConfigManager.load_config(path) == Config()

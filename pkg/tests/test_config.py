"""Scenario config parsing and validation tests."""

import pytest

from hexswarm.config import ConfigError, config_overrides, parse_config
from hexswarm.hexworld import HexCoord


class TestDefaults:
    def test_empty_text_gives_documented_defaults(self):
        cfg = parse_config("")
        assert cfg.controller == "ga"
        assert cfg.robots == 20
        assert cfg.radius == 15
        assert cfg.margin == 1
        assert cfg.seed == 0
        assert cfg.max_ticks == 500
        assert cfg.comm_range == 2
        assert cfg.ttl == 5
        assert cfg.sensing_radius == 8
        assert cfg.removals == []
        assert cfg.ga.population == 12
        assert cfg.aco.evaporation == 0.1
        assert cfg.bco.leader_timeout == 10

    def test_comments_and_blank_lines_are_ignored(self):
        cfg = parse_config("# a scenario\n\nrobots = 5\n")
        assert cfg.robots == 5


class TestSections:
    def test_aco_section_overrides_one_key(self):
        cfg = parse_config("controller = aco\n[aco]\nevaporation = 0.2\n")
        assert cfg.controller == "aco"
        assert cfg.aco.evaporation == 0.2
        assert cfg.aco.deposit_scale == 1.0  # untouched default
        assert cfg.aco.beta == 2.0

    def test_each_controller_section_parses(self):
        cfg = parse_config(
            "[ga]\npopulation = 8\n[aco]\nalpha = 1.5\n[bco]\nscout_prob = 0.4\n"
        )
        assert cfg.ga.population == 8
        assert cfg.aco.alpha == 1.5
        assert cfg.bco.scout_prob == 0.4

    def test_unknown_section_is_rejected_with_line(self):
        with pytest.raises(ConfigError, match="line 2"):
            parse_config("robots = 4\n[warp]\n")


class TestParseErrors:
    def test_unknown_key_reports_line_number(self):
        with pytest.raises(ConfigError, match=r"line 3.*speed_of_light"):
            parse_config("robots = 4\nseed = 1\nspeed_of_light = 3e8\n")

    def test_bad_value_reports_line_and_key(self):
        with pytest.raises(ConfigError, match=r"line 1.*robots"):
            parse_config("robots = many\n")

    def test_missing_equals_is_a_parse_error(self):
        with pytest.raises(ConfigError, match="line 1"):
            parse_config("robots 4\n")

    def test_coordinates_parse_with_spaces_and_negatives(self):
        cfg = parse_config("target = 9, -1\nentry = -9,1\n")
        assert cfg.target == HexCoord(9, -1)
        assert cfg.entry == HexCoord(-9, 1)

    def test_removals_parse(self):
        cfg = parse_config("removals = 100:3, 250:0\n")
        assert cfg.removals == [(100, 3), (250, 0)]


class TestValidation:
    def test_zero_robots_names_the_field(self):
        with pytest.raises(ConfigError, match="robots"):
            parse_config("robots = 0\n")

    def test_margin_not_below_radius_names_the_field(self):
        with pytest.raises(ConfigError, match="margin"):
            parse_config("radius = 5\nmargin = 5\ntarget = 1,0\nentry = 0,1\n")

    def test_inaccessible_target_names_the_field(self):
        with pytest.raises(ConfigError, match="target"):
            parse_config("radius = 5\nmargin = 1\ntarget = 5,0\nentry = 0,1\n")

    def test_too_many_robots_for_the_board(self):
        with pytest.raises(ConfigError, match="robots"):
            parse_config("radius = 2\nmargin = 1\ntarget = 1,0\nentry = -1,0\nrobots = 8\n")

    def test_removal_robot_id_out_of_range(self):
        with pytest.raises(ConfigError, match="removals"):
            parse_config("robots = 3\nremovals = 10:7\n")

    def test_bad_controller(self):
        with pytest.raises(ConfigError, match="controller"):
            parse_config("controller = pso\n")

    def test_bad_evaporation(self):
        with pytest.raises(ConfigError, match="evaporation"):
            parse_config("[aco]\nevaporation = 1.5\n")

    def test_odd_population_rejected(self):
        with pytest.raises(ConfigError, match="population"):
            parse_config("[ga]\npopulation = 7\n")


class TestOverrides:
    def test_override_replaces_top_level_field(self):
        cfg = parse_config("seed = 3\n")
        out = config_overrides(cfg, seed=9, controller="bco")
        assert out.seed == 9
        assert out.controller == "bco"
        assert cfg.seed == 3  # original untouched

    def test_none_values_are_ignored(self):
        cfg = parse_config("max_ticks = 77\n")
        out = config_overrides(cfg, max_ticks=None)
        assert out.max_ticks == 77

    def test_overrides_are_validated(self):
        cfg = parse_config("")
        with pytest.raises(ConfigError, match="controller"):
            config_overrides(cfg, controller="nope")

import sys
from pathlib import Path

# Add src directory to Python path
sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

from fractions import Fraction

import pytest

from intensity_distortion.core.errors import NoModerateRankError, ProfileFormatError
from intensity_distortion.core.profile import (
    ElicitationMode,
    Intensity,
    IntensivePreference,
    Profile,
    format_profile,
    intensity_rank,
    parse_profile,
    plurality_score,
    preference,
)


class TestIntensivePreference:
    """Tests for rankings with intensity flags."""

    @pytest.mark.unit
    def test_preference_builder_places_flags(self) -> None:
        """Test that intense positions are 1-based flag indices."""
        # Act
        pref = preference([2, 0, 1], intense=[2])

        # Assert
        assert pref.ranking == (2, 0, 1)
        assert pref.intensities == (Intensity.MILD, Intensity.INTENSE)

    @pytest.mark.unit
    def test_rank_of_and_ranks(self) -> None:
        """Test 1-based ranks."""
        pref = preference([2, 0, 1])

        assert pref.rank_of(2) == 1
        assert pref.rank_of(1) == 3
        assert pref.ranks() == [2, 3, 1]

    @pytest.mark.unit
    def test_invalid_ranking_rejected(self) -> None:
        """Test that non-permutations are rejected."""
        with pytest.raises(ValueError, match="not a permutation"):
            IntensivePreference((0, 0), (Intensity.MILD,))

    @pytest.mark.unit
    def test_wrong_flag_count_rejected(self) -> None:
        """Test that m-1 flags are required."""
        with pytest.raises(ValueError, match="needs 2 intensity flags"):
            IntensivePreference((0, 1, 2), (Intensity.MILD,))

    @pytest.mark.unit
    def test_intense_position_out_of_range(self) -> None:
        """Test that a flag position beyond m-1 is rejected."""
        with pytest.raises(ValueError, match="outside 1..2"):
            preference([0, 1, 2], intense=[3])


class TestIntensityRank:
    """Tests for the moderate-up-to-k rank."""

    @pytest.mark.unit
    def test_no_intense_flag_gives_m_minus_one(self) -> None:
        """Test that an all-Mild ranking is moderate up to m-1."""
        assert intensity_rank(preference([0, 1, 2, 3])) == 3

    @pytest.mark.unit
    def test_first_intense_flag(self) -> None:
        """Test that the first Intense flag decides the rank."""
        assert intensity_rank(preference([0, 1, 2, 3], intense=[2, 3])) == 1

    @pytest.mark.unit
    def test_leading_intense_flag_gives_zero(self) -> None:
        """Test that an Intense first pair gives rank 0."""
        assert intensity_rank(preference([1, 0], intense=[1])) == 0

    @pytest.mark.unit
    def test_single_alternative(self) -> None:
        """Test that m = 1 has no moderate rank."""
        with pytest.raises(NoModerateRankError):
            intensity_rank(preference([0]))


class TestProfile:
    """Tests for the Profile dataclass."""

    @pytest.mark.unit
    def test_alpha_range_validated(self) -> None:
        """Test that alpha outside [0, 1] is rejected."""
        with pytest.raises(ValueError, match="alpha must lie"):
            Profile(("a", "b"), (preference([0, 1]),), Fraction(3, 2))

    @pytest.mark.unit
    def test_size_mismatch_rejected(self) -> None:
        """Test that every agent ranks every alternative."""
        with pytest.raises(ValueError, match="expected 3"):
            Profile(("a", "b", "c"), (preference([0, 1]),), Fraction(1, 2))

    @pytest.mark.unit
    def test_with_helpers(self, polar_m2: Profile) -> None:
        """Test the copy-with helpers."""
        # Act
        voluntary = polar_m2.with_mode(ElicitationMode.VOLUNTARY)
        quarter = polar_m2.with_alpha(Fraction(1, 4))
        mild = polar_m2.with_intensities([[Intensity.MILD], [Intensity.MILD]])
        first = polar_m2.restricted_to([0])

        # Assert
        assert voluntary.mode is ElicitationMode.VOLUNTARY
        assert quarter.alpha == Fraction(1, 4)
        assert mild.preferences[0].intensities == (Intensity.MILD,)
        assert first.num_agents == 1
        assert polar_m2.preferences[0].intensities == (Intensity.INTENSE,)

    @pytest.mark.unit
    def test_alternative_index(self, polar_m2: Profile) -> None:
        """Test lookup by name."""
        assert polar_m2.alternative_index("a2") == 1
        with pytest.raises(ValueError, match="Unknown alternative"):
            polar_m2.alternative_index("zz")

    @pytest.mark.unit
    def test_plurality_score(self) -> None:
        """Test first-place counts."""
        profile = Profile(
            ("a", "b", "c"),
            (preference([0, 1, 2]), preference([0, 2, 1]), preference([2, 1, 0])),
            Fraction(1, 2),
        )
        assert plurality_score(profile, 0) == 2
        assert plurality_score(profile, 1) == 0
        with pytest.raises(ValueError):
            plurality_score(profile, 3)


class TestParseProfile:
    """Tests for the profile text format."""

    @pytest.mark.unit
    def test_parse_complete_profile(self, polar_m2: Profile) -> None:
        """Test that all keys and comments are handled."""
        assert polar_m2.alternative_names == ("a1", "a2")
        assert polar_m2.alpha == Fraction(1, 2)
        assert polar_m2.mode is ElicitationMode.MANDATORY
        assert polar_m2.preferences[0] == preference([0, 1], intense=[1])
        assert polar_m2.preferences[1] == preference([1, 0])

    @pytest.mark.unit
    def test_format_then_parse_preserves_profile(self, polar_m2: Profile) -> None:
        """Test that format_profile output parses back to the same profile."""
        text = format_profile(polar_m2)

        assert text.splitlines()[3] == "agent: a1 >> a2"
        assert parse_profile(text) == polar_m2

    @pytest.mark.unit
    def test_spacing_is_optional(self) -> None:
        """Test separators without surrounding spaces."""
        profile = parse_profile("alternatives: a b c\nalpha: 0.5\nagent: c>>a>b\n")

        assert profile.preferences[0] == preference([2, 0, 1], intense=[1])

    @pytest.mark.unit
    @pytest.mark.parametrize(
        ("text", "message"),
        [
            ("alternatives: a a\nalpha: 1/2\n", "duplicate alternative name"),
            ("alternatives: a b\nalpha: 1/2\nagent: a > x\n", "unknown alternative"),
            ("alternatives: a b\nalpha: half\n", "Invalid rational"),
            ("alternatives: a b\nalpha: 2\n", "alpha must lie"),
            ("alpha: 1/2\nagent: a > b\n", "Missing 'alternatives:'"),
            ("alternatives: a b\nagent: a > b\n", "Missing 'alpha:'"),
            ("alternatives: a b\nalpha: 1/2\nagent: a >>> b\n", "malformed separator"),
            ("alternatives: a b\nalpha: 1/2\nagent: a b\n", "malformed separator"),
            ("alternatives: a b c\nalpha: 1/2\nagent: a > b\n", "lists 2 of 3"),
            ("alternatives: a b\nalpha: 1/2\nagent: a > a\n", "duplicate alternative 'a'"),
            ("alternatives: a b\nalpha: 1/2\nmode: sometimes\n", "unknown mode"),
            ("alternatives: a b\nalpha: 1/2\nweight: 3\n", "unknown key"),
        ],
    )
    def test_parse_errors(self, text: str, message: str) -> None:
        """Test that malformed text raises ProfileFormatError."""
        with pytest.raises(ProfileFormatError, match=message):
            parse_profile(text)

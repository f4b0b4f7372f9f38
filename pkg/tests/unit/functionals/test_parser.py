"""汎関数指定文字列の解析テスト"""

import pytest

from acr_tool.errors import FunctionalSpecError, LengthMismatch
from acr_tool.functionals import (
    FunctionalFamily,
    parse_functional_spec,
    read_coefficients,
)


class TestParseFunctionalSpec:
    """parse_functional_spec のテスト"""

    def test_count(self):
        spec = parse_functional_spec("count")
        assert spec.family is FunctionalFamily.CODEWORD_COUNT
        assert spec.has_asymptotic_form
        assert spec.build(5).coefficient_vector() == (1.0,) * 5

    def test_undetected(self):
        spec = parse_functional_spec("undetected:0.3")
        assert spec.family is FunctionalFamily.UNDETECTED_ERROR
        assert spec.epsilon == 0.3
        f = spec.build(4)
        assert f.coefficient(1) == pytest.approx(0.3 * 0.7**3)

    def test_bhattacharyya(self):
        spec = parse_functional_spec("bhattacharyya:0.11")
        assert spec.family is FunctionalFamily.BHATTACHARYYA
        assert spec.epsilon == 0.11

    def test_expfam(self):
        spec = parse_functional_spec("expfam:2:0.5")
        assert spec.parameters == (2.0, 0.5)
        assert spec.epsilon is None
        assert spec.build(3).coefficient(3) == pytest.approx(8.0)

    def test_case_and_whitespace(self):
        assert (
            parse_functional_spec("  COUNT ").family is FunctionalFamily.CODEWORD_COUNT
        )

    def test_explicit(self, tmp_path):
        path = tmp_path / "phi.csv"
        path.write_text("phi\n1\n0.5\n2\n", encoding="utf-8")
        spec = parse_functional_spec(f"explicit:@{path}")
        assert spec.family is FunctionalFamily.EXPLICIT
        assert not spec.has_asymptotic_form
        assert spec.build(3).coefficient_vector() == (1.0, 0.5, 2.0)

    def test_explicit_length_mismatch(self, tmp_path):
        path = tmp_path / "phi.csv"
        path.write_text("phi\n1\n2\n", encoding="utf-8")
        spec = parse_functional_spec(f"explicit:@{path}")
        with pytest.raises(LengthMismatch):
            spec.build(3)

    @pytest.mark.parametrize(
        "text",
        [
            "unknown",
            "count:1",
            "undetected",
            "undetected:abc",
            "undetected:1.5",
            "bhattacharyya:0",
            "expfam:1",
            "expfam:-1:1",
            "explicit:phi.csv",
            "explicit:@",
        ],
    )
    def test_invalid(self, text):
        with pytest.raises(FunctionalSpecError):
            parse_functional_spec(text)


class TestReadCoefficients:
    """係数 CSV の読み込み"""

    def test_sorted_by_w(self, tmp_path):
        path = tmp_path / "phi.csv"
        path.write_text("w,phi\n2,5\n1,4\n3,6\n", encoding="utf-8")
        assert read_coefficients(path) == (4.0, 5.0, 6.0)

    def test_w_must_be_contiguous(self, tmp_path):
        path = tmp_path / "phi.csv"
        path.write_text("w,phi\n1,1\n3,2\n", encoding="utf-8")
        with pytest.raises(FunctionalSpecError, match="連番"):
            read_coefficients(path)

    def test_missing_phi_column(self, tmp_path):
        path = tmp_path / "phi.csv"
        path.write_text("value\n1\n", encoding="utf-8")
        with pytest.raises(FunctionalSpecError, match="phi"):
            read_coefficients(path)

    def test_non_numeric(self, tmp_path):
        path = tmp_path / "phi.csv"
        path.write_text("phi\n1\nx\n", encoding="utf-8")
        with pytest.raises(FunctionalSpecError):
            read_coefficients(path)

    def test_missing_file(self, tmp_path):
        with pytest.raises(FunctionalSpecError):
            read_coefficients(tmp_path / "missing.csv")

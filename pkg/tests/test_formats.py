import pytest

from argfacets import ParseError, parse_framework, random_af, render_framework

from oracles import EX1_ATTACKS, make_ex1

EX1_APX = "\n".join(
    [f"arg({n})." for n in "wsbmtep"]
    + [f"att({a},{b})." for a, b in EX1_ATTACKS]
)


class TestApx:
    def test_minimal(self):
        F = parse_framework("arg(a). arg(b). att(a,b).", "apx")
        assert F.n_arguments == 2 and F.n_attacks == 1
        assert F.has_attack("a", "b")

    def test_running_example(self):
        F = parse_framework(EX1_APX, "apx")
        assert F.n_arguments == 7 and F.n_attacks == 10
        assert F == make_ex1()

    def test_attack_without_declaration(self):
        with pytest.raises(ParseError, match="undeclared"):
            parse_framework("att(a,b).", "apx")

    def test_forward_reference_is_fine(self):
        F = parse_framework("att(a,b). arg(a). arg(b).", "apx")
        assert F.n_attacks == 1

    def test_duplicate_declaration(self):
        with pytest.raises(ParseError, match="line 2.*duplicate"):
            parse_framework("arg(a).\narg(a).", "apx")

    def test_malformed_line_reports_number(self):
        with pytest.raises(ParseError, match="line 3"):
            parse_framework("arg(a).\narg(b).\nbogus text\n", "apx")

    def test_empty_input(self):
        with pytest.raises(ParseError, match="no arguments"):
            parse_framework("% just a comment\n", "apx")

    def test_comments_and_whitespace(self):
        text = "% header\n  arg( a ).   % trailing\n\narg(b).\natt( a , b ).\n"
        F = parse_framework(text, "apx")
        assert F.n_arguments == 2 and F.has_attack("a", "b")


class TestTgf:
    def test_basic(self):
        F = parse_framework("a\nb label ignored\n#\na b\n", "tgf")
        assert F.names() == ("a", "b")
        assert F.has_attack("a", "b")

    def test_edge_before_separator_is_node(self):
        with pytest.raises(ParseError):
            parse_framework("a\n#\na b\n#\n", "tgf")

    def test_unknown_edge_endpoint(self):
        with pytest.raises(ParseError, match="undeclared"):
            parse_framework("a\n#\na b\n", "tgf")

    def test_duplicate_node(self):
        with pytest.raises(ParseError, match="duplicate"):
            parse_framework("a\na\n#\n", "tgf")

    def test_short_edge_line(self):
        with pytest.raises(ParseError, match="two node ids"):
            parse_framework("a\n#\na\n", "tgf")


class TestIccma23:
    def test_basic(self):
        F = parse_framework("p af 3\n# comment\n1 2\n2 3\n", "iccma23")
        assert F.names() == ("1", "2", "3")
        assert F.has_attack("1", "2") and F.has_attack("2", "3")

    def test_missing_header(self):
        with pytest.raises(ParseError, match="header"):
            parse_framework("1 2\n", "iccma23")

    def test_duplicate_header(self):
        with pytest.raises(ParseError, match="duplicate"):
            parse_framework("p af 2\np af 2\n", "iccma23")

    def test_out_of_range(self):
        with pytest.raises(ParseError, match="out of range"):
            parse_framework("p af 2\n1 3\n", "iccma23")

    def test_zero_arguments(self):
        with pytest.raises(ParseError, match="zero"):
            parse_framework("p af 0\n", "iccma23")

    def test_non_integer_endpoint(self):
        with pytest.raises(ParseError, match="integers"):
            parse_framework("p af 2\n1 x\n", "iccma23")


class TestRoundTrip:
    def test_unknown_format(self, ex1):
        with pytest.raises(ParseError):
            render_framework(ex1, "nope")
        with pytest.raises(ParseError):
            parse_framework("x", "nope")

    @pytest.mark.parametrize("fmt", ["apx", "tgf"])
    def test_name_preserving_roundtrip(self, ex1, fmt):
        again = parse_framework(render_framework(ex1, fmt), fmt)
        assert again == ex1

    def test_iccma23_structural_roundtrip(self, ex1):
        again = parse_framework(render_framework(ex1, "iccma23"), "iccma23")
        # names become positional 1..N; the attack structure survives
        assert again.names() == tuple(str(i) for i in range(1, 8))
        assert again.attacks == ex1.attacks

    @pytest.mark.parametrize("seed", range(12))
    def test_random_roundtrips(self, seed):
        F = random_af(1 + seed % 7, (0.0, 0.2, 0.5, 1.0)[seed % 4], seed)
        for fmt in ("apx", "tgf"):
            assert parse_framework(render_framework(F, fmt), fmt) == F
        again = parse_framework(render_framework(F, "iccma23"), "iccma23")
        assert again.attacks == F.attacks
        assert again.n_arguments == F.n_arguments

    def test_single_argument_apx(self):
        F = parse_framework("arg(a).", "apx")
        assert render_framework(F, "apx") == "arg(a).\n"

    def test_fx_rendering(self, fx):
        text = render_framework(fx, "apx")
        again = parse_framework(text, "apx")
        assert again.n_arguments == 4 and again.n_attacks == 4

import pytest

from camina.catalog import (
    ParseError,
    UnknownLabel,
    builtin,
    builtin_catalog,
    format_cycles,
    parse_cycles,
    parse_group_file,
)
from camina.perm import Permutation
from camina.structure import conjugacy_classes, is_frobenius_with_kernel, subgroups


FAMILY_ORDERS = [
    ("C1", 1),
    ("C9", 9),
    ("D3", 6),
    ("D12", 24),
    ("S2", 2),
    ("S4", 24),
    ("A3", 3),
    ("A5", 60),
    ("Q8", 8),
    ("Q16", 16),
    ("Q32", 32),
    ("SL23", 24),
    ("Frob(7:3)", 21),
    ("Frob(5:4)", 20),
    ("Frob(11:10)", 110),
    ("Heis(3)", 27),
    ("C2xS3", 12),
    ("S3xS3", 36),
    ("C2xC2xC2", 8),
]


class TestBuiltin:
    @pytest.mark.parametrize("label,order", FAMILY_ORDERS)
    def test_family_orders(self, label, order):
        entry = builtin(label)
        assert entry.group().order == order
        assert entry.label == label
        assert entry.provenance == "builtin"

    def test_frob_has_frobenius_kernel(self, frob21):
        kernel = next(H for H in subgroups(frob21) if len(H) == 7)
        assert is_frobenius_with_kernel(frob21, kernel)

    def test_q8_unique_involution(self, q8):
        assert sum(1 for i in range(q8.order) if q8.element_order(i) == 2) == 1

    def test_heis3_exponent_three(self):
        G = builtin("Heis(3)").group()
        assert all(G.element_order(i) in (1, 3) for i in range(G.order))

    def test_unknown_labels(self):
        for label in ["X5", "Frob(6:2)", "Frob(7:4)", "D2", "Heis(2)", "Heis(4)", "Q12", "S1"]:
            with pytest.raises(UnknownLabel):
                builtin(label)

    def test_catalog_sorted_and_unique(self):
        entries = builtin_catalog()
        labels = [e.label for e in entries]
        assert len(set(labels)) == len(labels)
        orders = [e.group().order for e in entries]
        assert orders == sorted(orders)
        assert all(o <= 200 for o in orders)

    def test_criterion_families_present(self):
        labels = {e.label for e in builtin_catalog()}
        required = {"S3", "S4", "A4", "A5", "Q8", "Q16", "SL23", "Frob(7:3)", "Frob(5:4)", "Heis(3)"}
        required |= {f"D{n}" for n in range(4, 13)}
        assert required <= labels


class TestCycleNotation:
    def test_parse_basic(self):
        p = parse_cycles("(1,2)(3,4,5)", 5)
        assert p == Permutation.from_cycles(5, [(0, 1), (2, 3, 4)])

    def test_parse_with_spaces(self):
        assert parse_cycles("(1, 2) (3, 4, 5)".replace(" ", ""), 5) == parse_cycles("(1,2)(3,4,5)", 5)

    def test_identity(self):
        assert parse_cycles("()", 3) == Permutation.identity(3)

    def test_repeated_point_rejected(self):
        with pytest.raises(ValueError):
            parse_cycles("(1,2)(2,3)", 3)

    def test_out_of_range_rejected(self):
        with pytest.raises(ValueError):
            parse_cycles("(1,4)", 3)
        with pytest.raises(ValueError):
            parse_cycles("(0,1)", 3)

    def test_malformed_rejected(self):
        for text in ["1,2", "(1,2", "(1,,2)", "(a,b)", "(1)(", ""]:
            with pytest.raises(ValueError):
                parse_cycles(text, 4)

    def test_format_round_trip(self):
        for p in [
            Permutation.identity(4),
            Permutation.from_cycles(5, [(0, 1), (2, 3, 4)]),
            Permutation.from_cycles(6, [(0, 5)]),
        ]:
            assert parse_cycles(format_cycles(p), p.degree) == p


class TestGroupFile:
    def test_s3_file(self, tmp_path):
        f = tmp_path / "s3.grp"
        f.write_text("# symmetric group on 3 points\ndegree 3\n(1,2)\n(1,2,3)\n")
        entry = parse_group_file(f)
        assert entry.degree == 3
        assert entry.group().order == 6
        assert entry.provenance == "file"
        assert entry.label == "file:s3.grp"

    def test_trivial_file(self, tmp_path):
        f = tmp_path / "t.grp"
        f.write_text("degree 1\n")
        assert parse_group_file(f).group().order == 1

    def test_repeated_point_error_has_line(self, tmp_path):
        f = tmp_path / "bad.grp"
        f.write_text("degree 3\n(1,2)(2,3)\n")
        with pytest.raises(ParseError) as exc:
            parse_group_file(f)
        assert exc.value.line == 2

    def test_missing_degree(self, tmp_path):
        f = tmp_path / "bad.grp"
        f.write_text("(1,2)\n")
        with pytest.raises(ParseError):
            parse_group_file(f)

    def test_point_out_of_range(self, tmp_path):
        f = tmp_path / "bad.grp"
        f.write_text("degree 3\n\n# comment\n(1,5)\n")
        with pytest.raises(ParseError) as exc:
            parse_group_file(f)
        assert exc.value.line == 4

    def test_comments_and_blanks_ignored(self, tmp_path):
        f = tmp_path / "ok.grp"
        f.write_text("\n# header\ndegree 4  # not allowed? yes: inline comment\n(1,2,3,4)\n\n")
        entry = parse_group_file(f)
        assert entry.group().order == 4


class TestRegenerationDeterminism:
    def test_builtin_members_regenerate_identically(self):
        for label in ["S4", "Q16", "Frob(7:3)", "Heis(3)", "C2xA4"]:
            a = builtin(label).group()
            b = builtin(label).group()
            assert [p.images for p in a.elements] == [p.images for p in b.elements]
            assert conjugacy_classes(a).reps == conjugacy_classes(b).reps
            assert [H.members for H in subgroups(a)] == [H.members for H in subgroups(b)]
